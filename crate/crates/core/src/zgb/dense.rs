//! Dense exponent-vector polynomials used inside the Gröbner engine.

use std::cmp::Ordering;

use crate::poly::{Coeff, Monomial, Polynomial, Var};

pub type Exps = Vec<u32>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    /// Graded reverse lexicographic; the last declared variable is the smallest.
    #[default]
    Grevlex,
    /// Lexicographic; the first declared variable is the largest.
    Lex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => {
                let da: u64 = a.iter().map(|&x| x as u64).sum();
                let db: u64 = b.iter().map(|&x| x as u64).sum();
                da.cmp(&db).then_with(|| {
                    for (x, y) in a.iter().zip(b).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn quotient(b: &[u32], a: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| y - x).collect()
}

pub fn lcm(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn product(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Terms sorted strictly decreasing in the order; no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DPoly<C> {
    pub terms: Vec<(Exps, C)>,
}

impl<C: Coeff> DPoly<C> {
    pub fn zero() -> Self {
        DPoly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Exps {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &C {
        &self.terms[0].1
    }

    pub fn from_poly(p: &Polynomial<C>, vars: &[Var], order: MonomialOrder) -> Option<Self> {
        let mut terms = Vec::with_capacity(p.num_terms());
        for (m, c) in p.terms() {
            let mut e = vec![0u32; vars.len()];
            for &(v, k) in m.pairs() {
                let i = vars.iter().position(|&x| x == v)?;
                if k < 0 {
                    return None;
                }
                e[i] = k as u32;
            }
            terms.push((e, c.clone()));
        }
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Some(DPoly { terms })
    }

    pub fn to_poly(&self, vars: &[Var]) -> Polynomial<C> {
        Polynomial::from_terms(self.terms.iter().map(|(e, c)| {
            let m = Monomial::from_pairs(
                vars.iter()
                    .zip(e)
                    .filter(|(_, &k)| k > 0)
                    .map(|(&v, &k)| (v, k as i32)),
            );
            (m, c.clone())
        }))
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        DPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn shift(&self, m: &[u32]) -> Self {
        DPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (product(e, m), x.clone()))
                .collect(),
        }
    }

    /// `self + c * x^m * g`.
    pub fn add_scaled(&self, c: &C, m: &[u32], g: &DPoly<C>, order: MonomialOrder) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut it = g
            .terms
            .iter()
            .map(|(e, x)| (product(e, m), x.clone() * c.clone()))
            .peekable();
        while i < self.terms.len() || it.peek().is_some() {
            let take_left = match (self.terms.get(i), it.peek()) {
                (Some(a), Some(b)) => order.cmp(&a.0, &b.0),
                (Some(_), None) => Ordering::Greater,
                (None, _) => Ordering::Less,
            };
            match take_left {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => out.push(it.next().unwrap()),
                Ordering::Equal => {
                    let (e, y) = it.next().unwrap();
                    let s = self.terms[i].1.clone() + y;
                    if !s.is_zero() {
                        out.push((e, s));
                    }
                    i += 1;
                }
            }
        }
        DPoly { terms: out }
    }

    pub fn add(&self, other: &DPoly<C>, order: MonomialOrder) -> Self {
        let zero = vec![
            0;
            self.terms
                .first()
                .or(other.terms.first())
                .map_or(0, |t| t.0.len())
        ];
        self.add_scaled(&C::one(), &zero, other, order)
    }

    /// Multiplies by the unit making the leading coefficient canonical.
    pub fn normalize(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => {
                let u = c.normalizing_unit();
                if u.is_one() {
                    self.clone()
                } else {
                    self.scale(&u)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::Grevlex;
        // x > y > z; x*z vs y^2: same degree, last var z: x*z has more z, so smaller
        assert_eq!(o.cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
        assert_eq!(o.cmp(&[0, 0, 3], &[1, 1, 0]), Ordering::Greater);
        assert_eq!(o.cmp(&[2, 0, 0], &[1, 1, 0]), Ordering::Greater);
    }

    #[test]
    fn lex_basics() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&[1, 0], &[0, 5]), Ordering::Greater);
    }
}
