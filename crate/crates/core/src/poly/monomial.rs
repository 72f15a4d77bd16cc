use std::cmp::Ordering;
use std::fmt;

use super::Var;

/// A (Laurent) monomial: variables with nonzero exponents, sorted by variable id.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(Var, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, i32)>) -> Self {
        let mut v: Vec<(Var, i32)> = Vec::new();
        for (x, e) in pairs {
            v.push((x, e));
        }
        v.sort_by_key(|p| p.0);
        let mut out: Vec<(Var, i32)> = Vec::with_capacity(v.len());
        for (x, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == x => last.1 += e,
                _ => out.push((x, e)),
            }
        }
        out.retain(|p| p.1 != 0);
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(Var, i32)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> i32 {
        self.0
            .binary_search_by_key(&v, |p| p.0)
            .map_or(0, |i| self.0[i].1)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|p| p.1 as i64).sum()
    }

    pub fn is_laurent(&self) -> bool {
        self.0.iter().any(|p| p.1 < 0)
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.iter().map(|p| p.0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// `self / other` if every exponent stays non-negative.
    pub fn divide(&self, other: &Monomial) -> Option<Monomial> {
        let q = self.mul(&other.inverse());
        (!q.is_laurent()).then_some(q)
    }

    /// Lexicographic monomial order by variable id (smaller id is more significant).
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        lex_walk(&self.0, &other.0, |x, y| x.cmp(&y))
    }

    /// Graded lexicographic order on variable names, larger monomials first;
    /// the canonical printing order.
    pub fn display_cmp(&self, other: &Monomial) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| lex_walk(&other.by_name(), &self.by_name(), |x, y| x.name_cmp(y)))
    }

    pub fn by_name(&self) -> Vec<(Var, i32)> {
        let mut v = self.0.clone();
        v.sort_by(|a, b| a.0.name_cmp(b.0));
        v
    }
}

fn lex_walk(a: &[(Var, i32)], b: &[(Var, i32)], cmp: impl Fn(Var, Var) -> Ordering) -> Ordering {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(x), None) => return x.1.cmp(&0),
            (None, Some(y)) => return 0.cmp(&y.1),
            (Some(x), Some(y)) => match cmp(x.0, y.0) {
                Ordering::Less => return x.1.cmp(&0),
                Ordering::Greater => return 0.cmp(&y.1),
                Ordering::Equal => {
                    if x.1 != y.1 {
                        return x.1.cmp(&y.1);
                    }
                    i += 1;
                    j += 1;
                }
            },
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .by_name()
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    v.name()
                } else {
                    format!("{}^{}", v.name(), e)
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: &[(&str, i32)]) -> Monomial {
        Monomial::from_pairs(p.iter().map(|&(n, e)| (Var::new(n), e)))
    }

    #[test]
    fn multiply_and_cancel() {
        let a = m(&[("mx", 2), ("my", -1)]);
        let b = m(&[("my", 1)]);
        assert_eq!(a.mul(&b), m(&[("mx", 2)]));
        assert!(a.is_laurent());
        assert_eq!(a.mul(&a.inverse()), Monomial::one());
    }

    #[test]
    fn lex_is_multiplicative() {
        let x = m(&[("lx", 1)]);
        let y = m(&[("ly", 1)]);
        let xy = x.mul(&y);
        assert_eq!(xy.lex_cmp(&y), Ordering::Greater);
        assert_eq!(x.lex_cmp(&y.pow(5)), Ordering::Greater);
        assert_eq!(y.lex_cmp(&x), Ordering::Less);
    }

    #[test]
    fn divides() {
        let a = m(&[("dx", 2), ("dy", 1)]);
        assert_eq!(a.divide(&m(&[("dx", 1)])), Some(m(&[("dx", 1), ("dy", 1)])));
        assert_eq!(a.divide(&m(&[("dz", 1)])), None);
    }
}
