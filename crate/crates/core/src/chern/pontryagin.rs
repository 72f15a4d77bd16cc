use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::ChernError;
use crate::exactmath::binomial;
use crate::poly::{Monomial, QPoly, Var};
use crate::zgb::{standard_basis, strong_groebner, Budget, IdealPresentation, StrongGB};

/// The even rational cohomology `P_{n,k} = Q[p_1..p_s, q_1..q_t] / (sum_j p_j q_{r-j}, 1 <= r <= s+t)`.
#[derive(Clone, Debug)]
pub struct PontryaginRing {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub t: usize,
    pub p_vars: Vec<Var>,
    pub q_vars: Vec<Var>,
    pub relations: Vec<QPoly>,
    /// Standard monomials, a `Q`-basis of the quotient.
    pub basis: Vec<Monomial>,
    gb: StrongGB<BigRational>,
    weights: HashMap<Var, u32>,
    index: HashMap<Monomial, usize>,
}

pub fn p_var(j: usize) -> Var {
    Var::indexed("p", j)
}

pub fn q_var(j: usize) -> Var {
    Var::indexed("q", j)
}

pub fn build_p(n: usize, k: usize) -> Result<PontryaginRing, ChernError> {
    if k < 2 || 2 * k > n {
        return Err(ChernError::Params(format!("need 2 <= k <= n/2, got ({n},{k})")));
    }
    let (s, t) = (k / 2, (n - k) / 2);
    let p_vars: Vec<Var> = (1..=s).map(p_var).collect();
    let q_vars: Vec<Var> = (1..=t).map(q_var).collect();
    let class = |vars: &[Var], j: usize| -> QPoly {
        match j {
            0 => QPoly::one(),
            j if j <= vars.len() => QPoly::var(vars[j - 1]),
            _ => QPoly::zero(),
        }
    };
    let relations: Vec<QPoly> = (1..=s + t)
        .map(|r| (0..=r.min(s)).map(|j| class(&p_vars, j) * class(&q_vars, r - j)).sum())
        .collect();
    let mut vars = p_vars.clone();
    vars.extend(q_vars.iter().copied());
    let gb = strong_groebner(&IdealPresentation::new(vars, relations.clone()), Budget::unlimited())?;
    let basis = standard_basis(&gb)?;
    let weights = p_vars
        .iter()
        .enumerate()
        .chain(q_vars.iter().enumerate())
        .map(|(i, &v)| (v, 4 * (i as u32 + 1)))
        .collect();
    let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let ring = PontryaginRing {
        n,
        k,
        s,
        t,
        p_vars,
        q_vars,
        relations,
        basis,
        gb,
        weights,
        index,
    };
    let expected = binomial((s + t) as u64, s as u64);
    if BigInt::from(ring.q_dimension()) != expected {
        return Err(ChernError::Internal(format!(
            "P({n},{k}) has dimension {} instead of {expected}",
            ring.q_dimension()
        )));
    }
    Ok(ring)
}

impl PontryaginRing {
    pub fn q_dimension(&self) -> usize {
        self.basis.len()
    }

    /// `p_j`, with `p_0 = 1` and `p_j = 0` above `s`.
    pub fn p(&self, j: usize) -> QPoly {
        match j {
            0 => QPoly::one(),
            j if j <= self.s => QPoly::var(self.p_vars[j - 1]),
            _ => QPoly::zero(),
        }
    }

    pub fn q(&self, j: usize) -> QPoly {
        match j {
            0 => QPoly::one(),
            j if j <= self.t => QPoly::var(self.q_vars[j - 1]),
            _ => QPoly::zero(),
        }
    }

    /// Cohomological degree (`|p_j| = |q_j| = 4j`).
    pub fn degree(&self, m: &Monomial) -> u32 {
        m.pairs().iter().map(|(v, e)| self.weights[v] * (*e as u32)).sum()
    }

    /// Real dimension of the Grassmannian, `k(n-k)`.
    pub fn manifold_dimension(&self) -> u32 {
        (self.k * (self.n - self.k)) as u32
    }

    /// Default truncation degree for classes.
    pub fn default_cap(&self) -> u32 {
        2 * self.manifold_dimension()
    }

    /// Nothing survives above `4st`.
    pub fn top_degree(&self) -> u32 {
        (4 * self.s * self.t) as u32
    }

    pub fn normal_form(&self, f: &QPoly) -> Result<QPoly, ChernError> {
        Ok(self.gb.normal_form(f)?)
    }

    pub fn contains(&self, f: &QPoly) -> Result<bool, ChernError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn coordinates(&self, f: &QPoly) -> Result<Vec<BigRational>, ChernError> {
        let nf = self.normal_form(f)?;
        let mut v = vec![BigRational::zero(); self.basis.len()];
        for (m, c) in nf.terms() {
            let i = self
                .index
                .get(m)
                .ok_or_else(|| ChernError::Internal(format!("normal form term {m} is not standard")))?;
            v[*i] = c.clone();
        }
        Ok(v)
    }

    /// Dimension of each graded piece.
    pub fn graded_dimensions(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for m in &self.basis {
            *out.entry(self.degree(m)).or_insert(0) += 1;
        }
        out
    }

    /// Reduces `f` and drops everything above `cap`.
    pub fn class(&self, f: &QPoly, cap: u32) -> Result<CohClass, ChernError> {
        let nf = self.normal_form(&self.truncate(f, cap))?;
        Ok(CohClass {
            value: self.truncate(&nf, cap),
            cap,
        })
    }

    pub fn truncate(&self, f: &QPoly, cap: u32) -> QPoly {
        f.filter_terms(|m| self.degree(m) <= cap)
    }
}

/// An element of `P_{n,k}` truncated above cohomological degree `cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohClass {
    pub value: QPoly,
    pub cap: u32,
}

impl CohClass {
    pub fn component(&self, ring: &PontryaginRing, degree: u32) -> QPoly {
        self.value.filter_terms(|m| ring.degree(m) == degree)
    }

    pub fn constant(&self) -> BigRational {
        self.value.constant_term()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        for (n, k, d) in [(5, 2, 2), (8, 3, 3), (9, 4, 6), (6, 2, 3), (12, 5, 10)] {
            let p = build_p(n, k).unwrap();
            assert_eq!(p.q_dimension(), d, "({n},{k})");
            let total: usize = p.graded_dimensions().values().sum();
            assert_eq!(total, d);
            assert!(p.graded_dimensions().keys().all(|&g| g <= p.top_degree()));
        }
        assert!(build_p(5, 3).is_err());
    }

    #[test]
    fn q_classes_are_determined_by_p() {
        // q_1 = -p_1 from the r = 1 relation
        let p = build_p(8, 3).unwrap();
        let sum = p.q(1) + p.p(1);
        assert!(p.contains(&sum).unwrap());
    }
}
