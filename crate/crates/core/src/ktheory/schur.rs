//! Second engine for `K^0`: linear algebra on a degree-truncated monomial set,
//! presented on the basis `{s_nu, theta s_nu}` of `S/I~` with `nu` in the
//! `s x t` box and `s_nu` the dual Jacobi–Trudi determinant in the `lambda_p`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::presentation::{build_presentation, eliminate_mu, ReducedPresentation};
use super::{GrassmannParams, KError};
use crate::exactmath::{
    cokernel_group, hermite_rows, rank, solve_integer, subgroup_structure, FinAbGroup, IntMatrix,
};
use crate::poly::{schur_from_elementary, Monomial, Partition, ZPoly};

#[derive(Clone, Debug)]
pub struct SchurPath {
    pub params: GrassmannParams,
    /// Weighted degree bound of the truncation (`lambda_p` has weight `p`).
    pub degree_bound: usize,
    pub basis: Vec<Partition>,
    pub k0: FinAbGroup,
    pub k1: FinAbGroup,
}

struct Truncation<'a> {
    red: &'a ReducedPresentation,
    bound: usize,
    index: HashMap<(Vec<u32>, u32), usize>,
}

fn weighted_exponents(s: usize, bound: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(p: usize, s: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if p > s {
            out.push(cur.clone());
            return;
        }
        for a in 0..=left / p {
            cur.push(a as u32);
            rec(p + 1, s, left - a * p, cur, out);
            cur.pop();
        }
    }
    rec(1, s, bound, &mut Vec::new(), &mut out);
    out
}

impl<'a> Truncation<'a> {
    fn new(red: &'a ReducedPresentation, bound: usize) -> Self {
        let mut index = HashMap::new();
        for e in 0..2u32 {
            for a in weighted_exponents(red.params.s, bound) {
                let i = index.len();
                index.insert((a, e), i);
            }
        }
        Truncation { red, bound, index }
    }

    fn dim(&self) -> usize {
        self.index.len()
    }

    fn key(&self, m: &Monomial) -> (Vec<u32>, u32) {
        let a = self
            .red
            .lambdas
            .iter()
            .map(|&v| m.exponent(v) as u32)
            .collect();
        (a, (m.exponent(self.red.theta) as u32) % 2)
    }

    fn weight(&self, m: &Monomial) -> usize {
        self.red
            .lambdas
            .iter()
            .enumerate()
            .map(|(i, &v)| (i + 1) * m.exponent(v) as usize)
            .sum()
    }

    fn vector(&self, f: &ZPoly) -> Result<Vec<BigInt>, KError> {
        let mut v = vec![BigInt::zero(); self.dim()];
        for (m, c) in f.terms() {
            let i = self.index.get(&self.key(m)).ok_or_else(|| {
                KError::Internal(format!("monomial {m} beyond degree {}", self.bound))
            })?;
            v[*i] += c;
        }
        Ok(v)
    }

    fn poly_weight(&self, f: &ZPoly) -> usize {
        f.terms().map(|(m, _)| self.weight(m)).max().unwrap_or(0)
    }

    fn monomial(&self, a: &[u32], e: u32) -> ZPoly {
        let mut pairs: Vec<_> = self
            .red
            .lambdas
            .iter()
            .zip(a)
            .filter(|(_, &x)| x > 0)
            .map(|(&v, &x)| (v, x as i32))
            .collect();
        if e > 0 {
            pairs.push((self.red.theta, e as i32));
        }
        ZPoly::term(Monomial::from_pairs(pairs), BigInt::one())
    }

    /// Multiples `lambda^b theta^e g` staying inside the truncation.
    fn relation_rows(&self, gens: &[ZPoly]) -> Result<Vec<Vec<BigInt>>, KError> {
        let mut rows = Vec::new();
        for g in gens {
            let w = self.poly_weight(g);
            if w > self.bound {
                continue;
            }
            for e in 0..2 {
                for a in weighted_exponents(self.red.params.s, self.bound - w) {
                    rows.push(self.vector(&(&self.monomial(&a, e) * g))?);
                }
            }
        }
        Ok(rows)
    }
}

fn schur_basis(red: &ReducedPresentation) -> (Vec<Partition>, Vec<ZPoly>) {
    let p = red.params;
    let e = |i: usize| -> ZPoly {
        match i {
            0 => ZPoly::one(),
            _ if i <= p.s => ZPoly::var(red.lambdas[i - 1]),
            _ => ZPoly::zero(),
        }
    };
    let parts = Partition::in_box(p.s, p.t);
    let polys = parts
        .iter()
        .map(|nu| schur_from_elementary(nu, &e))
        .collect();
    (parts, polys)
}

fn try_bound(red: &ReducedPresentation, bound: usize) -> Result<Option<SchurPath>, KError> {
    let p = red.params;
    let tr = Truncation::new(red, bound);
    let dim = tr.dim();
    let mut relations = tr.relation_rows(&red.itilde()[1..])?;
    let (parts, schur) = schur_basis(red);
    let n_box = parts.len();
    if n_box != p.expected_rank() {
        return Err(KError::Internal(format!(
            "box has {n_box} partitions, expected {}",
            p.expected_rank()
        )));
    }
    let theta = ZPoly::var(red.theta);
    let mut basis: Vec<Vec<BigInt>> = Vec::with_capacity(2 * n_box);
    for e in 0..2u32 {
        for sp in &schur {
            basis.push(tr.vector(&(sp * &theta.pow(e)))?);
        }
    }
    if relations.is_empty() {
        relations.push(vec![BigInt::zero(); dim]);
    }
    let rel = IntMatrix::from_rows(dim, relations)?;
    if rank(&rel) + 2 * n_box != dim {
        return Ok(None);
    }
    let mut stacked = rel.clone();
    for b in &basis {
        stacked.push_row(b.clone())?;
    }
    let h = hermite_rows(&stacked, false);
    let unimodular = h.rank() == dim && (0..dim).all(|i| h.h[(i, i)].is_one());
    if !unimodular {
        return Ok(None);
    }

    // Coordinates on the basis modulo the truncated relations.
    let mut columns = basis.clone();
    columns.extend(rel.to_rows());
    let a = IntMatrix::from_rows(columns.len(), transpose(&columns, dim))?;
    let coords = |f: &ZPoly| -> Result<Vec<BigInt>, KError> {
        let v = tr.vector(f)?;
        let c =
            solve_integer(&a, &v)?.ok_or_else(|| KError::Internal("basis does not span".into()))?;
        Ok(c[..2 * n_box].to_vec())
    };
    let hopf = (&theta - &ZPoly::one()).scale(&p.two_pow_m1());
    let plus = &theta + &ZPoly::one();
    let mut k0_rows = Vec::new();
    let mut k1_gens = Vec::new();
    for e in 0..2u32 {
        for sp in &schur {
            let b = sp * &theta.pow(e);
            k0_rows.push(coords(&(&hopf * &b))?);
            k1_gens.push(coords(&(&plus * &b))?);
        }
    }
    let k0 = cokernel_group(&IntMatrix::from_rows(2 * n_box, k0_rows)?, 2 * n_box)?;
    let k1 = subgroup_structure(
        &IntMatrix::from_rows(2 * n_box, k1_gens)?,
        &IntMatrix::zeros(0, 2 * n_box),
    )?;
    Ok(Some(SchurPath {
        params: p,
        degree_bound: bound,
        basis: parts,
        k0,
        k1,
    }))
}

fn transpose(rows: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    (0..dim)
        .map(|i| rows.iter().map(|r| r[i].clone()).collect())
        .collect()
}

pub fn schur_fast_path_reduced(red: &ReducedPresentation) -> Result<SchurPath, KError> {
    let p = red.params;
    let start = p.s * p.t + p.s;
    for bound in [start, start + p.m, start + 2 * p.m] {
        if let Some(r) = try_bound(red, bound)? {
            return Ok(r);
        }
    }
    Err(KError::Internal(format!(
        "box Schur classes are not a basis of the truncated quotient for n={}, k={}",
        p.n, p.k
    )))
}

pub fn schur_fast_path(n: usize, k: usize) -> Result<SchurPath, KError> {
    schur_fast_path_reduced(&eliminate_mu(&build_presentation(n, k)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weighted_exponent_count() {
        // a + 2b <= 4: (0..=4,0), (0..=2,1), (0,2)
        assert_eq!(weighted_exponents(2, 4).len(), 9);
        assert_eq!(weighted_exponents(1, 3).len(), 4);
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(schur_fast_path(8, 3).unwrap().basis.len(), 3);
        assert_eq!(schur_fast_path(12, 5).unwrap().basis.len(), 10);
    }

    #[test]
    fn fast_path_8_3() {
        let r = schur_fast_path(8, 3).unwrap();
        assert_eq!(r.k0.rank, 3);
        assert_eq!(r.k0.torsion, vec![BigInt::from(8); 3]);
        assert_eq!(r.k1, FinAbGroup::free(3));
    }
}
