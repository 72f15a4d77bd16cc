//! The ring `B/((theta - 1) Delta)` built from the restriction of the spin
//! representations, and the relations that identify it with `S/I`.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::groups::{k0_gb, QuotientRing};
use super::presentation::{
    build_presentation, delta_var, eliminate_mu, f_relation, f_st, ReducedPresentation,
};
use super::KError;
use crate::poly::ZPoly;
use crate::zgb::{quotient_group_structure, strong_groebner, Budget, IdealPresentation, StrongGB};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BarBReport {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub remark: bool,
    /// The additive group of the ring equals that of `S/I`.
    #[serde(rename = "K0_iso")]
    pub k0_iso: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

impl BarBReport {
    pub fn all_pass(&self) -> bool {
        self.a && self.b && self.c && self.remark && self.k0_iso
    }
}

/// Generators of `B/((theta-1) Delta)` in `Z[lambda, Delta, theta]` after the
/// `mu` elimination: `theta^2 - 1`, `Delta^2 - f_{s,t}`, the relations
/// `f_j = (n choose j) theta^j` for `j <= m-2`, `theta^eps Delta - 2^(m-1)`
/// and `(theta - 1) Delta`.
pub fn barb_generators(red: &ReducedPresentation) -> Vec<ZPoly> {
    let p = red.params;
    let theta = ZPoly::var(red.theta);
    let delta = ZPoly::var(delta_var());
    let eps = p.epsilon.expect("exact case") as u32;
    let mut gens = vec![
        theta.pow(2) - ZPoly::one(),
        delta.pow(2) - red.map(&f_st(&p)),
    ];
    gens.extend(red.residual[..red.residual.len() - 1].iter().cloned());
    gens.push(&theta.pow(eps) * &delta - ZPoly::constant(p.two_pow_m1()));
    gens.push(&(&theta - &ZPoly::one()) * &delta);
    gens
}

fn barb_ring(red: &ReducedPresentation, budget: Budget) -> Result<StrongGB<BigInt>, KError> {
    let mut vars = red.lambdas.clone();
    vars.push(delta_var());
    vars.push(red.theta);
    let ideal = IdealPresentation::new(vars, barb_generators(red));
    Ok(strong_groebner(&ideal, budget)?)
}

fn check(
    gb: &StrongGB<BigInt>,
    label: &str,
    f: &ZPoly,
    failures: &mut Vec<String>,
) -> Result<bool, KError> {
    let nf = gb.normal_form(f)?;
    if nf.is_zero() {
        Ok(true)
    } else {
        failures.push(format!("{label}: normal form {nf}"));
        Ok(false)
    }
}

pub fn verify_barb_reduced(
    red: &ReducedPresentation,
    k0: &QuotientRing,
    budget: Budget,
) -> Result<BarBReport, KError> {
    let p = red.params;
    let gb = barb_ring(red, budget)?;
    let theta = ZPoly::var(red.theta);
    let one = ZPoly::one();
    let two_m1 = ZPoly::constant(p.two_pow_m1());
    let hopf = (&theta - &one).scale(&p.two_pow_m1());
    let top = ZPoly::constant(BigInt::one() << (2 * p.m - 2));
    let spin_square = red.map(&f_st(&p)) - top;
    let remark = (&theta + &one).pow(p.n as u32) - ZPoly::constant(BigInt::one() << (2 * p.m));
    let mut failures = Vec::new();

    let a = check(&gb, "a: 2^(m-1)(theta-1)", &hopf, &mut failures)?
        & check(
            &gb,
            "a: Delta - 2^(m-1)",
            &(ZPoly::var(delta_var()) - two_m1),
            &mut failures,
        )?;
    let mut b = true;
    for j in 1..p.m {
        let rel = red.map(&f_relation(&p, j));
        b &= check(&gb, &format!("b: j={j}"), &rel, &mut failures)?;
        b &= check(&k0.gb, &format!("b in S/I: j={j}"), &rel, &mut failures)?;
    }
    let c = check(&gb, "c", &spin_square, &mut failures)?
        & check(&k0.gb, "c in S/I", &spin_square, &mut failures)?;
    let rm = check(&gb, "remark", &remark, &mut failures)?
        & check(&k0.gb, "remark in S/I", &remark, &mut failures)?;
    let group = quotient_group_structure(&gb)?.group;
    let k0_iso = group == k0.group.group;
    if !k0_iso {
        failures.push(format!("group {group} differs from K0 {}", k0.group.group));
    }
    Ok(BarBReport {
        a,
        b,
        c,
        remark: rm,
        k0_iso,
        failures,
    })
}

pub fn verify_barb(n: usize, k: usize) -> Result<BarBReport, KError> {
    let red = eliminate_mu(&build_presentation(n, k)?)?;
    let k0 = k0_gb(&red, Budget::unlimited())?;
    verify_barb_reduced(&red, &k0, Budget::unlimited())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn barb_8_3() {
        let r = verify_barb(8, 3).unwrap();
        assert!(r.all_pass(), "{r:?}");
    }

    #[test]
    fn barb_12_3() {
        let r = verify_barb(12, 3).unwrap();
        assert!(r.all_pass(), "{r:?}");
    }

    #[test]
    fn wrong_constant_is_caught() {
        let red = eliminate_mu(&build_presentation(8, 3).unwrap()).unwrap();
        let gb = barb_ring(&red, Budget::unlimited()).unwrap();
        let mut failures = Vec::new();
        let off = red.map(&f_st(&red.params)) - ZPoly::from_i64(32);
        assert!(!check(&gb, "c", &off, &mut failures).unwrap());
        assert_eq!(failures.len(), 1);
    }
}
