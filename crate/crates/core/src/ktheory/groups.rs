use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::presentation::{build_presentation, eliminate_mu, ReducedPresentation};
use super::{GrassmannParams, KError};
use crate::exactmath::{subgroup_structure, ElementOrder, FinAbGroup, IntMatrix};
use crate::poly::{Monomial, ZPoly};
use crate::zgb::{
    quotient_group_structure, strong_groebner, Budget, FgQuotientGroup, IdealPresentation, StrongGB,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Gb,
    Schur,
    #[default]
    Both,
}

impl FromStr for Engine {
    type Err = KError;
    fn from_str(s: &str) -> Result<Self, KError> {
        match s {
            "gb" => Ok(Engine::Gb),
            "schur" => Ok(Engine::Schur),
            "both" => Ok(Engine::Both),
            _ => Err(KError::InvalidParams(format!(
                "unknown engine {s:?} (gb, schur, both)"
            ))),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Gb => "gb",
            Engine::Schur => "schur",
            Engine::Both => "both",
        })
    }
}

/// A quotient of `Z[lambda_1..lambda_s, theta]` together with its Gröbner basis
/// and additive structure.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    pub gb: StrongGB<BigInt>,
    pub group: FgQuotientGroup,
}

impl QuotientRing {
    pub fn new(
        reduced: &ReducedPresentation,
        generators: Vec<ZPoly>,
        budget: Budget,
    ) -> Result<Self, KError> {
        let ideal = IdealPresentation::new(reduced.variables(), generators);
        let gb = strong_groebner(&ideal, budget)?;
        let group = quotient_group_structure(&gb)?;
        Ok(QuotientRing { gb, group })
    }

    pub fn contains(&self, f: &ZPoly) -> Result<bool, KError> {
        Ok(self.gb.contains(f)?)
    }

    /// `c[i][j]` = coordinates of `g_i g_j` on the monomial generators.
    pub fn structure_constants(&self) -> Result<Vec<Vec<Vec<BigInt>>>, KError> {
        let gens: Vec<ZPoly> = self
            .group
            .monomial_generators
            .iter()
            .map(|m| ZPoly::term(m.clone(), BigInt::one()))
            .collect();
        gens.iter()
            .map(|a| {
                gens.iter()
                    .map(|b| Ok(self.group.coordinates(&self.gb.normal_form(&(a * b))?)?))
                    .collect()
            })
            .collect()
    }
}

/// The additive group of `K^0 = S/I`, computed from a strong Gröbner basis of
/// the eliminated presentation.
pub fn k0_gb(reduced: &ReducedPresentation, budget: Budget) -> Result<QuotientRing, KError> {
    QuotientRing::new(reduced, reduced.ideal_i(), budget)
}

/// `K^1`: the subgroup `(theta + 1) S/I~` with the relations it inherits.
pub fn k1_image(reduced: &ReducedPresentation, budget: Budget) -> Result<FinAbGroup, KError> {
    let ring = QuotientRing::new(reduced, reduced.itilde(), budget)?;
    let mult = ZPoly::var(reduced.theta) + ZPoly::one();
    let cols = ring.group.generator_count();
    let rows = ring
        .group
        .monomial_generators
        .iter()
        .map(|m| {
            let img = ring
                .gb
                .normal_form(&(&mult * &ZPoly::term(m.clone(), BigInt::one())))?;
            Ok(ring.group.coordinates(&img)?)
        })
        .collect::<Result<Vec<_>, KError>>()?;
    let gens = IntMatrix::from_rows(cols, rows)?;
    let rels = if ring.group.relations.rows() == 0 {
        IntMatrix::zeros(0, cols)
    } else {
        ring.group.relations.clone()
    };
    Ok(subgroup_structure(&gens, &rels)?)
}

/// Least `r` with `2^r (theta - 1) = 0` in `S/I`.
pub fn hopf_exponent(ring: &QuotientRing, reduced: &ReducedPresentation) -> Result<u32, KError> {
    let base = ZPoly::var(reduced.theta) - ZPoly::one();
    for r in 0..reduced.params.m as u32 {
        if ring.contains(&base.scale(&(BigInt::one() << r)))? {
            return Ok(r);
        }
    }
    Err(KError::Internal(format!(
        "2^(m-1)(theta-1) is not zero for n={}, k={}",
        reduced.params.n, reduced.params.k
    )))
}

pub fn hopf_class_order(n: usize, k: usize) -> Result<u32, KError> {
    let reduced = eliminate_mu(&build_presentation(n, k)?)?;
    let ring = k0_gb(&reduced, Budget::unlimited())?;
    hopf_exponent(&ring, &reduced)
}

/// Bounds `[2l - 1, 2l + 1]` on the exponent of the order of `[xi^C] - 1`.
pub fn hopf_order_bounds(n: usize, k: usize) -> Result<(usize, usize), KError> {
    let p = GrassmannParams::new(n, k)?;
    if p.j == 0 {
        return Err(KError::InvalidParams(format!(
            "bounds apply to n not divisible by 4; n={n} is handled exactly"
        )));
    }
    if p.l == 0 {
        return Err(KError::InvalidParams(format!("n={n} too small")));
    }
    Ok((2 * p.l - 1, 2 * p.l + 1))
}

/// Additive order of `[theta] - 1`, read off the group presentation.
pub fn hopf_element_order(
    ring: &QuotientRing,
    reduced: &ReducedPresentation,
) -> Result<ElementOrder, KError> {
    let nf = ring
        .gb
        .normal_form(&(ZPoly::var(reduced.theta) - ZPoly::one()))?;
    Ok(ring.group.element_order(&nf)?)
}

pub fn monomial_names(ms: &[Monomial]) -> Vec<String> {
    ms.iter().map(|m| m.to_string()).collect()
}

pub(crate) fn divides_power_of_two(exponent: &BigInt, r: usize) -> bool {
    let bound = BigInt::one() << r;
    (bound % exponent).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reduced(n: usize, k: usize) -> ReducedPresentation {
        eliminate_mu(&build_presentation(n, k).unwrap()).unwrap()
    }

    #[test]
    fn k0_rank_8_3() {
        let red = reduced(8, 3);
        let ring = k0_gb(&red, Budget::unlimited()).unwrap();
        assert_eq!(ring.group.group.rank, 3);
        assert!(divides_power_of_two(
            &ring.group.group.torsion_exponent(),
            3
        ));
        assert_eq!(hopf_exponent(&ring, &red).unwrap(), 3);
        assert_eq!(
            hopf_element_order(&ring, &red).unwrap(),
            ElementOrder::Finite(BigInt::from(8))
        );
    }

    #[test]
    fn k1_rank_8_3() {
        let g = k1_image(&reduced(8, 3), Budget::unlimited()).unwrap();
        assert_eq!(g.rank, 3);
        assert!(g.torsion.is_empty());
    }

    #[test]
    fn bounds() {
        assert_eq!(hopf_order_bounds(10, 3).unwrap(), (3, 5));
        assert_eq!(hopf_order_bounds(11, 4).unwrap(), (3, 5));
        assert_eq!(hopf_order_bounds(9, 2).unwrap(), (3, 5));
        assert!(hopf_order_bounds(8, 3).is_err());
        assert!(hopf_order_bounds(9, 5).is_err());
    }

    #[test]
    fn engine_names() {
        for e in [Engine::Gb, Engine::Schur, Engine::Both] {
            assert_eq!(e.to_string().parse::<Engine>().unwrap(), e);
        }
        assert!("fast".parse::<Engine>().is_err());
    }
}
