use num_bigint::BigInt;
use serde::Serialize;

use super::barb::{verify_barb_reduced, BarBReport};
use super::groups::{
    divides_power_of_two, hopf_exponent, k0_gb, k1_image, monomial_names, Engine, QuotientRing,
};
use super::presentation::{build_presentation, eliminate_mu, ReducedPresentation};
use super::schur::{schur_fast_path_reduced, SchurPath};
use super::{GrassmannParams, KError};
use crate::exactmath::{big_to_json, FinAbGroup};
use crate::zgb::Budget;

#[derive(Clone, Debug)]
pub struct KOptions {
    pub engine: Engine,
    pub budget: Budget,
    /// Emit the multiplication table of `K^0`; `None` means only for `(8,3)`.
    pub structure_constants: Option<bool>,
    pub verify_barb: bool,
}

impl Default for KOptions {
    fn default() -> Self {
        KOptions {
            engine: Engine::Both,
            budget: Budget::unlimited(),
            structure_constants: None,
            verify_barb: true,
        }
    }
}

/// `K^0` as computed by one or both engines.
#[derive(Clone, Debug)]
pub struct K0Result {
    pub group: FinAbGroup,
    pub ring: Option<QuotientRing>,
    pub schur: Option<SchurPath>,
    pub engines_agree: bool,
}

pub fn compute_k0_reduced(
    red: &ReducedPresentation,
    engine: Engine,
    budget: Budget,
) -> Result<K0Result, KError> {
    let ring = match engine {
        Engine::Gb | Engine::Both => Some(k0_gb(red, budget)?),
        Engine::Schur => None,
    };
    let schur = match engine {
        Engine::Schur | Engine::Both => Some(schur_fast_path_reduced(red)?),
        Engine::Gb => None,
    };
    let group = match (&ring, &schur) {
        (Some(r), Some(s)) => {
            if r.group.group != s.k0 {
                return Err(KError::CrossCheck(format!(
                    "gb gives {}, schur gives {}",
                    r.group.group, s.k0
                )));
            }
            s.k0.clone()
        }
        (Some(r), None) => r.group.group.clone(),
        (None, Some(s)) => s.k0.clone(),
        (None, None) => unreachable!(),
    };
    Ok(K0Result {
        group,
        ring,
        schur,
        engines_agree: true,
    })
}

pub fn compute_k0(n: usize, k: usize, engine: Engine) -> Result<K0Result, KError> {
    compute_k0_reduced(
        &eliminate_mu(&build_presentation(n, k)?)?,
        engine,
        Budget::unlimited(),
    )
}

pub fn compute_k1(n: usize, k: usize) -> Result<FinAbGroup, KError> {
    k1_image(
        &eliminate_mu(&build_presentation(n, k)?)?,
        Budget::unlimited(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub k0_rank: bool,
    pub k1_rank: bool,
    pub torsion_exponent: bool,
    pub hopf_bounds: bool,
}

impl Invariants {
    pub fn all_pass(&self) -> bool {
        self.k0_rank && self.k1_rank && self.torsion_exponent && self.hopf_bounds
    }
}

#[derive(Clone, Debug)]
pub struct KGroups {
    pub params: GrassmannParams,
    pub engine: Engine,
    pub k0: FinAbGroup,
    pub k0_generators: Vec<String>,
    pub k1: FinAbGroup,
    pub hopf_order_exponent: u32,
    pub engines_agree: bool,
    pub barb: Option<BarBReport>,
    pub invariants: Invariants,
    pub structure_constants: Option<Vec<Vec<Vec<BigInt>>>>,
}

impl KGroups {
    pub fn passed(&self) -> bool {
        self.engines_agree
            && self.invariants.all_pass()
            && self.barb.as_ref().is_none_or(|b| b.all_pass())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({
            "n": self.params.n,
            "k": self.params.k,
            "K0": self.k0,
            "K1": self.k1,
            "hopf_order_exponent": self.hopf_order_exponent,
            "engines_agree": self.engines_agree,
            "engine": self.engine,
            "K0_generators": self.k0_generators,
            "invariants": self.invariants,
        });
        if let Some(b) = &self.barb {
            v["barB"] = serde_json::to_value(b).expect("serializable");
        }
        if let Some(sc) = &self.structure_constants {
            v["structure_constants"] = sc
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|c| c.iter().map(big_to_json).collect())
                        .collect()
                })
                .collect::<Vec<Vec<Vec<serde_json::Value>>>>()
                .into();
        }
        v
    }
}

pub fn compute_kgroups(n: usize, k: usize, opts: &KOptions) -> Result<KGroups, KError> {
    let red = eliminate_mu(&build_presentation(n, k)?)?;
    let p = red.params;
    let k0 = compute_k0_reduced(&red, opts.engine, opts.budget)?;
    // hopf order, K1 and the barB relations always need the Gröbner basis
    let ring = match k0.ring {
        Some(r) => r,
        None => k0_gb(&red, opts.budget)?,
    };
    let k1 = k1_image(&red, opts.budget)?;
    let mut engines_agree = k0.engines_agree;
    if let Some(s) = &k0.schur {
        engines_agree &= s.k1 == k1;
    }
    let r = hopf_exponent(&ring, &red)?;
    let barb = if opts.verify_barb {
        Some(verify_barb_reduced(&red, &ring, opts.budget)?)
    } else {
        None
    };
    let invariants = Invariants {
        k0_rank: k0.group.rank == p.expected_rank(),
        k1_rank: k1.rank == k0.group.rank,
        torsion_exponent: divides_power_of_two(&k0.group.torsion_exponent(), p.m - 1),
        hopf_bounds: 2 * p.l - 1 <= r as usize && (r as usize) < p.m,
    };
    let want_table = opts.structure_constants.unwrap_or(n == 8 && k == 3);
    let structure_constants = if want_table {
        Some(ring.structure_constants()?)
    } else {
        None
    };
    Ok(KGroups {
        params: p,
        engine: opts.engine,
        k0: k0.group,
        k0_generators: monomial_names(&ring.group.monomial_generators),
        k1,
        hopf_order_exponent: r,
        engines_agree,
        barb,
        invariants,
        structure_constants,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_8_3() {
        let g = compute_kgroups(8, 3, &KOptions::default()).unwrap();
        assert!(g.passed());
        let v = g.to_json();
        assert_eq!(v["n"], 8);
        assert_eq!(v["K0"]["rank"], 3);
        assert_eq!(v["K1"]["rank"], 3);
        assert_eq!(v["hopf_order_exponent"], 3);
        assert_eq!(v["barB"]["c"], true);
        let table = v["structure_constants"].as_array().unwrap();
        assert_eq!(table.len(), g.k0_generators.len());
    }

    #[test]
    fn engines_agree_12_5() {
        let g = compute_kgroups(12, 5, &KOptions::default()).unwrap();
        assert!(g.passed());
        assert_eq!(g.k0.rank, 10);
        assert!(g.structure_constants.is_none());
    }
}
