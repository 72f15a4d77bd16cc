use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use super::reps::{
    character_of, exterior_powers, full_spin, half_spin, hodge_half, GroupTag, Symbol,
};
use super::torus::{forget_theta, mu_star, reduce_theta, theta, u, v};
use super::CharError;
use crate::poly::{Var, ZPoly};
use crate::zgb::{express_in_subring, SubringMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityCase {
    /// `Delta_s^2 Delta'_t^2 = (sum lambda_p)(sum mu_q)`.
    Eq3,
    /// `Delta^+_m Delta^-_m = Lambda_{m-1} + Lambda_{m-3} + ...`.
    DeltaProduct,
    /// `Delta_s^2 = sum_{p <= s} lambda_p`.
    OddSpinSquare,
    HodgeQuadratic,
    /// `rho(Lambda_j) = theta^j f_j`, `rho(Delta^+-) = theta^(eps, 1+eps) Delta_{s,t}`.
    Restriction,
    ZIdentities,
    /// Squares of the `Delta`-type generators of `R H^0_{n,k}` lie in `R(SO(k) x SO(n-k))`.
    Rh0Squares,
}

impl IdentityCase {
    pub const ALL: [IdentityCase; 7] = [
        IdentityCase::Eq3,
        IdentityCase::DeltaProduct,
        IdentityCase::OddSpinSquare,
        IdentityCase::HodgeQuadratic,
        IdentityCase::Restriction,
        IdentityCase::ZIdentities,
        IdentityCase::Rh0Squares,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityCase::Eq3 => "eq3",
            IdentityCase::DeltaProduct => "delta_product",
            IdentityCase::OddSpinSquare => "odd_spin_square",
            IdentityCase::HodgeQuadratic => "hodge_quadratic",
            IdentityCase::Restriction => "restriction",
            IdentityCase::ZIdentities => "z_identities",
            IdentityCase::Rh0Squares => "rh0_squares",
        }
    }
}

impl fmt::Display for IdentityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityCase {
    type Err = CharError;
    fn from_str(s: &str) -> Result<Self, CharError> {
        IdentityCase::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| CharError::Params(format!("unknown identity case {s}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum IdentityParams {
    /// `Spin(2m)`.
    Spin {
        m: usize,
    },
    /// `Spin(2s+1)` or `SO(2s)`, depending on the case.
    Orth {
        s: usize,
    },
    Pair {
        n: usize,
        k: usize,
    },
}

impl fmt::Display for IdentityParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityParams::Spin { m } => write!(f, "m={m}"),
            IdentityParams::Orth { s } => write!(f, "s={s}"),
            IdentityParams::Pair { n, k } => write!(f, "n={n},k={k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_m: usize,
    pub max_st: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_m: 6,
            max_st: 3,
        }
    }
}

/// Both sides of one sub-identity.
#[derive(Clone, Debug)]
pub struct Sides {
    pub label: String,
    pub lhs: ZPoly,
    pub rhs: ZPoly,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityResult {
    pub case: IdentityCase,
    pub params: IdentityParams,
    pub pass: bool,
    pub witness: Option<String>,
}

fn bad(case: IdentityCase, params: IdentityParams) -> CharError {
    CharError::Params(format!("{case} is not defined for {params}"))
}

fn check_caps(params: IdentityParams, caps: &Caps) -> Result<(), CharError> {
    let (m, st) = match params {
        IdentityParams::Spin { m } => (m, 0),
        IdentityParams::Orth { s } => (0, s),
        IdentityParams::Pair { n, k } => (n / 2, (k / 2).max((n - k.min(n)) / 2)),
    };
    if m > caps.max_m || st > caps.max_st {
        return Err(CharError::CapExceeded(format!(
            "{params} exceeds m <= {}, s,t <= {}",
            caps.max_m, caps.max_st
        )));
    }
    Ok(())
}

fn block(f: fn(usize) -> Var, r: usize) -> Vec<Var> {
    (1..=r).map(f).collect()
}

fn sum_upto(xs: &[ZPoly], top: usize) -> ZPoly {
    xs.iter().take(top + 1).cloned().sum()
}

/// `x_a + x_{a-2} + ...` down to index 0, empty for negative `a`.
fn alternate(xs: &[ZPoly], a: i64) -> ZPoly {
    let mut out = ZPoly::zero();
    let mut i = a;
    while i >= 0 {
        out = out + &xs[i as usize];
        i -= 2;
    }
    out
}

fn convolve(xs: &[ZPoly], ys: &[ZPoly], j: usize) -> ZPoly {
    (0..=j)
        .filter(|&p| p < xs.len() && j - p < ys.len())
        .map(|p| &xs[p] * &ys[j - p])
        .sum()
}

fn theta_pow(e: usize) -> ZPoly {
    if e % 2 == 1 {
        ZPoly::var(theta())
    } else {
        ZPoly::one()
    }
}

fn sides(label: impl Into<String>, lhs: ZPoly, rhs: ZPoly) -> Sides {
    Sides {
        label: label.into(),
        lhs,
        rhs,
    }
}

/// The sub-identities making up a case.
pub fn identity_sides(case: IdentityCase, params: IdentityParams) -> Result<Vec<Sides>, CharError> {
    use IdentityCase as C;
    use IdentityParams as P;
    let err = || bad(case, params);
    Ok(match (case, params) {
        (C::Eq3, P::Pair { n, k }) => {
            if k % 2 == 0 || n < k || (n - k) % 2 == 0 {
                return Err(err());
            }
            let (us, vs) = (block(u, k / 2), block(v, (n - k) / 2));
            let lhs = (full_spin(&us) * full_spin(&vs)).pow(2);
            let rhs = sum_upto(&exterior_powers(&us, true), us.len())
                * sum_upto(&exterior_powers(&vs, true), vs.len());
            vec![sides("Delta_{s,t}^2 = f_{s,t}", lhs, rhs)]
        }
        (C::DeltaProduct, P::Spin { m }) if m >= 1 => {
            let c = block(u, m);
            let lam = exterior_powers(&c, false);
            let lhs = half_spin(&c, true)? * half_spin(&c, false)?;
            vec![sides("Delta+ Delta-", lhs, alternate(&lam, m as i64 - 1))]
        }
        (C::OddSpinSquare, P::Orth { s }) => {
            let c = block(u, s);
            let lhs = full_spin(&c).pow(2);
            vec![sides(
                "Delta_s^2",
                lhs,
                sum_upto(&exterior_powers(&c, true), s),
            )]
        }
        (C::HodgeQuadratic, P::Orth { s }) if s >= 1 => {
            let c = block(u, s);
            let lam = exterior_powers(&c, false);
            let s = s as i64;
            let lhs = hodge_half(&c, true)? * hodge_half(&c, false)?;
            let (odd, even) = (alternate(&lam, s - 1), alternate(&lam, s - 2));
            let rhs = odd.pow(2) - &lam[s as usize] * &even - even.pow(2);
            vec![sides("lambda_s+ lambda_s-", lhs, rhs)]
        }
        (C::Restriction, P::Pair { n, k }) => {
            let m = n / 2;
            let (us, vs) = (block(u, k / 2), block(v, (n - k) / 2));
            let big = block(u, m);
            let lam_big = exterior_powers(&big, false);
            let (lam, mu) = (exterior_powers(&us, true), exterior_powers(&vs, true));
            let mut out = Vec::new();
            for j in 1..=m {
                let lhs = reduce_theta(&mu_star(&lam_big[j], n, k)?);
                let rhs = reduce_theta(&(theta_pow(j) * convolve(&lam, &mu, j)));
                out.push(sides(format!("rho(Lambda_{j})"), lhs, rhs));
            }
            let eps = usize::from(n % 8 == 4);
            let dst = full_spin(&us) * full_spin(&vs);
            let (dp, dm) = (half_spin(&big, true)?, half_spin(&big, false)?);
            out.push(sides(
                "rho(Delta+)",
                reduce_theta(&mu_star(&dp, n, k)?),
                theta_pow(eps) * &dst,
            ));
            out.push(sides(
                "rho(Delta-)",
                reduce_theta(&mu_star(&dm, n, k)?),
                theta_pow(1 + eps) * &dst,
            ));
            let f_st = sum_upto(&lam, us.len()) * sum_upto(&mu, vs.len());
            let lhs = reduce_theta(&(ZPoly::var(theta()) * mu_star(&(dp * dm), n, k)?));
            out.push(sides("theta rho(Delta+ Delta-)", lhs, f_st));
            out
        }
        (C::ZIdentities, P::Pair { n, k }) => {
            let m = n / 2;
            let (s, t) = (k / 2, (n - k) / 2);
            let spin = GroupTag::Spin(n);
            let h0 = GroupTag::H0 { n, k };
            let x: Vec<ZPoly> = (0..=s)
                .map(|p| character_of(Symbol::X(p), h0).map(|r| r.character))
                .collect::<Result<_, _>>()?;
            let y: Vec<ZPoly> = (0..=t)
                .map(|q| character_of(Symbol::Y(q), h0).map(|r| r.character))
                .collect::<Result<_, _>>()?;
            let rho0 = |f: &ZPoly| mu_star(f, n, k).map(|g| forget_theta(&g));
            let two = BigInt::from(2);
            let mut out = Vec::new();
            for j in 1..m {
                let z = character_of(Symbol::Z(j), spin)?.character;
                let rhs = convolve(&x, &y, j) + convolve(&x, &y, j - 1).scale(&two);
                out.push(sides(format!("rho0(z_{j})"), rho0(&z)?, rhs));
            }
            let zm = character_of(Symbol::Z(m), spin)?.character;
            out.push(sides(
                format!("rho0(z_{m})"),
                rho0(&zm)?,
                (&x[s] * &y[t]).scale(&two),
            ));
            for r in 1..m {
                let z = character_of(Symbol::ZPrime(r), spin)?.character;
                out.push(sides(
                    format!("rho0(z'_{r})"),
                    rho0(&z)?,
                    convolve(&x, &y, r),
                ));
            }
            out
        }
        (C::Rh0Squares, P::Pair { n, k }) => {
            if k < 2 || n < k + 2 {
                return Err(err());
            }
            let first = Factor::new(u, k, "lambda", "Delta", "");
            let second = Factor::new(v, n - k, "mu", "Delta", "'");
            let mut gens = first.generators.clone();
            gens.extend(second.generators.iter().cloned());
            let names: Vec<String> = gens.iter().map(|(g, _)| g.name()).collect();
            let names: Vec<&str> = names.iter().map(String::as_str).collect();
            let chars: Vec<ZPoly> = gens.iter().map(|(_, c)| c.clone()).collect();
            let images: HashMap<Var, ZPoly> = gens.iter().cloned().collect();
            let mut out = Vec::new();
            for (la, a) in &first.spins {
                for (lb, b) in &second.spins {
                    let sq = (a * b).pow(2);
                    let label = format!("({la} {lb})^2");
                    // squares of spin-type classes are linear in each factor
                    let found = express_in_subring(&sq, &chars, 2, SubringMode::Integer);
                    match found.expression(&names).and_then(|e| e.to_integer()) {
                        Some(expr) => {
                            let back = expr
                                .substitute(&images)
                                .map_err(|e| CharError::Params(e.to_string()))?;
                            out.push(sides(format!("{label} = {expr}"), sq, back));
                        }
                        None => out.push(sides(
                            format!("{label} not in R: {found:?}"),
                            sq,
                            ZPoly::zero(),
                        )),
                    }
                }
            }
            out
        }
        _ => return Err(err()),
    })
}

/// One factor `SO(r)` of `R = R(SO(k) x SO(n-k))` and its spin-type elements.
struct Factor {
    generators: Vec<(Var, ZPoly)>,
    spins: Vec<(String, ZPoly)>,
}

impl Factor {
    fn new(coord: fn(usize) -> Var, r: usize, lam: &str, spin: &str, prime: &str) -> Factor {
        let h = r / 2;
        let coords = block(coord, h);
        let odd = r % 2 == 1;
        let ext = exterior_powers(&coords, odd);
        let mut generators: Vec<(Var, ZPoly)> = (1..=h)
            .map(|p| (Var::indexed(lam, p), ext[p].clone()))
            .collect();
        let spins = if odd {
            vec![(format!("{spin}{prime}"), full_spin(&coords))]
        } else {
            let plus = hodge_half(&coords, true).expect("integral");
            generators.push((Var::new(&format!("{lam}{h}_plus")), plus));
            vec![
                (
                    format!("{spin}{prime}+"),
                    half_spin(&coords, true).expect("integral"),
                ),
                (
                    format!("{spin}{prime}-"),
                    half_spin(&coords, false).expect("integral"),
                ),
            ]
        };
        Factor {
            generators,
            spins,
        }
    }
}

pub fn verify_identity(
    case: IdentityCase,
    params: IdentityParams,
) -> Result<IdentityResult, CharError> {
    verify_identity_with(case, params, &Caps::default())
}

pub fn verify_identity_with(
    case: IdentityCase,
    params: IdentityParams,
    caps: &Caps,
) -> Result<IdentityResult, CharError> {
    check_caps(params, caps)?;
    let witness = identity_sides(case, params)?.into_iter().find_map(|s| {
        let diff = &s.lhs - &s.rhs;
        (!diff.is_zero()).then(|| format!("{}: {}", s.label, diff))
    });
    Ok(IdentityResult {
        case,
        params,
        pass: witness.is_none(),
        witness,
    })
}

/// Every case at every parameter set within `caps`.
pub fn identity_params(case: IdentityCase, caps: &Caps) -> Vec<IdentityParams> {
    use IdentityCase as C;
    let pairs = |pred: &dyn Fn(usize, usize) -> bool| -> Vec<IdentityParams> {
        let mut out = Vec::new();
        for n in 4..=2 * caps.max_m {
            for k in 1..n {
                if pred(n, k) && k / 2 <= caps.max_st && (n - k) / 2 <= caps.max_st {
                    out.push(IdentityParams::Pair { n, k });
                }
            }
        }
        out
    };
    match case {
        C::Eq3 => pairs(&|n, k| k % 2 == 1 && (n - k) % 2 == 1 && 2 * k <= n),
        C::DeltaProduct => (1..=caps.max_m)
            .map(|m| IdentityParams::Spin { m })
            .collect(),
        C::OddSpinSquare | C::HodgeQuadratic => (1..=caps.max_st)
            .map(|s| IdentityParams::Orth { s })
            .collect(),
        C::Restriction | C::ZIdentities => {
            pairs(&|n, k| n % 4 == 0 && k % 2 == 1 && k >= 3 && 2 * k <= n)
        }
        C::Rh0Squares => pairs(&|n, k| k >= 2 && n - k >= 2 && 2 * k <= n),
    }
}

pub fn identity_suite(caps: &Caps) -> Result<Vec<IdentityResult>, CharError> {
    let mut out = Vec::new();
    for case in IdentityCase::ALL {
        for params in identity_params(case, caps) {
            out.push(verify_identity_with(case, params, caps)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(
            verify_identity(IdentityCase::DeltaProduct, IdentityParams::Spin { m: 4 })
                .unwrap()
                .pass
        );
        assert!(
            verify_identity(
                IdentityCase::Restriction,
                IdentityParams::Pair { n: 8, k: 3 }
            )
            .unwrap()
            .pass
        );
        assert!(matches!(
            verify_identity(
                IdentityCase::Restriction,
                IdentityParams::Pair { n: 16, k: 3 }
            ),
            Err(CharError::CapExceeded(_))
        ));
        assert!(verify_identity(IdentityCase::Restriction, IdentityParams::Spin { m: 4 }).is_err());
    }

    #[test]
    fn sign_error_is_detected() {
        let mut s = identity_sides(IdentityCase::Eq3, IdentityParams::Pair { n: 8, k: 3 }).unwrap();
        let rhs = &mut s[0].rhs;
        let (m, c) = rhs
            .terms()
            .next()
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        rhs.add_term(m, &(-c * 2));
        assert!(!(&s[0].lhs - &s[0].rhs).is_zero());
    }

    #[test]
    fn full_suite_passes() {
        let results = identity_suite(&Caps {
            max_m: 4,
            max_st: 3,
        })
        .unwrap();
        assert!(results.len() > 20);
        for r in &results {
            assert!(r.pass, "{} {}: {:?}", r.case, r.params, r.witness);
        }
    }
}
