use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use super::torus::{dimension, theta, u, v, WeylType};
use super::CharError;
use crate::exactmath::binomial;
use crate::poly::{elementary_all, Var, ZPoly};

/// The groups whose representation rings are modelled by characters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GroupTag {
    Spin(usize),
    SO(usize),
    /// `H^0_{n,k}`, the identity component, for `k` and `n - k` odd.
    H0 {
        n: usize,
        k: usize,
    },
    /// `H_{n,k} = H^0_{n,k} x Z/2`, for `n = 0 mod 4` and `k` odd.
    H {
        n: usize,
        k: usize,
    },
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::Spin(n) => write!(f, "Spin({n})"),
            GroupTag::SO(n) => write!(f, "SO({n})"),
            GroupTag::H0 { n, k } => write!(f, "H0({n},{k})"),
            GroupTag::H { n, k } => write!(f, "H({n},{k})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Symbol {
    /// Exterior power of the standard representation (`Lambda_j` of `Spin(n)`, `lambda_p` of `SO(k)`).
    Ext(usize),
    /// Spin representation of `Spin(2s+1)`.
    Spin,
    HalfSpinPlus,
    HalfSpinMinus,
    /// `lambda_s^+-` of `SO(2s)`.
    HodgePlus,
    HodgeMinus,
    /// `lambda_p` of the `SO(k)` factor of `H`.
    Lambda(usize),
    /// `mu_q` of the `SO(n-k)` factor of `H`.
    Mu(usize),
    /// `Delta_s Delta'_t`.
    DeltaST,
    Theta,
    /// `z_j = e_j(u_i^2 + u_i^-2)` in `R Spin(2m)`.
    Z(usize),
    /// `z'_1 = z_1 - 2`, `z'_r = z_r - 2 z'_{r-1}`.
    ZPrime(usize),
    /// `x_p = e_p(u_i^2 + u_i^-2, i <= s)`.
    X(usize),
    /// `y_q = e_q(v_i^2 + v_i^-2, i <= t)`.
    Y(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepElement {
    pub group: GroupTag,
    pub symbol: Symbol,
    pub character: ZPoly,
}

impl RepElement {
    pub fn dimension(&self) -> BigInt {
        dimension(&self.character)
    }
}

/// Torus coordinates of a group, grouped into blocks with their Weyl type.
pub fn coordinate_blocks(group: GroupTag) -> Vec<(Vec<Var>, WeylType)> {
    match group {
        GroupTag::Spin(n) | GroupTag::SO(n) => {
            let kind = if n % 2 == 1 { WeylType::B } else { WeylType::D };
            vec![((1..=n / 2).map(u).collect(), kind)]
        }
        GroupTag::H0 { n, k } | GroupTag::H { n, k } => vec![
            ((1..=k / 2).map(u).collect(), WeylType::B),
            ((1..=(n - k) / 2).map(v).collect(), WeylType::B),
        ],
    }
}

/// `e_j(c_1^2, c_1^-2, ..., [1])`.
pub fn exterior_powers(coords: &[Var], odd: bool) -> Vec<ZPoly> {
    let mut xs: Vec<ZPoly> = coords
        .iter()
        .flat_map(|&c| [ZPoly::var(c).pow(2), square_inverse(c)])
        .collect();
    if odd {
        xs.push(ZPoly::one());
    }
    elementary_all(&xs)
}

fn square_inverse(c: Var) -> ZPoly {
    ZPoly::term(crate::poly::Monomial::from_pairs([(c, -2)]), BigInt::one())
}

fn inverse(c: Var) -> ZPoly {
    ZPoly::term(crate::poly::Monomial::from_pairs([(c, -1)]), BigInt::one())
}

/// `prod (c + c^-1)`: all sign vectors.
pub fn full_spin(coords: &[Var]) -> ZPoly {
    coords.iter().map(|&c| ZPoly::var(c) + inverse(c)).product()
}

/// `prod (c - c^-1)`: sign vectors weighted by `(-1)^(number of minus signs)`.
fn signed_spin(coords: &[Var]) -> ZPoly {
    coords.iter().map(|&c| ZPoly::var(c) - inverse(c)).product()
}

fn halve(f: ZPoly, what: &str) -> Result<ZPoly, CharError> {
    let two = BigInt::from(2);
    if f.terms().any(|(_, c)| !c.is_multiple_of(&two)) {
        return Err(CharError::NotIntegral(what.to_string()));
    }
    Ok(f.map_coeffs(|c: &BigInt| c / &two))
}

/// `Delta^+` (even number of minus signs) or `Delta^-` of `Spin(2m)`.
pub fn half_spin(coords: &[Var], plus: bool) -> Result<ZPoly, CharError> {
    let (a, b) = (full_spin(coords), signed_spin(coords));
    halve(if plus { a + b } else { a - b }, "half spin")
}

/// `lambda_s^+- = (e_s(c^+-2) +- prod (c^2 - c^-2)) / 2` for `SO(2s)`.
pub fn hodge_half(coords: &[Var], plus: bool) -> Result<ZPoly, CharError> {
    let e = exterior_powers(coords, false).swap_remove(coords.len());
    let prod: ZPoly = coords
        .iter()
        .map(|&c| ZPoly::var(c).pow(2) - square_inverse(c))
        .product();
    halve(if plus { e + prod } else { e - prod }, "lambda_s^+-")
}

fn trace_classes(coords: &[Var]) -> Vec<ZPoly> {
    let xs: Vec<ZPoly> = coords
        .iter()
        .map(|&c| ZPoly::var(c).pow(2) + square_inverse(c))
        .collect();
    elementary_all(&xs)
}

fn pick(list: Vec<ZPoly>, j: usize, what: &str) -> Result<ZPoly, CharError> {
    let bound = list.len() - 1;
    list.into_iter()
        .nth(j)
        .ok_or_else(|| CharError::InvalidSymbol(format!("{what} index {j} exceeds {bound}")))
}

pub fn character_of(symbol: Symbol, group: GroupTag) -> Result<RepElement, CharError> {
    let bad = || CharError::InvalidSymbol(format!("{symbol:?} is not defined for {group}"));
    let character = match (group, symbol) {
        (GroupTag::Spin(n) | GroupTag::SO(n), Symbol::Ext(j)) => {
            let c: Vec<Var> = (1..=n / 2).map(u).collect();
            pick(exterior_powers(&c, n % 2 == 1), j, "exterior power")?
        }
        (GroupTag::Spin(n), Symbol::Spin) if n % 2 == 1 => {
            full_spin(&(1..=n / 2).map(u).collect::<Vec<_>>())
        }
        (GroupTag::Spin(n), Symbol::HalfSpinPlus | Symbol::HalfSpinMinus) if n % 2 == 0 => {
            half_spin(
                &(1..=n / 2).map(u).collect::<Vec<_>>(),
                symbol == Symbol::HalfSpinPlus,
            )?
        }
        (GroupTag::SO(n), Symbol::HodgePlus | Symbol::HodgeMinus) if n % 2 == 0 && n >= 2 => {
            hodge_half(
                &(1..=n / 2).map(u).collect::<Vec<_>>(),
                symbol == Symbol::HodgePlus,
            )?
        }
        (GroupTag::Spin(n), Symbol::Z(j)) if n % 2 == 0 => pick(
            trace_classes(&(1..=n / 2).map(u).collect::<Vec<_>>()),
            j,
            "z",
        )?,
        (GroupTag::Spin(n), Symbol::ZPrime(j)) if n % 2 == 0 => {
            let z = trace_classes(&(1..=n / 2).map(u).collect::<Vec<_>>());
            if j >= z.len() {
                return Err(bad());
            }
            let mut prev = ZPoly::one();
            for r in 1..=j {
                prev = &z[r] - &prev.scale(&BigInt::from(2));
            }
            if j == 0 {
                ZPoly::one()
            } else {
                prev
            }
        }
        (GroupTag::H0 { n, k } | GroupTag::H { n, k }, _) => {
            if k % 2 == 0 || (n - k) % 2 == 0 {
                return Err(CharError::Params(format!(
                    "H({n},{k}) is modelled for odd k and n-k only"
                )));
            }
            let us: Vec<Var> = (1..=k / 2).map(u).collect();
            let vs: Vec<Var> = (1..=(n - k) / 2).map(v).collect();
            match symbol {
                Symbol::Lambda(p) => pick(exterior_powers(&us, true), p, "lambda")?,
                Symbol::Mu(q) => pick(exterior_powers(&vs, true), q, "mu")?,
                Symbol::DeltaST => full_spin(&us) * full_spin(&vs),
                Symbol::X(p) => pick(trace_classes(&us), p, "x")?,
                Symbol::Y(q) => pick(trace_classes(&vs), q, "y")?,
                Symbol::Theta if matches!(group, GroupTag::H { .. }) => {
                    if n % 4 != 0 {
                        return Err(CharError::Params(format!("H({n},{k}) does not split")));
                    }
                    ZPoly::var(theta())
                }
                _ => return Err(bad()),
            }
        }
        _ => return Err(bad()),
    };
    Ok(RepElement {
        group,
        symbol,
        character,
    })
}

/// The dimension predicted from the representation's construction.
pub fn formal_dimension(symbol: Symbol, group: GroupTag) -> Option<BigInt> {
    let two = |e: usize| BigInt::one() << e;
    Some(match (group, symbol) {
        (GroupTag::Spin(n) | GroupTag::SO(n), Symbol::Ext(j)) => binomial(n as u64, j as u64),
        (GroupTag::Spin(n), Symbol::Spin) => two(n / 2),
        (GroupTag::Spin(n), Symbol::HalfSpinPlus | Symbol::HalfSpinMinus) => two(n / 2 - 1),
        (GroupTag::SO(n), Symbol::HodgePlus | Symbol::HodgeMinus) => {
            binomial(n as u64, n as u64 / 2) / 2
        }
        (GroupTag::Spin(n), Symbol::Z(j)) => binomial(n as u64 / 2, j as u64) * two(j),
        (GroupTag::H0 { k, .. } | GroupTag::H { k, .. }, Symbol::Lambda(p)) => {
            binomial(k as u64, p as u64)
        }
        (GroupTag::H0 { n, k } | GroupTag::H { n, k }, Symbol::Mu(q)) => {
            binomial((n - k) as u64, q as u64)
        }
        (GroupTag::H0 { n, .. } | GroupTag::H { n, .. }, Symbol::DeltaST) => two(n / 2 - 1),
        (GroupTag::H0 { k, .. } | GroupTag::H { k, .. }, Symbol::X(p)) => {
            binomial(k as u64 / 2, p as u64) * two(p)
        }
        (GroupTag::H0 { n, k } | GroupTag::H { n, k }, Symbol::Y(q)) => {
            binomial((n - k) as u64 / 2, q as u64) * two(q)
        }
        (GroupTag::H { .. }, Symbol::Theta) => BigInt::one(),
        _ => return None,
    })
}

/// Every symbol defined for a group, for sweeps.
pub fn all_symbols(group: GroupTag) -> Vec<Symbol> {
    let mut out = Vec::new();
    match group {
        GroupTag::Spin(n) => {
            out.extend((0..=n).map(Symbol::Ext));
            if n % 2 == 1 {
                out.push(Symbol::Spin);
            } else {
                out.extend([Symbol::HalfSpinPlus, Symbol::HalfSpinMinus]);
                out.extend((0..=n / 2).map(Symbol::Z));
                out.extend((0..=n / 2).map(Symbol::ZPrime));
            }
        }
        GroupTag::SO(n) => {
            out.extend((0..=n).map(Symbol::Ext));
            if n % 2 == 0 {
                out.extend([Symbol::HodgePlus, Symbol::HodgeMinus]);
            }
        }
        GroupTag::H0 { n, k } | GroupTag::H { n, k } => {
            out.extend((0..=k).map(Symbol::Lambda));
            out.extend((0..=n - k).map(Symbol::Mu));
            out.push(Symbol::DeltaST);
            out.extend((0..=k / 2).map(Symbol::X));
            out.extend((0..=(n - k) / 2).map(Symbol::Y));
            if matches!(group, GroupTag::H { .. }) {
                out.push(Symbol::Theta);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charring::torus::is_weyl_invariant;

    #[test]
    fn examples() {
        let d = character_of(Symbol::Spin, GroupTag::Spin(5)).unwrap();
        assert_eq!(d.character.num_terms(), 4);
        let l1 = character_of(Symbol::Ext(1), GroupTag::Spin(8)).unwrap();
        assert_eq!(l1.dimension(), BigInt::from(8));
        let dp = character_of(Symbol::HalfSpinPlus, GroupTag::Spin(8)).unwrap();
        assert_eq!(dp.dimension(), BigInt::from(8));
        assert!(character_of(Symbol::HalfSpinPlus, GroupTag::Spin(7)).is_err());
        assert!(character_of(Symbol::Ext(9), GroupTag::Spin(8)).is_err());
    }

    #[test]
    fn hodge_halves_sum_to_lambda_s() {
        for s in 1..=4 {
            let g = GroupTag::SO(2 * s);
            let plus = character_of(Symbol::HodgePlus, g).unwrap().character;
            let minus = character_of(Symbol::HodgeMinus, g).unwrap().character;
            let ls = character_of(Symbol::Ext(s), g).unwrap().character;
            assert_eq!(plus + minus, ls);
        }
    }

    #[test]
    fn dimensions_and_weyl_invariance() {
        let mut groups = Vec::new();
        for n in 2..=12 {
            groups.push(GroupTag::Spin(n));
            groups.push(GroupTag::SO(n));
        }
        for (n, k) in [(8, 3), (8, 1), (12, 3), (12, 5), (10, 3), (6, 3)] {
            groups.push(GroupTag::H0 { n, k });
            if n % 4 == 0 {
                groups.push(GroupTag::H { n, k });
            }
        }
        for g in groups {
            for sym in all_symbols(g) {
                let r = character_of(sym, g).unwrap();
                if let Some(d) = formal_dimension(sym, g) {
                    assert_eq!(r.dimension(), d, "{sym:?} of {g}");
                }
                let hodge = matches!(sym, Symbol::HodgePlus | Symbol::HodgeMinus);
                let half = matches!(sym, Symbol::HalfSpinPlus | Symbol::HalfSpinMinus);
                for (coords, kind) in coordinate_blocks(g) {
                    // half-spin and Hodge halves are only invariant under the even Weyl group
                    let kind = if hodge || half { WeylType::D } else { kind };
                    assert!(
                        is_weyl_invariant(&r.character, &coords, kind),
                        "{sym:?} of {g}"
                    );
                }
            }
        }
    }
}
