use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::CharError;
use crate::poly::{Monomial, Var, ZPoly};

pub fn u(j: usize) -> Var {
    Var::indexed("u", j)
}

pub fn v(j: usize) -> Var {
    Var::indexed("v", j)
}

pub fn theta() -> Var {
    Var::new("theta")
}

/// Exponent parity of the torus monomials of a character.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ParityClass {
    Even,
    Odd,
    Mixed,
}

/// Parity class of `f` with respect to the given coordinates (a monomial is odd
/// when every coordinate exponent is odd, even when every one is even).
pub fn parity_class(f: &ZPoly, coords: &[Var]) -> ParityClass {
    let mut seen_even = false;
    let mut seen_odd = false;
    for (m, _) in f.terms() {
        let odd: Vec<bool> = coords.iter().map(|&c| m.exponent(c) % 2 != 0).collect();
        if odd.iter().all(|&o| o) && !coords.is_empty() {
            seen_odd = true;
        } else if odd.iter().all(|&o| !o) {
            seen_even = true;
        } else {
            return ParityClass::Mixed;
        }
    }
    match (seen_even, seen_odd) {
        (_, false) => ParityClass::Even,
        (false, true) => ParityClass::Odd,
        (true, true) => ParityClass::Mixed,
    }
}

/// Applies `theta^2 = 1`.
pub fn reduce_theta(f: &ZPoly) -> ZPoly {
    let th = theta();
    ZPoly::from_terms(f.terms().map(|(m, c)| {
        let e = m.exponent(th).rem_euclid(2);
        let rest: Vec<(Var, i32)> = m
            .pairs()
            .iter()
            .filter(|(v, _)| *v != th)
            .copied()
            .collect();
        let mut pairs = rest;
        if e == 1 {
            pairs.push((th, 1));
        }
        (Monomial::from_pairs(pairs), c.clone())
    }))
}

/// Sets `theta = 1`.
pub fn forget_theta(f: &ZPoly) -> ZPoly {
    let th = theta();
    ZPoly::from_terms(f.terms().map(|(m, c)| {
        (
            Monomial::from_pairs(m.pairs().iter().filter(|(v, _)| *v != th).copied()),
            c.clone(),
        )
    }))
}

/// The restriction `R T~ -> R T~_0 (x) R Z` for `n = 2m = 0 mod 4`, `k = 2s+1`:
/// `u_j^{+-2} -> theta u_j^{+-2}` (j <= s), `u_{s+1}^{+-2} -> theta`,
/// `u_j^{+-2} -> theta v_{j-s-1}^{+-2}` (j > s+1), and
/// `u_1...u_m -> theta^eps u_1..u_s v_1..v_t` with `eps = [n = 4 mod 8]`.
pub fn mu_star(x: &ZPoly, n: usize, k: usize) -> Result<ZPoly, CharError> {
    if !n.is_multiple_of(4) || k.is_multiple_of(2) || k < 2 || 2 * k > n {
        return Err(CharError::Params(format!(
            "restriction needs n = 0 mod 4 and odd k <= n/2, got ({n},{k})"
        )));
    }
    let m = n / 2;
    let s = (k - 1) / 2;
    let coords: Vec<Var> = (1..=m).map(u).collect();
    let eps0 = i64::from(n % 8 == 4);
    let mut out = ZPoly::zero();
    for (mono, c) in x.terms() {
        if mono.vars().any(|w| !coords.contains(&w) && w != theta()) {
            return Err(CharError::NotInTorusRing(x.to_string()));
        }
        let exps: Vec<i32> = coords.iter().map(|&w| mono.exponent(w)).collect();
        let odd = exps[0] % 2 != 0;
        if exps.iter().any(|e| (e % 2 != 0) != odd) {
            return Err(CharError::MixedParity(mono.to_string()));
        }
        // u^a = (u_1..u_m)^[odd] * prod u_j^{2 b_j}; each u_j^{2 b_j} contributes theta^{b_j}
        let shift = i32::from(odd);
        let mut theta_exp: i64 = if odd { eps0 } else { 0 } + i64::from(mono.exponent(theta()));
        let mut pairs = Vec::new();
        for (j, &a) in exps.iter().enumerate() {
            theta_exp += i64::from((a - shift) / 2);
            let idx = j + 1;
            if idx <= s {
                pairs.push((u(idx), a));
            } else if idx > s + 1 {
                pairs.push((v(idx - s - 1), a));
            }
        }
        if theta_exp.rem_euclid(2) == 1 {
            pairs.push((theta(), 1));
        }
        out.add_term(
            Monomial::from_pairs(pairs.into_iter().filter(|p| p.1 != 0)),
            c,
        );
    }
    Ok(out)
}

/// A Gaussian integer `re + im i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "{}{:+}i", self.re, self.im)
        }
    }
}

/// Value at `z_0 = e_1...e_n`, the torus point with every angle 1/4, so `u_j -> i`.
pub fn evaluate_at_z0(x: &ZPoly, n: usize) -> Result<GaussianInt, CharError> {
    let m = n / 2;
    let coords: Vec<Var> = (1..=m).map(u).collect();
    let mut re = BigInt::zero();
    let mut im = BigInt::zero();
    for (mono, c) in x.terms() {
        if mono.vars().any(|w| !coords.contains(&w)) {
            return Err(CharError::NotInTorusRing(x.to_string()));
        }
        let total: i64 = coords.iter().map(|&w| i64::from(mono.exponent(w))).sum();
        match total.rem_euclid(4) {
            0 => re += c,
            1 => im += c,
            2 => re -= c,
            _ => im -= c,
        }
    }
    Ok(GaussianInt { re, im })
}

/// Weyl group symmetries used for invariance checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WeylType {
    /// Permutations and all sign changes.
    B,
    /// Permutations and even numbers of sign changes.
    D,
}

fn invert_coords(f: &ZPoly, which: &[Var]) -> ZPoly {
    ZPoly::from_terms(f.terms().map(|(m, c)| {
        (
            Monomial::from_pairs(m.pairs().iter().map(|&(w, e)| {
                if which.contains(&w) {
                    (w, -e)
                } else {
                    (w, e)
                }
            })),
            c.clone(),
        )
    }))
}

fn swap_coords(f: &ZPoly, a: Var, b: Var) -> ZPoly {
    ZPoly::from_terms(f.terms().map(|(m, c)| {
        (
            Monomial::from_pairs(m.pairs().iter().map(|&(w, e)| {
                if w == a {
                    (b, e)
                } else if w == b {
                    (a, e)
                } else {
                    (w, e)
                }
            })),
            c.clone(),
        )
    }))
}

/// Invariance under generators of the Weyl group acting on `coords`.
pub fn is_weyl_invariant(f: &ZPoly, coords: &[Var], kind: WeylType) -> bool {
    for w in coords.windows(2) {
        if swap_coords(f, w[0], w[1]) != *f {
            return false;
        }
    }
    match kind {
        WeylType::B => coords.first().is_none_or(|&c| invert_coords(f, &[c]) == *f),
        WeylType::D => coords.len() < 2 || invert_coords(f, &coords[..2]) == *f,
    }
}

/// Character value at the identity (`theta = 1`).
pub fn dimension(f: &ZPoly) -> BigInt {
    f.terms().map(|(_, c)| c.clone()).sum()
}

pub fn is_one_dimensional_unit(f: &ZPoly) -> bool {
    f.num_terms() == 1 && f.terms().all(|(_, c)| c.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> ZPoly {
        s.parse().unwrap()
    }

    #[test]
    fn mu_star_examples() {
        // n=8, k=3: s=1, u2 is the collapsed coordinate
        assert_eq!(mu_star(&p("u1^2*u2^-2"), 8, 3).unwrap(), p("u1^2"));
        assert_eq!(mu_star(&p("u1*u2*u3*u4"), 8, 3).unwrap(), p("u1*v1*v2"));
        assert_eq!(
            mu_star(&p("u1*u2*u3*u4*u5*u6"), 12, 3).unwrap(),
            p("theta*u1*v1*v2*v3*v4")
        );
        assert_eq!(mu_star(&p("u3^2"), 8, 3).unwrap(), p("theta*v1^2"));
        assert!(matches!(
            mu_star(&p("u1*u2"), 8, 3),
            Err(CharError::MixedParity(_))
        ));
    }

    #[test]
    fn z0_values() {
        assert_eq!(
            evaluate_at_z0(&p("u1*u2*u3*u4"), 8).unwrap().re,
            BigInt::from(1)
        );
        assert_eq!(
            evaluate_at_z0(&p("u1*u2*u3*u4*u5*u6"), 12).unwrap().re,
            BigInt::from(-1)
        );
        assert_eq!(
            evaluate_at_z0(&ZPoly::one(), 8).unwrap().re,
            BigInt::from(1)
        );
    }

    #[test]
    fn parity() {
        let c = [u(1), u(2)];
        assert_eq!(parity_class(&p("u1^2 + u2^-2"), &c), ParityClass::Even);
        assert_eq!(parity_class(&p("u1*u2 + u1^-1*u2^3"), &c), ParityClass::Odd);
        assert_eq!(parity_class(&p("u1*u2 + 1"), &c), ParityClass::Mixed);
        assert_eq!(parity_class(&p("u1"), &c), ParityClass::Mixed);
    }

    #[test]
    fn weyl_checks() {
        let c = [u(1), u(2)];
        assert!(is_weyl_invariant(
            &p("u1*u2 + u1^-1*u2^-1"),
            &c,
            WeylType::D
        ));
        assert!(!is_weyl_invariant(
            &p("u1*u2 + u1^-1*u2^-1"),
            &c,
            WeylType::B
        ));
        assert!(!is_weyl_invariant(&p("u1^2"), &c, WeylType::D));
    }

    #[test]
    fn theta_reduction() {
        assert_eq!(reduce_theta(&p("theta^3*u1 + theta^2")), p("theta*u1 + 1"));
        assert_eq!(forget_theta(&p("theta*u1 + 2")), p("u1 + 2"));
    }
}
