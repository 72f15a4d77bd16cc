use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::exactmath::{solve_integer, solve_rational, IntMatrix};
use crate::poly::{Monomial, Polynomial, QPoly, Var, ZPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubringMode {
    Integer,
    Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expressibility {
    /// `target = sum c * prod gens^alpha`, as (alpha, c) pairs.
    Expressed { terms: Vec<(Vec<u32>, BigRational)> },
    /// No combination of generator monomials up to the cap works.
    NotExpressibleWithinCap { cap: u32 },
    /// A substitution fixing every generator moves the target.
    NotExpressible { certificate: String },
}

impl Expressibility {
    pub fn is_expressed(&self) -> bool {
        matches!(self, Expressibility::Expressed { .. })
    }

    /// Renders the expression in formal generator names `g0, g1, ...`.
    pub fn expression(&self, names: &[&str]) -> Option<QPoly> {
        let Expressibility::Expressed { terms } = self else {
            return None;
        };
        Some(Polynomial::from_terms(terms.iter().map(|(a, c)| {
            let m = Monomial::from_pairs(
                a.iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| (Var::new(names[i]), k as i32)),
            );
            (m, c.clone())
        })))
    }
}

fn exponent_vectors(n: usize, cap: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur[i] = k;
            rec(i + 1, left - k, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, cap, &mut vec![0; n], &mut out);
    out.sort_by_key(|a| (a.iter().sum::<u32>(), std::cmp::Reverse(a.clone())));
    out
}

/// Writes `target` as a polynomial in `gens` using generator monomials of
/// total degree at most `cap`.
pub fn express_in_subring(
    target: &ZPoly,
    gens: &[ZPoly],
    cap: u32,
    mode: SubringMode,
) -> Expressibility {
    let alphas = exponent_vectors(gens.len(), cap);
    let mut powers: HashMap<(usize, u32), ZPoly> = HashMap::new();
    let products: Vec<ZPoly> = alphas
        .iter()
        .map(|a| {
            a.iter()
                .enumerate()
                .map(|(i, &k)| {
                    powers
                        .entry((i, k))
                        .or_insert_with(|| gens[i].pow(k))
                        .clone()
                })
                .product()
        })
        .collect();
    let mut monos: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in products.iter().chain(std::iter::once(target)) {
        for (m, _) in p.terms() {
            let next = monos.len();
            monos.entry(m.clone()).or_insert(next);
        }
    }
    let rows = monos.len();
    let mut b = vec![BigInt::zero(); rows];
    for (m, c) in target.terms() {
        b[monos[m]] = c.clone();
    }
    let mut a = IntMatrix::zeros(rows, alphas.len());
    for (j, p) in products.iter().enumerate() {
        for (m, c) in p.terms() {
            a[(monos[m], j)] = c.clone();
        }
    }
    let solution: Option<Vec<BigRational>> = match mode {
        SubringMode::Integer => solve_integer(&a, &b)
            .expect("dimensions agree")
            .map(|c| c.into_iter().map(BigRational::from_integer).collect()),
        SubringMode::Rational => {
            let q = |x: &BigInt| BigRational::from_integer(x.clone());
            let aq: Vec<Vec<BigRational>> = (0..rows)
                .map(|i| a.row(i).iter().map(q).collect())
                .collect();
            let bq: Vec<BigRational> = b.iter().map(q).collect();
            solve_rational(&aq, &bq, alphas.len())
        }
    };
    if let Some(c) = solution {
        let terms: Vec<(Vec<u32>, BigRational)> = alphas
            .into_iter()
            .zip(c)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let check: QPoly = terms
            .iter()
            .map(|(a, c)| {
                let p: ZPoly = a.iter().enumerate().map(|(i, &k)| gens[i].pow(k)).product();
                p.to_rational().scale(c)
            })
            .sum();
        assert_eq!(
            check,
            target.to_rational(),
            "subring expression must re-expand to the target"
        );
        return Expressibility::Expressed { terms };
    }
    match symmetry_certificate(target, gens) {
        Some(certificate) => Expressibility::NotExpressible { certificate },
        None => Expressibility::NotExpressibleWithinCap { cap },
    }
}

/// Searches variable transpositions and inversions for one that fixes every
/// generator but not the target.
fn symmetry_certificate(target: &ZPoly, gens: &[ZPoly]) -> Option<String> {
    let mut vars: Vec<Var> = target.variables().into_iter().collect();
    for g in gens {
        vars.extend(g.variables());
    }
    vars.sort();
    vars.dedup();
    let fixes = |images: &HashMap<Var, ZPoly>| -> Option<bool> {
        for g in gens {
            if &g.substitute(images).ok()? != g {
                return Some(false);
            }
        }
        Some(target.substitute(images).ok()? != *target)
    };
    for (i, &a) in vars.iter().enumerate() {
        for &b in &vars[i + 1..] {
            let images: HashMap<Var, ZPoly> = [(a, ZPoly::var(b)), (b, ZPoly::var(a))]
                .into_iter()
                .collect();
            if fixes(&images) == Some(true) {
                return Some(format!(
                    "swap {a} <-> {b} fixes the generators but not the target"
                ));
            }
        }
    }
    for &a in &vars {
        let inv = Polynomial::term(Monomial::from_pairs([(a, -1)]), BigInt::from(1));
        let images: HashMap<Var, ZPoly> = [(a, inv)].into_iter().collect();
        if fixes(&images) == Some(true) {
            return Some(format!(
                "{a} -> {a}^-1 fixes the generators but not the target"
            ));
        }
    }
    None
}
