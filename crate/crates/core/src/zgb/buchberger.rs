//! Buchberger's algorithm with S- and gcd-polynomials over the integers
//! (and the rationals, where every leading coefficient is a unit).

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use super::dense::{divides, lcm, quotient, DPoly, MonomialOrder};
use super::ZgbError;
use crate::poly::Coeff;

/// Limits on a Gröbner computation. `None` means unbounded.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_steps: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn millis(ms: u64) -> Self {
        Budget {
            max_steps: None,
            time_limit: Some(Duration::from_millis(ms)),
        }
    }
}

pub(crate) struct Meter {
    start: Instant,
    steps: u64,
    budget: Budget,
}

impl Meter {
    pub fn new(budget: Budget) -> Self {
        Meter {
            start: Instant::now(),
            steps: 0,
            budget,
        }
    }

    pub fn tick(&mut self) -> Result<(), ZgbError> {
        self.steps += 1;
        let over_steps = self.budget.max_steps.is_some_and(|m| self.steps > m);
        let over_time = self.steps.is_multiple_of(64)
            && self
                .budget
                .time_limit
                .is_some_and(|t| self.start.elapsed() > t);
        if over_steps || over_time {
            return Err(ZgbError::BudgetExceeded {
                steps: self.steps,
                elapsed_ms: self.start.elapsed().as_millis() as u64,
            });
        }
        Ok(())
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }
}

/// Reduces every term of `f` by iterated Euclidean division of its coefficient
/// by the leading coefficients of all divisors, until nothing changes.
pub(crate) fn reduce_full<C: Coeff>(
    f: DPoly<C>,
    basis: &[DPoly<C>],
    order: MonomialOrder,
    meter: &mut Meter,
) -> Result<DPoly<C>, ZgbError> {
    let mut rem = f;
    let mut idx = 0;
    while idx < rem.terms.len() {
        let m = rem.terms[idx].0.clone();
        let mut progressed = true;
        let mut vanished = false;
        while progressed && !vanished {
            progressed = false;
            for g in basis {
                if !divides(g.lm(), &m) {
                    continue;
                }
                let c = rem.terms[idx].1.clone();
                let (q, _) = c.div_rem_euclid(g.lc());
                if q.is_zero() {
                    continue;
                }
                meter.tick()?;
                rem = rem.add_scaled(&-q, &quotient(&m, g.lm()), g, order);
                progressed = true;
                if rem.terms.get(idx).is_none_or(|t| t.0 != m) {
                    vanished = true;
                    break;
                }
            }
        }
        if !vanished {
            idx += 1;
        }
    }
    Ok(rem)
}

/// Canonical normal form against a strong basis: at each monomial the
/// coefficient is reduced into `[0, c)` with `c` the least leading coefficient
/// among the divisors.
pub(crate) fn reduce_canonical<C: Coeff>(
    f: DPoly<C>,
    basis: &[DPoly<C>],
    order: MonomialOrder,
    skip: Option<usize>,
) -> DPoly<C> {
    let mut rem = f;
    let mut idx = 0;
    while idx < rem.terms.len() {
        let m = rem.terms[idx].0.clone();
        let best = basis
            .iter()
            .enumerate()
            .filter(|(i, g)| Some(*i) != skip && divides(g.lm(), &m))
            .min_by(|a, b| cmp_abs(a.1.lc(), b.1.lc()))
            .map(|(_, g)| g);
        let Some(g) = best else {
            idx += 1;
            continue;
        };
        let (q, r) = rem.terms[idx].1.div_rem_euclid(g.lc());
        if !q.is_zero() {
            rem = rem.add_scaled(&-q, &quotient(&m, g.lm()), g, order);
        }
        if !r.is_zero() {
            idx += 1;
        }
    }
    rem
}

fn cmp_abs<C: Coeff>(a: &C, b: &C) -> Ordering {
    let (x, y) = (a.abs(), b.abs());
    if x == y {
        Ordering::Equal
    } else if (x.clone() - y).is_negative() {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum PairKind {
    S,
    Gcd,
}

struct Pair {
    i: usize,
    j: usize,
    kind: PairKind,
    lcm: Vec<u32>,
}

fn s_poly<C: Coeff>(f: &DPoly<C>, g: &DPoly<C>, l: &[u32], order: MonomialOrder) -> DPoly<C> {
    let (gcd, _, _) = C::gcd_ext(f.lc(), g.lc());
    // lcm(a, b) / a = b / gcd
    let a = g.lc().try_div(&gcd).expect("gcd divides");
    let b = f.lc().try_div(&gcd).expect("gcd divides");
    let left = f.shift(&quotient(l, f.lm())).scale(&a);
    left.add_scaled(&-b, &quotient(l, g.lm()), g, order)
}

fn gcd_poly<C: Coeff>(f: &DPoly<C>, g: &DPoly<C>, l: &[u32], order: MonomialOrder) -> DPoly<C> {
    let (_, x, y) = C::gcd_ext(f.lc(), g.lc());
    let left = f.shift(&quotient(l, f.lm())).scale(&x);
    left.add_scaled(&y, &quotient(l, g.lm()), g, order)
}

pub(crate) struct GbRun<C> {
    pub basis: Vec<DPoly<C>>,
    pub steps: u64,
    pub pairs: u64,
}

pub(crate) fn buchberger<C: Coeff>(
    gens: Vec<DPoly<C>>,
    order: MonomialOrder,
    budget: Budget,
) -> Result<GbRun<C>, ZgbError> {
    let mut meter = Meter::new(budget);
    let mut basis: Vec<DPoly<C>> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut processed = 0u64;

    let insert = |h: DPoly<C>, basis: &mut Vec<DPoly<C>>, pairs: &mut Vec<Pair>| {
        let h = h.normalize();
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let l = lcm(g.lm(), h.lm());
            pairs.push(Pair {
                i,
                j: k,
                kind: PairKind::S,
                lcm: l.clone(),
            });
            let divisible = h.lc().try_div(g.lc()).is_some() || g.lc().try_div(h.lc()).is_some();
            if !divisible {
                pairs.push(Pair {
                    i,
                    j: k,
                    kind: PairKind::Gcd,
                    lcm: l,
                });
            }
        }
        basis.push(h);
    };

    for g in gens {
        if g.is_zero() {
            continue;
        }
        let h = reduce_full(g, &basis, order, &mut meter)?;
        if !h.is_zero() {
            insert(h, &mut basis, &mut pairs);
        }
    }

    while !pairs.is_empty() {
        meter.tick()?;
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                order
                    .cmp(&p.lcm, &q.lcm)
                    .then(p.kind.cmp(&q.kind))
                    .then(p.j.cmp(&q.j))
                    .then(p.i.cmp(&q.i))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        processed += 1;
        let (f, g) = (&basis[pair.i], &basis[pair.j]);
        let h = match pair.kind {
            PairKind::S => s_poly(f, g, &pair.lcm, order),
            PairKind::Gcd => gcd_poly(f, g, &pair.lcm, order),
        };
        let h = reduce_full(h, &basis, order, &mut meter)?;
        if !h.is_zero() {
            insert(h, &mut basis, &mut pairs);
        }
    }

    let basis = minimalize(basis, order);
    Ok(GbRun {
        basis,
        steps: meter.steps(),
        pairs: processed,
    })
}

/// Drops elements whose leading term is divisible by another's, then reduces tails.
fn minimalize<C: Coeff>(basis: Vec<DPoly<C>>, order: MonomialOrder) -> Vec<DPoly<C>> {
    let n = basis.len();
    let mut keep = vec![true; n];
    for i in 0..n {
        for j in 0..n {
            if i == j || !keep[j] {
                continue;
            }
            let (gi, gj) = (&basis[i], &basis[j]);
            if divides(gj.lm(), gi.lm()) && gi.lc().try_div(gj.lc()).is_some() {
                let same = gi.lm() == gj.lm() && gj.lc().try_div(gi.lc()).is_some();
                if !same || j < i {
                    keep[i] = false;
                    break;
                }
            }
        }
    }
    let mut out: Vec<DPoly<C>> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    out.sort_by(|a, b| {
        order
            .cmp(a.lm(), b.lm())
            .then_with(|| cmp_abs(a.lc(), b.lc()))
    });
    for i in 0..out.len() {
        let g = out[i].clone();
        let head = DPoly {
            terms: vec![g.terms[0].clone()],
        };
        let tail = DPoly {
            terms: g.terms[1..].to_vec(),
        };
        let tail = reduce_canonical(tail, &out, order, Some(i));
        out[i] = head.add(&tail, order);
    }
    out
}
