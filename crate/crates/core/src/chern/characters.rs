use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::pontryagin::{CohClass, PontryaginRing};
use super::ChernError;
use crate::exactmath::{big_to_json, binomial, factorial, invert_rational, IntMatrix};
use crate::poly::{newton_convert, symmetric_reduce, Monomial, NewtonDirection, QPoly, Var};

/// The two tautological bundles: `gamma` (rank `k`) and its complement `beta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Bundle {
    Gamma,
    Beta,
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn qb(x: BigInt) -> BigRational {
    BigRational::from_integer(x)
}

struct Side {
    rank: usize,
    /// Number of Chern-root pairs `+-x_i`.
    pairs: usize,
    roots: Vec<Var>,
    /// `e_j(x_1^2, ..)` as a class: `(-1)^j p_j`.
    elementary: Vec<QPoly>,
}

fn side(ring: &PontryaginRing, bundle: Bundle) -> Side {
    let (rank, pairs, prefix) = match bundle {
        Bundle::Gamma => (ring.k, ring.s, "x"),
        Bundle::Beta => (ring.n - ring.k, ring.t, "y"),
    };
    let class = |j: usize| match bundle {
        Bundle::Gamma => ring.p(j),
        Bundle::Beta => ring.q(j),
    };
    Side {
        rank,
        pairs,
        roots: (1..=pairs).map(|i| Var::indexed(prefix, i)).collect(),
        elementary: (0..=pairs)
            .map(|j| if j % 2 == 1 { -class(j) } else { class(j) })
            .collect(),
    }
}

fn check_cap(ring: &PontryaginRing, cap: u32) -> Result<(), ChernError> {
    if cap > ring.default_cap() {
        return Err(ChernError::CapExceeded(format!(
            "degree cap {cap} above {} for ({},{})",
            ring.default_cap(),
            ring.n,
            ring.k
        )));
    }
    Ok(())
}

/// Power sums `ps_m = sum x_i^(2m)`, `m = 1..=d`, in Pontryagin classes.
pub fn power_sums(ring: &PontryaginRing, bundle: Bundle, d: usize) -> Vec<QPoly> {
    let sd = side(ring, bundle);
    let e: Vec<QPoly> = (1..=d)
        .map(|j| sd.elementary.get(j).cloned().unwrap_or_else(QPoly::zero))
        .collect();
    newton_convert(NewtonDirection::ElementaryToPower, &e, &QPoly::one())
}

/// `ch(gamma^C) = k + 2 sum_m ps_m / (2m)!`.
pub fn ch_gamma(ring: &PontryaginRing, cap: u32) -> Result<CohClass, ChernError> {
    check_cap(ring, cap)?;
    let d = (cap.min(ring.top_degree()) / 4) as usize;
    let ps = power_sums(ring, Bundle::Gamma, d);
    let mut f = QPoly::constant(q(ring.k as i64));
    for (i, p) in ps.iter().enumerate() {
        let m = i as u64 + 1;
        f = f + p.scale(&(q(2) / qb(factorial(2 * m))));
    }
    ring.class(&f, cap)
}

fn root_degree(m: &Monomial) -> u32 {
    m.pairs().iter().map(|(_, e)| *e as u32).sum()
}

/// Rewrites a symmetric even series in the Chern roots in Pontryagin classes.
fn roots_to_classes(sd: &Side, f: &QPoly) -> Result<QPoly, ChernError> {
    let halved = QPoly::from_terms(f.terms().map(|(m, c)| {
        let pairs: Vec<(Var, i32)> = m.pairs().iter().map(|&(v, e)| (v, e / 2)).collect();
        debug_assert!(m.pairs().iter().all(|(_, e)| e % 2 == 0));
        (Monomial::from_pairs(pairs), c.clone())
    }));
    let evars: Vec<Var> = (1..=sd.pairs).map(|j| Var::indexed("_elem", j)).collect();
    let in_e = symmetric_reduce(&halved, &sd.roots, &evars)?;
    let images = evars
        .iter()
        .enumerate()
        .map(|(j, &v)| (v, sd.elementary[j + 1].clone()))
        .collect();
    Ok(in_e.apply_hom(&images)?)
}

/// `ch(Lambda^j)` for `j = 0..=rank` from
/// `prod_i (1 + t e^{x_i})(1 + t e^{-x_i}) (1 + t)^{rank - 2 pairs}`.
pub fn ch_lambda_all(ring: &PontryaginRing, bundle: Bundle, cap: u32) -> Result<Vec<CohClass>, ChernError> {
    check_cap(ring, cap)?;
    let sd = side(ring, bundle);
    // a Chern root has degree 2
    let top = cap.min(ring.top_degree()) / 2;
    let trunc = |f: QPoly| f.filter_terms(|m| root_degree(m) <= top);
    let mut series: Vec<QPoly> = vec![QPoly::one()];
    for &x in &sd.roots {
        // 1 + t (e^x + e^-x) + t^2
        let cosh2: QPoly = (0..=top / 2)
            .map(|i| QPoly::var(x).pow(2 * i).scale(&(q(2) / qb(factorial(2 * i as u64)))))
            .sum();
        let factor = [QPoly::one(), cosh2, QPoly::one()];
        let mut next = vec![QPoly::zero(); series.len() + 2];
        for (i, a) in series.iter().enumerate() {
            for (j, b) in factor.iter().enumerate() {
                next[i + j] = &next[i + j] + trunc(a * b);
            }
        }
        series = next;
    }
    let extra = sd.rank - 2 * sd.pairs;
    let mut out = Vec::with_capacity(sd.rank + 1);
    for j in 0..=sd.rank {
        let f: QPoly = (0..=j.min(extra))
            .filter(|&i| j - i < series.len())
            .map(|i| series[j - i].scale(&qb(binomial(extra as u64, i as u64))))
            .sum();
        out.push(ring.class(&roots_to_classes(&sd, &f)?, cap)?);
    }
    Ok(out)
}

pub fn ch_lambda_powers(ring: &PontryaginRing, bundle: Bundle, j: usize, cap: u32) -> Result<CohClass, ChernError> {
    let all = ch_lambda_all(ring, bundle, cap)?;
    all.into_iter()
        .nth(j)
        .ok_or_else(|| ChernError::Params(format!("exterior power {j} above the rank")))
}

/// `psi^r` scales the degree-`2i` component by `r^i`.
pub fn adams_psi(ring: &PontryaginRing, r: i64, c: &CohClass) -> CohClass {
    let value = QPoly::from_terms(c.value.terms().map(|(m, x)| {
        let i = ring.degree(m) / 2;
        (m.clone(), x * qb(BigInt::from(r).pow(i)))
    }));
    CohClass { value, cap: c.cap }
}

/// `ch psi^r(gamma^C)` through the exterior powers: Newton's power sum in
/// `Lambda^1, .., Lambda^r`.
pub fn ch_adams_via_lambda(ring: &PontryaginRing, lambdas: &[CohClass], r: usize, cap: u32) -> Result<CohClass, ChernError> {
    let e: Vec<QPoly> = (1..=r)
        .map(|j| lambdas.get(j).map(|c| c.value.clone()).unwrap_or_else(QPoly::zero))
        .collect();
    let mut reduced: Vec<QPoly> = Vec::with_capacity(r);
    // Newton step by step, reducing as we go to keep the classes small
    let sign = |i: usize| if i % 2 == 1 { q(1) } else { q(-1) };
    for k in 1..=r {
        let mut acc = e[k - 1].scale(&(sign(k) * q(k as i64)));
        for i in 1..k {
            acc = acc + (&e[i - 1] * &reduced[k - i - 1]).scale(&sign(i));
        }
        reduced.push(ring.class(&acc, cap)?.value);
    }
    ring.class(&reduced[r - 1], cap)
}

/// `m_ij = j^(2i)`, `1 <= i, j <= d`.
pub fn vandermonde_matrix(d: usize) -> IntMatrix {
    let rows = (1..=d)
        .map(|i| (1..=d).map(|j| BigInt::from(j).pow(2 * i as u32)).collect())
        .collect();
    IntMatrix::from_rows(d, rows).expect("square")
}

/// Solves `2 u M = v` for `u`; returns `u` and `det M`.
pub fn vandermonde_solve(d: usize, v: &[CohClass]) -> Result<(Vec<CohClass>, BigInt), ChernError> {
    if v.len() != d {
        return Err(ChernError::Params(format!("expected {d} classes, got {}", v.len())));
    }
    if d == 0 {
        return Ok((Vec::new(), BigInt::one()));
    }
    let m = vandermonde_matrix(d);
    let det = m.determinant()?;
    if det.is_zero() {
        return Err(ChernError::Singular(d));
    }
    let mq: Vec<Vec<BigRational>> = m.to_rows().into_iter().map(|r| r.into_iter().map(qb).collect()).collect();
    let inv = invert_rational(&mq).ok_or(ChernError::Singular(d))?;
    let half = q(1) / q(2);
    let cap = v[0].cap;
    let u = (0..d)
        .map(|col| {
            let value: QPoly = (0..d).map(|r| v[r].value.scale(&(&inv[r][col] * &half))).sum();
            CohClass { value, cap }
        })
        .collect();
    Ok((u, det))
}

fn serialize_det<S: serde::Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    big_to_json(x).serialize(s)
}

#[derive(Clone, Debug, Serialize)]
pub struct ChReport {
    pub n: usize,
    pub k: usize,
    pub q_dimension: usize,
    pub image_dimension: usize,
    pub surjective: bool,
    pub vandermonde_d: usize,
    #[serde(serialize_with = "serialize_det")]
    pub vandermonde_det: BigInt,
    /// `psi^r` from exterior powers agrees with `r^(2m)` scaling of `ch(gamma^C)`.
    pub adams_consistent: bool,
    /// Solving `2uM = v` returns `ps_m / (2m)!`.
    pub power_sums_recovered: bool,
    pub eq20: bool,
    pub duality: bool,
    pub pass: bool,
}

/// Largest `k(n-k)` handled by the surjectivity check.
pub const MAX_MANIFOLD_DIMENSION: usize = 36;

struct RationalSpan {
    rows: Vec<(usize, Vec<BigRational>)>,
}

impl RationalSpan {
    /// Adds `v` unless it is already in the span.
    fn insert(&mut self, mut v: Vec<BigRational>) -> bool {
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= &f * y;
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    *x -= &f * y;
                }
            }
        }
        self.rows.push((p, v));
        true
    }
}

/// Dimension of the subalgebra generated by the given classes.
pub fn generated_subalgebra_dimension(ring: &PontryaginRing, gens: &[CohClass]) -> Result<usize, ChernError> {
    let mut span = RationalSpan { rows: Vec::new() };
    let one = QPoly::one();
    span.insert(ring.coordinates(&one)?);
    let mut queue = vec![one];
    while let Some(b) = queue.pop() {
        for g in gens {
            let prod = ring.normal_form(&(&b * &g.value))?;
            if span.insert(ring.coordinates(&prod)?) {
                queue.push(prod);
            }
        }
    }
    Ok(span.rows.len())
}

pub fn verify_ch_surjectivity(n: usize, k: usize) -> Result<ChReport, ChernError> {
    let ring = super::build_p(n, k)?;
    if k * (n - k) > MAX_MANIFOLD_DIMENSION {
        return Err(ChernError::CapExceeded(format!(
            "k(n-k) = {} above {MAX_MANIFOLD_DIMENSION}",
            k * (n - k)
        )));
    }
    let cap = ring.default_cap();
    let lam = ch_lambda_all(&ring, Bundle::Gamma, cap)?;
    let lam_beta = ch_lambda_all(&ring, Bundle::Beta, cap)?;
    let image_dimension = generated_subalgebra_dimension(&ring, &lam[1..])?;

    let ch = ch_gamma(&ring, cap)?;
    let kk = QPoly::constant(q(k as i64));
    let d = k * (n - k) / 2;
    let mut adams_consistent = lam[1] == ch;
    let mut v = Vec::with_capacity(d);
    for r in 1..=d {
        let via_lambda = ch_adams_via_lambda(&ring, &lam, r, cap)?;
        adams_consistent &= via_lambda == adams_psi(&ring, r as i64, &ch);
        v.push(CohClass {
            value: via_lambda.value - &kk,
            cap,
        });
    }
    let (u, det) = vandermonde_solve(d, &v)?;
    let ps = power_sums(&ring, Bundle::Gamma, d);
    let mut power_sums_recovered = true;
    for (m, (um, psm)) in u.iter().zip(&ps).enumerate() {
        let want = ring.class(&psm.scale(&(q(1) / qb(factorial(2 * m as u64 + 2)))), cap)?;
        power_sums_recovered &= ring.class(&um.value, cap)? == want;
    }

    let mut eq20 = true;
    for r in 0..=n {
        let f: QPoly = (0..=r)
            .filter(|&p| p <= k && r - p <= n - k)
            .map(|p| &lam[p].value * &lam_beta[r - p].value)
            .sum();
        let target = QPoly::constant(qb(binomial(n as u64, r as u64)));
        eq20 &= ring.class(&(f - target), cap)?.is_zero();
    }
    let xi = &lam[k].value;
    let mut duality = lam_beta[n - k].value == *xi;
    for p in 1..=k {
        duality &= ring.class(&(xi * &lam[k - p].value), cap)? == lam[p];
    }
    for q_ in 1..=n - k {
        duality &= ring.class(&(xi * &lam_beta[n - k - q_].value), cap)? == lam_beta[q_];
    }

    let surjective = image_dimension == ring.q_dimension();
    Ok(ChReport {
        n,
        k,
        q_dimension: ring.q_dimension(),
        image_dimension,
        surjective,
        vandermonde_d: d,
        vandermonde_det: det.abs(),
        adams_consistent,
        power_sums_recovered,
        eq20,
        duality,
        pass: surjective && adams_consistent && power_sums_recovered && eq20 && duality,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern::build_p;

    fn qp(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    #[test]
    fn ch_gamma_low_degrees() {
        let ring = build_p(8, 3).unwrap();
        let ch = ch_gamma(&ring, 8).unwrap();
        assert_eq!(ch.constant(), q(3));
        assert_eq!(ch.component(&ring, 4), ring.class(&qp("-p1"), 8).unwrap().value);
        let want = ring.class(&qp("3 - p1 + 1/12*p1^2"), 8).unwrap();
        assert_eq!(ch, want);
    }

    #[test]
    fn lambda_powers_basics() {
        let ring = build_p(8, 3).unwrap();
        let cap = ring.default_cap();
        let lam = ch_lambda_all(&ring, Bundle::Gamma, cap).unwrap();
        assert_eq!(lam[0].value, QPoly::one());
        assert_eq!(lam[3].constant(), q(1));
        assert_eq!(lam[1], ch_gamma(&ring, cap).unwrap());
        let beta = ch_lambda_all(&ring, Bundle::Beta, cap).unwrap();
        assert_eq!(lam[1].constant() + beta[1].constant(), q(8));
    }

    #[test]
    fn adams_factors() {
        let ring = build_p(8, 3).unwrap();
        let c = CohClass {
            value: qp("p1 + p1^2 + 1"),
            cap: 16,
        };
        assert_eq!(adams_psi(&ring, 1, &c), c);
        assert_eq!(adams_psi(&ring, 2, &c).value, qp("4*p1 + 16*p1^2 + 1"));
        assert_eq!(adams_psi(&ring, 3, &c).component(&ring, 8), qp("81*p1^2"));
        let twice = adams_psi(&ring, 2, &adams_psi(&ring, 3, &c));
        assert_eq!(twice, adams_psi(&ring, 6, &c));
    }

    #[test]
    fn vandermonde() {
        assert_eq!(vandermonde_matrix(2).to_rows(), vec![vec![BigInt::from(1), BigInt::from(4)], vec![BigInt::from(1), BigInt::from(16)]]);
        let one = |s: &str| CohClass { value: qp(s), cap: 8 };
        let (u, det) = vandermonde_solve(1, &[one("2*p1")]).unwrap();
        assert_eq!(det, BigInt::one());
        assert_eq!(u[0].value, qp("p1"));
        let (_, det) = vandermonde_solve(2, &[one("1"), one("1")]).unwrap();
        assert_eq!(det, BigInt::from(12));
        for d in 1..=12 {
            assert!(!vandermonde_matrix(d).determinant().unwrap().is_zero());
        }
    }

    #[test]
    fn surjectivity_examples() {
        for (n, k, dim) in [(5, 2, 2), (8, 3, 3), (9, 4, 6)] {
            let r = verify_ch_surjectivity(n, k).unwrap();
            assert_eq!(r.image_dimension, dim);
            assert!(r.pass, "{r:?}");
        }
    }
}
