//! Elementary, complete and power-sum symmetric polynomials, Schur
//! polynomials, Newton's identities and reduction to elementary symmetric form.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Coeff, Monomial, PolyError, Polynomial, Var};

/// `e_j(xs)`; `e_0 = 1`.
pub fn elementary_symmetric<C: Coeff>(
    xs: &[Polynomial<C>],
    j: usize,
) -> Result<Polynomial<C>, PolyError> {
    if j > xs.len() {
        return Err(PolyError::IndexOutOfRange {
            index: j,
            bound: xs.len(),
        });
    }
    Ok(elementary_all(xs).swap_remove(j))
}

/// `[e_0, e_1, ..., e_n]` of the given values, by expanding `prod (1 + x t)`.
pub fn elementary_all<C: Coeff>(xs: &[Polynomial<C>]) -> Vec<Polynomial<C>> {
    let mut e = vec![Polynomial::one()];
    for x in xs {
        let mut next = e.clone();
        next.push(Polynomial::zero());
        for j in 0..e.len() {
            next[j + 1] = &next[j + 1] + &(&e[j] * x);
        }
        e = next;
    }
    e
}

/// Complete homogeneous symmetric polynomial `h_j(xs)`.
pub fn complete_homogeneous<C: Coeff>(xs: &[Polynomial<C>], j: usize) -> Polynomial<C> {
    // h_j(x_1..x_n) = sum_i x_n^i h_{j-i}(x_1..x_{n-1})
    let mut h = vec![Polynomial::zero(); j + 1];
    h[0] = Polynomial::one();
    for x in xs {
        for d in 1..=j {
            let add = x * &h[d - 1];
            h[d] = &h[d] + &add;
        }
    }
    h.swap_remove(j)
}

pub fn power_sum<C: Coeff>(xs: &[Polynomial<C>], k: u32) -> Polynomial<C> {
    xs.iter().map(|x| x.pow(k)).sum()
}

/// An integer partition, parts weakly decreasing and positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// At most `rows` parts, each at most `cols`.
    pub fn fits_in_box(&self, rows: usize, cols: usize) -> bool {
        self.0.len() <= rows && self.0.iter().all(|&p| p <= cols)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition(
            (1..=width)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count())
                .collect(),
        )
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn of(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions fitting in a `rows` x `cols` box, by size then reverse lex.
    pub fn in_box(rows: usize, cols: usize) -> Vec<Partition> {
        (0..=rows * cols)
            .flat_map(Partition::of)
            .filter(|p| p.fits_in_box(rows, cols))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Determinant of a small square matrix over any polynomial ring, by cofactor expansion.
pub fn determinant<C: Coeff>(m: &[Vec<Polynomial<C>>]) -> Polynomial<C> {
    fn rec<C: Coeff>(m: &[Vec<Polynomial<C>>], cols: &[usize], row: usize) -> Polynomial<C> {
        if cols.is_empty() {
            return Polynomial::one();
        }
        let mut total = Polynomial::zero();
        for (i, &c) in cols.iter().enumerate() {
            if m[row][c].is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = &m[row][c] * &rec(m, &rest, row + 1);
            total = if i % 2 == 0 {
                total + minor
            } else {
                total - minor
            };
        }
        total
    }
    let cols: Vec<usize> = (0..m.len()).collect();
    rec(m, &cols, 0)
}

/// Schur polynomial as the bialternant `a_{lambda+delta} / a_delta`.
pub fn schur_bialternant(lambda: &Partition, vars: &[Var]) -> Polynomial<BigInt> {
    let n = vars.len();
    if lambda.len() > n {
        return Polynomial::zero();
    }
    let xs: Vec<Polynomial<BigInt>> = vars.iter().map(|&v| Polynomial::var(v)).collect();
    let alt = |shift: &dyn Fn(usize) -> usize| -> Polynomial<BigInt> {
        let m: Vec<Vec<Polynomial<BigInt>>> = (0..n)
            .map(|i| (0..n).map(|j| xs[j].pow(shift(i) as u32)).collect())
            .collect();
        determinant(&m)
    };
    let num = alt(&|i| lambda.part(i) + n - 1 - i);
    let den = alt(&|i| n - 1 - i);
    num.div_exact(&den)
        .expect("Vandermonde divides every alternant")
}

/// Schur polynomial by Jacobi–Trudi: `det(h_{lambda_i - i + j})`.
pub fn schur_jacobi_trudi(lambda: &Partition, vars: &[Var]) -> Polynomial<BigInt> {
    if lambda.len() > vars.len() {
        return Polynomial::zero();
    }
    let xs: Vec<Polynomial<BigInt>> = vars.iter().map(|&v| Polynomial::var(v)).collect();
    let l = lambda.len();
    let m: Vec<Vec<Polynomial<BigInt>>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let idx = lambda.part(i) as i64 - i as i64 + j as i64;
                    if idx < 0 {
                        Polynomial::zero()
                    } else {
                        complete_homogeneous(&xs, idx as usize)
                    }
                })
                .collect()
        })
        .collect();
    determinant(&m)
}

/// Dual Jacobi–Trudi: `det(e_{lambda'_i - i + j})` with `e` supplied by the caller
/// (so it applies to any family of elementary classes, e.g. exterior powers).
pub fn schur_from_elementary<C: Coeff>(
    lambda: &Partition,
    e: &dyn Fn(usize) -> Polynomial<C>,
) -> Polynomial<C> {
    let conj = lambda.conjugate();
    let l = conj.len();
    let m: Vec<Vec<Polynomial<C>>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let idx = conj.part(i) as i64 - i as i64 + j as i64;
                    if idx < 0 {
                        Polynomial::zero()
                    } else {
                        e(idx as usize)
                    }
                })
                .collect()
        })
        .collect();
    determinant(&m)
}

pub fn schur_polynomial(lambda: &Partition, vars: &[Var]) -> Polynomial<BigInt> {
    schur_jacobi_trudi(lambda, vars)
}

/// Sum of `x^T` over semistandard tableaux `T` of shape `lambda` with entries in `vars`.
pub fn schur_by_tableaux(lambda: &Partition, vars: &[Var]) -> Polynomial<BigInt> {
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut filling: HashMap<(usize, usize), usize> = HashMap::new();
    let mut out = Polynomial::zero();
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        filling: &mut HashMap<(usize, usize), usize>,
        vars: &[Var],
        out: &mut Polynomial<BigInt>,
    ) {
        if idx == cells.len() {
            let m = Monomial::from_pairs(filling.values().map(|&i| (vars[i], 1)));
            out.add_term(m, &BigInt::one());
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { filling[&(r, c - 1)] } else { 0 };
        let lo_col = if r > 0 { filling[&(r - 1, c)] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..vars.len() {
            filling.insert((r, c), v);
            rec(idx + 1, cells, filling, vars, out);
        }
        filling.remove(&(r, c));
    }
    rec(0, &cells, &mut filling, vars, &mut out);
    out
}

/// Number of semistandard tableaux of shape `lambda` with entries in `1..=n`.
pub fn count_tableaux(lambda: &Partition, n: usize) -> BigInt {
    let vars: Vec<Var> = (0..n).map(|i| Var::indexed("_tab", i)).collect();
    schur_by_tableaux(lambda, &vars)
        .terms()
        .map(|(_, c)| c.clone())
        .sum()
}

/// Direction of a Newton conversion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NewtonDirection {
    ElementaryToPower,
    PowerToElementary,
}

/// Rings with the operations Newton's identities need.
pub trait NewtonRing: Clone {
    fn zero() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &BigRational) -> Self;
}

impl NewtonRing for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &BigRational) -> Self {
        self * c
    }
}

impl NewtonRing for Polynomial<BigRational> {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &BigRational) -> Self {
        Polynomial::scale(self, c)
    }
}

/// Converts `[e_1..e_d]` to `[p_1..p_d]` or back, via Newton's identities
/// `k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i`.
pub fn newton_convert<T: NewtonRing>(direction: NewtonDirection, input: &[T], one: &T) -> Vec<T> {
    let d = input.len();
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));
    let sign = |i: usize| if i % 2 == 1 { q(1) } else { q(-1) };
    match direction {
        NewtonDirection::ElementaryToPower => {
            // p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
            let e = input;
            let mut p: Vec<T> = Vec::with_capacity(d);
            for k in 1..=d {
                let mut acc = e[k - 1].scale(&(sign(k) * q(k as i64)));
                for i in 1..k {
                    acc = acc.add(&e[i - 1].mul(&p[k - i - 1]).scale(&sign(i)));
                }
                p.push(acc);
            }
            p
        }
        NewtonDirection::PowerToElementary => {
            let p = input;
            let mut e: Vec<T> = vec![one.clone()];
            for k in 1..=d {
                let mut acc = T::zero();
                for i in 1..=k {
                    acc = acc.add(&e[k - i].mul(&p[i - 1]).scale(&sign(i)));
                }
                e.push(acc.scale(&BigRational::new(BigInt::one(), BigInt::from(k))));
            }
            e.remove(0);
            e
        }
    }
}

/// Rewrites a symmetric polynomial in `vars` as a polynomial in `evars`,
/// where `evars[j-1]` stands for `e_j(vars)`. Fails if the input is not symmetric.
pub fn symmetric_reduce<C: Coeff>(
    f: &Polynomial<C>,
    vars: &[Var],
    evars: &[Var],
) -> Result<Polynomial<C>, PolyError> {
    let n = vars.len();
    let xs: Vec<Polynomial<C>> = vars.iter().map(|&v| Polynomial::var(v)).collect();
    let e = elementary_all(&xs);
    let mut rem = f.clone();
    let mut out = Polynomial::zero();
    while !rem.is_zero() {
        // lex-leading monomial in the order vars[0] > vars[1] > ...
        let (m, c) = rem
            .terms()
            .max_by(|a, b| {
                let ea: Vec<i32> = vars.iter().map(|&v| a.0.exponent(v)).collect();
                let eb: Vec<i32> = vars.iter().map(|&v| b.0.exponent(v)).collect();
                ea.cmp(&eb)
            })
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        let a: Vec<i32> = vars.iter().map(|&v| m.exponent(v)).collect();
        if m.vars().any(|v| !vars.contains(&v))
            || a.windows(2).any(|w| w[0] < w[1])
            || a.iter().any(|&x| x < 0)
        {
            return Err(PolyError::NotSymmetric(rem.to_string()));
        }
        let mut emono = Vec::new();
        let mut prod = Polynomial::constant(c.clone());
        for j in 0..n {
            let k = a[j] - a.get(j + 1).copied().unwrap_or(0);
            if k > 0 {
                emono.push((evars[j], k));
                prod = prod * e[j + 1].pow(k as u32);
            }
        }
        out.add_term(Monomial::from_pairs(emono), &c);
        rem = rem - prod;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ZPoly;

    fn vars(names: &[&str]) -> Vec<Var> {
        names.iter().map(|n| Var::new(n)).collect()
    }

    fn zp(s: &str) -> ZPoly {
        s.parse().unwrap()
    }

    #[test]
    fn elementary_examples() {
        let xs: Vec<ZPoly> = ["a", "b", "c"].iter().map(|n| ZPoly::named(n)).collect();
        assert_eq!(elementary_symmetric(&xs[..2], 0).unwrap(), ZPoly::one());
        assert_eq!(elementary_symmetric(&xs, 2).unwrap(), zp("a*b + a*c + b*c"));
        assert_eq!(elementary_symmetric(&xs, 3).unwrap(), zp("a*b*c"));
        assert!(elementary_symmetric(&xs, 4).is_err());
    }

    #[test]
    fn schur_examples() {
        let v = vars(&["x1", "x2"]);
        assert_eq!(
            schur_polynomial(&Partition::new(vec![1]), &v),
            zp("x1 + x2")
        );
        assert_eq!(
            schur_polynomial(&Partition::new(vec![2, 1]), &v),
            zp("x1^2*x2 + x1*x2^2")
        );
        assert!(schur_polynomial(&Partition::new(vec![1, 1, 1]), &v).is_zero());
        assert!(schur_bialternant(&Partition::new(vec![1, 1, 1]), &v).is_zero());
    }

    #[test]
    fn three_formulas_agree_small() {
        for nv in 1..=3 {
            let v: Vec<Var> = (1..=nv).map(|i| Var::indexed("sx", i)).collect();
            for size in 0..=6 {
                for lam in Partition::of(size) {
                    let jt = schur_jacobi_trudi(&lam, &v);
                    assert_eq!(jt, schur_bialternant(&lam, &v), "{lam} in {nv} vars");
                    assert_eq!(jt, schur_by_tableaux(&lam, &v), "{lam} in {nv} vars");
                    let xs: Vec<ZPoly> = v.iter().map(|&x| ZPoly::var(x)).collect();
                    let e = elementary_all(&xs);
                    let dual =
                        schur_from_elementary(&lam, &|j| e.get(j).cloned().unwrap_or_default());
                    assert_eq!(jt, dual, "{lam} dual in {nv} vars");
                }
            }
        }
    }

    #[test]
    fn conjugate_and_box() {
        assert_eq!(
            Partition::new(vec![3, 1]).conjugate(),
            Partition::new(vec![2, 1, 1])
        );
        assert_eq!(Partition::in_box(2, 2).len(), 6);
        assert_eq!(Partition::of(5).len(), 7);
    }

    #[test]
    fn newton_examples() {
        let q = |x: i64| BigRational::from_integer(BigInt::from(x));
        let p = newton_convert(NewtonDirection::ElementaryToPower, &[q(0), q(1)], &q(1));
        assert_eq!(p, vec![q(0), q(-2)]);
        let p = newton_convert(NewtonDirection::ElementaryToPower, &[q(7)], &q(1));
        assert_eq!(p, vec![q(7)]);
        let back = newton_convert(NewtonDirection::PowerToElementary, &[q(0), q(-2)], &q(1));
        assert_eq!(back, vec![q(0), q(1)]);
    }

    #[test]
    fn symmetric_reduction_power_sum() {
        let v = vars(&["ra", "rb", "rc"]);
        let ev = vars(&["re1", "re2", "re3"]);
        let xs: Vec<ZPoly> = v.iter().map(|&x| ZPoly::var(x)).collect();
        let p2 = power_sum(&xs, 2);
        assert_eq!(symmetric_reduce(&p2, &v, &ev).unwrap(), zp("re1^2 - 2*re2"));
        assert!(symmetric_reduce(&zp("ra - rb"), &v, &ev).is_err());
    }
}
