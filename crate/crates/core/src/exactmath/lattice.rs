//! Row-echelon (Hermite) forms over the integers and exact linear solves
//! over the integers and the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{ExactError, IntMatrix};

/// Hermite row-echelon form `h = t * m` with `t` unimodular.
///
/// The first `rank` rows of `h` are nonzero, with strictly increasing pivot
/// columns, positive pivots, and entries above each pivot reduced into
/// `[0, pivot)`.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub h: IntMatrix,
    pub t: Option<IntMatrix>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The nonzero rows: a basis of the row lattice.
    pub fn basis(&self) -> Vec<Vec<BigInt>> {
        (0..self.rank()).map(|i| self.h.row(i).to_vec()).collect()
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the row lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut rem = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for (i, &p) in self.pivots.iter().enumerate() {
            let (q, r) = rem[p].div_rem(&self.h[(i, p)]);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (x, h) in rem.iter_mut().zip(self.h.row(i)) {
                    *x -= &q * h;
                }
            }
            coords.push(q);
        }
        rem.iter().all(Zero::is_zero).then_some(coords)
    }
}

pub fn hermite_rows(m: &IntMatrix, track: bool) -> Echelon {
    let mut h = m.clone();
    let mut t = track.then(|| IntMatrix::identity(m.rows()));
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..h.cols() {
        if row == h.rows() {
            break;
        }
        // Euclid on the column, always pivoting on the smallest entry, keeps
        // intermediate growth modest when small pivots are available.
        loop {
            let Some(best) = (row..h.rows())
                .filter(|&i| !h[(i, col)].is_zero())
                .min_by(|&a, &b| h[(a, col)].abs().cmp(&h[(b, col)].abs()))
            else {
                break;
            };
            h.swap_rows(row, best);
            if let Some(t) = t.as_mut() {
                t.swap_rows(row, best);
            }
            let mut done = true;
            for i in row + 1..h.rows() {
                if h[(i, col)].is_zero() {
                    continue;
                }
                let q = h[(i, col)].div_floor(&h[(row, col)]);
                let nq = -q;
                h.add_row_multiple(i, row, &nq);
                if let Some(t) = t.as_mut() {
                    t.add_row_multiple(i, row, &nq);
                }
                if !h[(i, col)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(row, col)].is_zero() {
            continue;
        }
        if h[(row, col)].is_negative() {
            h.negate_row(row);
            if let Some(t) = t.as_mut() {
                t.negate_row(row);
            }
        }
        let pivot = h[(row, col)].clone();
        for i in 0..row {
            let q = h[(i, col)].div_floor(&pivot);
            if !q.is_zero() {
                let nq = -q;
                h.add_row_multiple(i, row, &nq);
                if let Some(t) = t.as_mut() {
                    t.add_row_multiple(i, row, &nq);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    Echelon { h, t, pivots }
}

/// Solves `a * c = b` for an integer vector `c`, or returns `None` when no
/// integer solution exists.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>, ExactError> {
    if b.len() != a.rows() {
        return Err(ExactError::DimensionMismatch {
            expected: a.rows(),
            found: b.len(),
            context: "right-hand side".into(),
        });
    }
    // Row echelon of a^T: t * a^T = h, so a = h^T * t^{-T}; with c = t^T y the
    // system becomes h^T y = b, i.e. y expresses b in the row basis of h.
    let e = hermite_rows(&a.transpose(), true);
    let Some(y) = e.coordinates(b) else {
        return Ok(None);
    };
    let t = e.t.expect("tracked transform");
    let mut c = vec![BigInt::zero(); a.cols()];
    for (i, yi) in y.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        for (j, cj) in c.iter_mut().enumerate() {
            *cj += yi * &t[(i, j)];
        }
    }
    Ok(Some(c))
}

/// Rank over the rationals.
pub fn rank(m: &IntMatrix) -> usize {
    hermite_rows(m, false).rank()
}

/// Solves `a * c = b` over the rationals; `None` when inconsistent.
pub fn solve_rational(
    a: &[Vec<BigRational>],
    b: &[BigRational],
    unknowns: usize,
) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let mut aug: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..unknowns {
        let Some(p) = (r..rows).find(|&i| !aug[i][col].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let inv = aug[r][col].recip();
        for x in aug[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !aug[i][col].is_zero() {
                let f = aug[i][col].clone();
                for j in col..=unknowns {
                    let v = &f * &aug[r][j];
                    aug[i][j] -= v;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if aug[r..].iter().any(|row| !row[unknowns].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); unknowns];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][unknowns].clone();
    }
    Some(x)
}

/// Inverse of a square rational matrix, or `None` if singular.
pub fn invert_rational(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, p);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != col && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in col..2 * n {
                    let v = &f * &a[col][j];
                    a[i][j] -= v;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn hermite_is_unimodular_transform() {
        let m = IntMatrix::from_i64(&[&[2, 4, 6], &[3, 5, 7], &[1, 1, 1]]);
        let e = hermite_rows(&m, true);
        assert_eq!(e.rank(), 2);
        let t = e.t.clone().unwrap();
        assert_eq!(t.mul(&m).unwrap(), e.h);
        assert_eq!(t.determinant().unwrap().abs(), BigInt::one());
    }

    #[test]
    fn integer_solve_finds_and_rejects() {
        let a = IntMatrix::from_i64(&[&[2, 0], &[0, 3], &[1, 1]]);
        let c = solve_integer(&a, &big(&[4, 9, 5])).unwrap().unwrap();
        assert_eq!(c, big(&[2, 3]));
        assert!(solve_integer(&a, &big(&[1, 0, 0])).unwrap().is_none());
        // rationally consistent but not integral
        let a = IntMatrix::from_i64(&[&[2]]);
        assert!(solve_integer(&a, &big(&[1])).unwrap().is_none());
    }

    #[test]
    fn rational_inverse_roundtrip() {
        let q = |x: i64| BigRational::from_integer(BigInt::from(x));
        let m = vec![vec![q(1), q(4)], vec![q(1), q(16)]];
        let inv = invert_rational(&m).unwrap();
        assert_eq!(
            inv[0][0],
            BigRational::new(BigInt::from(16), BigInt::from(12))
        );
        assert!(invert_rational(&[vec![q(1), q(2)], vec![q(2), q(4)]]).is_none());
    }
}
