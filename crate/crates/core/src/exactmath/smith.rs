use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::ext_gcd;
use super::{ExactError, IntMatrix};

/// `u * a * v = s` with `u`, `v` unimodular and `s` diagonal in divisibility order.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    /// Nonzero diagonal entries of `s`, positive, each dividing the next.
    pub invariant_factors: Vec<BigInt>,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> Result<SmithDecomposition, ExactError> {
    if a.rows() == 0 || a.cols() == 0 {
        return Err(ExactError::EmptyMatrix);
    }
    let (nr, nc) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = IntMatrix::identity(nr);
    let mut v = IntMatrix::identity(nc);

    let mut t = 0;
    while t < nr.min(nc) {
        let Some((pi, pj)) = min_abs_entry(&s, t) else {
            break;
        };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            for i in t + 1..nr {
                if s[(t, t)].is_zero() || s[(i, t)].is_zero() {
                    continue;
                }
                if s[(i, t)].is_multiple_of(&s[(t, t)]) {
                    let f = -(&s[(i, t)] / &s[(t, t)]);
                    s.add_row_multiple(i, t, &f);
                    u.add_row_multiple(i, t, &f);
                    continue;
                }
                let (g, x, y) = ext_gcd(&s[(t, t)], &s[(i, t)]);
                let p = &s[(t, t)] / &g;
                let q = &s[(i, t)] / &g;
                let nq = -q;
                s.combine_rows(t, i, [&x, &y, &nq, &p]);
                u.combine_rows(t, i, [&x, &y, &nq, &p]);
            }
            for j in t + 1..nc {
                if s[(t, j)].is_zero() {
                    continue;
                }
                if s[(t, j)].is_multiple_of(&s[(t, t)]) {
                    let f = -(&s[(t, j)] / &s[(t, t)]);
                    s.add_col_multiple(j, t, &f);
                    v.add_col_multiple(j, t, &f);
                    continue;
                }
                let (g, x, y) = ext_gcd(&s[(t, t)], &s[(t, j)]);
                let p = &s[(t, t)] / &g;
                let q = &s[(t, j)] / &g;
                let nq = -q;
                s.combine_cols(t, j, [&x, &y, &nq, &p]);
                v.combine_cols(t, j, [&x, &y, &nq, &p]);
            }
            let column_clear = (t + 1..nr).all(|i| s[(i, t)].is_zero());
            if !column_clear {
                continue;
            }
            // pivot must divide the rest of the trailing block
            let pivot = s[(t, t)].clone();
            let offender =
                (t + 1..nr).find(|&i| (t + 1..nc).any(|j| !s[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    s.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    let invariant_factors = (0..nr.min(nc))
        .map(|i| s[(i, i)].clone())
        .take_while(|d| !d.is_zero())
        .collect();
    Ok(SmithDecomposition {
        u,
        s,
        v,
        invariant_factors,
    })
}

fn min_abs_entry(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..s.rows() {
        for j in t..s.cols() {
            let x = &s[(i, j)];
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                let done = ax.is_one();
                best = Some((i, j, ax));
                if done {
                    return best.map(|(i, j, _)| (i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(rows: &[&[i64]]) -> Vec<i64> {
        let d = smith_normal_form(&IntMatrix::from_i64(rows)).unwrap();
        d.invariant_factors
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect()
    }

    #[test]
    fn diagonal_two_three() {
        assert_eq!(factors(&[&[2, 0], &[0, 3]]), vec![1, 6]);
    }

    #[test]
    fn identity_three() {
        assert_eq!(
            factors(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
            vec![1, 1, 1]
        );
    }

    #[test]
    fn two_by_two_hand_reduction() {
        assert_eq!(factors(&[&[2, 4], &[6, 8]]), vec![2, 4]);
    }

    #[test]
    fn transforms_reconstruct() {
        let a = IntMatrix::from_i64(&[&[4, 6, 2], &[0, 3, 9], &[8, 1, -5]]);
        let d = smith_normal_form(&a).unwrap();
        let prod = d.u.mul(&a).unwrap().mul(&d.v).unwrap();
        assert_eq!(prod, d.s);
        assert!(d.s.is_diagonal());
        assert_eq!(d.u.determinant().unwrap().abs(), BigInt::one());
        assert_eq!(d.v.determinant().unwrap().abs(), BigInt::one());
    }

    #[test]
    fn zero_and_rank_deficient() {
        assert!(factors(&[&[0, 0, 0]]).is_empty());
        assert_eq!(factors(&[&[1, 2], &[2, 4]]), vec![1]);
    }

    #[test]
    fn empty_is_rejected() {
        assert!(smith_normal_form(&IntMatrix::zeros(0, 3)).is_err());
    }
}
