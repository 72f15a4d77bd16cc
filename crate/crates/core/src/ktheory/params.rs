use serde::Serialize;

use super::KError;

/// Numerical data attached to the real Grassmannian `G(n,k)`.
///
/// `s = floor(k/2)`, `t = floor((n-k)/2)`, `m = floor(n/2)` and `n = 4l + j`.
/// When `n` is divisible by 4 and `k` is odd, `m = s + t + 1` and `epsilon`
/// is the exponent of `theta` in the restriction of the positive half-spin
/// representation (0 for `n = 0 mod 8`, 1 for `n = 4 mod 8`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GrassmannParams {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub t: usize,
    pub m: usize,
    pub n_mod_8: usize,
    pub epsilon: Option<u8>,
    pub l: usize,
    pub j: usize,
}

pub const UNSUPPORTED_PARITY: &str =
    "exact K-groups require n ≡ 0 mod 4, k odd; use hopf-order for bounds";

impl GrassmannParams {
    pub fn new(n: usize, k: usize) -> Result<Self, KError> {
        if k < 2 || 2 * k > n {
            return Err(KError::InvalidParams(format!(
                "need 2 <= k <= n/2, got n={n}, k={k}"
            )));
        }
        Ok(GrassmannParams {
            n,
            k,
            s: k / 2,
            t: (n - k) / 2,
            m: n / 2,
            n_mod_8: n % 8,
            epsilon: n.is_multiple_of(4).then_some(u8::from(n % 8 == 4)),
            l: n / 4,
            j: n % 4,
        })
    }

    /// Parameters for which the ring presentation of `K^0` applies.
    pub fn exact(n: usize, k: usize) -> Result<Self, KError> {
        let p = Self::new(n, k)?;
        if !p.is_exact_case() {
            return Err(KError::UnsupportedParity { n, k });
        }
        Ok(p)
    }

    pub fn is_exact_case(&self) -> bool {
        self.n.is_multiple_of(4) && self.k % 2 == 1
    }

    pub fn dimension(&self) -> usize {
        self.k * (self.n - self.k)
    }

    /// `2^(m-1)`
    pub fn two_pow_m1(&self) -> num_bigint::BigInt {
        num_bigint::BigInt::from(1) << (self.m - 1)
    }

    /// `(m-1 choose s)`, the rank of `K^0` in the exact case.
    pub fn expected_rank(&self) -> usize {
        crate::exactmath::binomial((self.m - 1) as u64, self.s as u64)
            .try_into()
            .expect("small binomial")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conventions() {
        let p = GrassmannParams::exact(8, 3).unwrap();
        assert_eq!((p.s, p.t, p.m, p.epsilon), (1, 2, 4, Some(0)));
        let p = GrassmannParams::exact(12, 5).unwrap();
        assert_eq!(
            (p.s, p.t, p.m, p.epsilon, p.l, p.j),
            (2, 3, 6, Some(1), 3, 0)
        );
        assert_eq!(p.expected_rank(), 10);
        assert!(matches!(
            GrassmannParams::exact(10, 3),
            Err(KError::UnsupportedParity { .. })
        ));
        assert!(matches!(
            GrassmannParams::exact(8, 4),
            Err(KError::UnsupportedParity { .. })
        ));
        assert!(GrassmannParams::new(8, 5).is_err());
        assert!(GrassmannParams::new(8, 1).is_err());
        let p = GrassmannParams::new(11, 4).unwrap();
        assert_eq!((p.l, p.j, p.epsilon), (2, 3, None));
    }
}
