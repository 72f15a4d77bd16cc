use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact coefficient rings: the integers and the rationals.
pub trait Coeff:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Signed
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + FromStr
    + Send
    + Sync
    + 'static
{
    const RING: RingTag;

    fn from_bigint(x: BigInt) -> Self;

    fn from_i64(x: i64) -> Self {
        Self::from_bigint(BigInt::from(x))
    }

    fn is_unit(&self) -> bool;

    /// Multiplication by `c` followed by division, exact in the ring; `None` when not.
    fn try_div(&self, other: &Self) -> Option<Self>;

    fn to_rational(&self) -> BigRational;

    /// `(q, r)` with `self = q d + r`; over the integers `r` lies in `[0, |d|)`,
    /// over a field `r = 0`.
    fn div_rem_euclid(&self, d: &Self) -> (Self, Self);

    /// `(g, x, y)` with `x a + y b = g` a normalized gcd.
    fn gcd_ext(a: &Self, b: &Self) -> (Self, Self, Self);

    /// The unit `u` making `u * self` canonical (positive, or one over a field).
    fn normalizing_unit(&self) -> Self;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum RingTag {
    #[serde(rename = "ZZ")]
    Integers,
    #[serde(rename = "QQ")]
    Rationals,
}

impl Coeff for BigInt {
    const RING: RingTag = RingTag::Integers;

    fn from_bigint(x: BigInt) -> Self {
        x
    }

    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }

    fn try_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(self, other);
        r.is_zero().then_some(q)
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }

    fn div_rem_euclid(&self, d: &Self) -> (Self, Self) {
        let (mut q, mut r) = num_integer::Integer::div_mod_floor(self, d);
        if r.is_negative() {
            // d < 0: floor remainder has the sign of d
            r -= d;
            q += 1;
        }
        (q, r)
    }

    fn gcd_ext(a: &Self, b: &Self) -> (Self, Self, Self) {
        crate::exactmath::ext_gcd(a, b)
    }

    fn normalizing_unit(&self) -> Self {
        if self.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
}

impl Coeff for BigRational {
    const RING: RingTag = RingTag::Rationals;

    fn from_bigint(x: BigInt) -> Self {
        BigRational::from_integer(x)
    }

    fn is_unit(&self) -> bool {
        !self.is_zero()
    }

    fn try_div(&self, other: &Self) -> Option<Self> {
        (!other.is_zero()).then(|| self / other)
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }

    fn div_rem_euclid(&self, d: &Self) -> (Self, Self) {
        (self / d, BigRational::zero())
    }

    fn gcd_ext(a: &Self, b: &Self) -> (Self, Self, Self) {
        if !a.is_zero() {
            (BigRational::one(), a.recip(), BigRational::zero())
        } else if !b.is_zero() {
            (BigRational::one(), BigRational::zero(), b.recip())
        } else {
            (
                BigRational::zero(),
                BigRational::zero(),
                BigRational::zero(),
            )
        }
    }

    fn normalizing_unit(&self) -> Self {
        if self.is_zero() {
            BigRational::one()
        } else {
            self.recip()
        }
    }
}
