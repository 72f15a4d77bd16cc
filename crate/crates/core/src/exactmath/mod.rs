//! Exact integer linear algebra and finitely generated abelian groups.

mod group;
mod lattice;
mod matrix;
mod smith;

pub use group::{
    big_to_json, cokernel_group, element_order, subgroup_structure, ElementOrder, FinAbGroup,
};
pub use lattice::{hermite_rows, invert_rational, rank, solve_integer, solve_rational, Echelon};
pub use matrix::{ext_gcd, IntMatrix};
pub use smith::{smith_normal_form, SmithDecomposition};

use num_bigint::BigInt;
use num_traits::One;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("dimension mismatch ({context}): expected {expected}, found {found}")]
    DimensionMismatch {
        expected: usize,
        found: usize,
        context: String,
    },
    #[error("empty matrix")]
    EmptyMatrix,
    #[error("internal error: {0}")]
    Internal(String),
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}
