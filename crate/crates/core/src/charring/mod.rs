//! Representation rings of `Spin(n)`, `SO(k)` and `H_{n,k}` modelled by their
//! characters on a maximal torus, as Laurent polynomials in `u_j` (and `v_j`,
//! `theta`).

mod identities;
mod reps;
mod torus;

pub use identities::{
    identity_params, identity_sides, identity_suite, verify_identity, verify_identity_with, Caps,
    IdentityCase, IdentityParams, IdentityResult, Sides,
};
pub use reps::{
    all_symbols, character_of, coordinate_blocks, exterior_powers, formal_dimension, full_spin,
    half_spin, hodge_half, GroupTag, RepElement, Symbol,
};
pub use torus::{
    dimension, evaluate_at_z0, forget_theta, is_one_dimensional_unit, is_weyl_invariant, mu_star,
    parity_class, reduce_theta, theta, u, v, GaussianInt, ParityClass, WeylType,
};

use crate::exactmath::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CharError {
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error("{0}")]
    InvalidSymbol(String),
    #[error("not a character of the spin torus: {0}")]
    NotInTorusRing(String),
    #[error("monomial {0} mixes odd and even exponents")]
    MixedParity(String),
    #[error("{0} has odd coefficients before halving")]
    NotIntegral(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// `H_{n,k} = H^0_{n,k} x Z/2` exactly when `n = 0 mod 4` and `k` is odd.
pub fn splits_as_direct_product(n: usize, k: usize) -> Result<bool, CharError> {
    if k < 2 || 2 * k > n {
        return Err(CharError::Params(format!(
            "need 2 <= k <= n/2, got ({n},{k})"
        )));
    }
    Ok(n.is_multiple_of(4) && k % 2 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitting() {
        assert!(splits_as_direct_product(8, 3).unwrap());
        assert!(!splits_as_direct_product(10, 3).unwrap());
        assert!(!splits_as_direct_product(8, 2).unwrap());
        assert!(splits_as_direct_product(8, 5).is_err());
    }
}
