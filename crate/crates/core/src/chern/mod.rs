//! Rational even cohomology of `G(n,k)`, Chern characters of exterior powers,
//! Adams operations, and the formal ring `K_{n,k}` with its comparison to `K^0`.

mod characters;
mod knk;
mod pontryagin;

pub use characters::{
    adams_psi, ch_adams_via_lambda, ch_gamma, ch_lambda_all, ch_lambda_powers,
    generated_subalgebra_dimension, power_sums, vandermonde_matrix, vandermonde_solve,
    verify_ch_surjectivity, Bundle, ChReport, MAX_MANIFOLD_DIMENSION,
};
pub use knk::{
    build_knk, build_knk_with, compare_knk_k0, default_nu, verify_eq22_chain, CompareReport,
    Eq22Report, KnkPresentation, KnkReport, NuSource,
};
pub use pontryagin::{build_p, p_var, q_var, CohClass, PontryaginRing};

use crate::exactmath::ExactError;
use crate::ktheory::KError;
use crate::poly::PolyError;
use crate::zgb::ZgbError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChernError {
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("Vandermonde matrix of size {0} is singular")]
    Singular(usize),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Gb(#[from] ZgbError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    K(#[from] KError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
