//! `K^0` and `K^1` of the real Grassmannian `G(n,k)` for `n = 0 mod 4`, `k` odd,
//! from the presentation by `lambda_p`, `mu_q` and the Hopf class `theta`.

mod barb;
mod groups;
mod params;
mod presentation;
mod report;
mod schur;

pub use barb::{barb_generators, verify_barb, verify_barb_reduced, BarBReport};
pub use groups::{
    hopf_class_order, hopf_element_order, hopf_exponent, hopf_order_bounds, k0_gb, k1_image,
    monomial_names, Engine, QuotientRing,
};
pub use params::{GrassmannParams, UNSUPPORTED_PARITY};
pub use presentation::{
    build_presentation, delta_var, eliminate_mu, f_class, f_relation, f_st, hopf_relation,
    lambda_class, lambda_var, mu_class, mu_var, theta_var, KPresentation, ReducedPresentation,
};
pub use report::{
    compute_k0, compute_k0_reduced, compute_k1, compute_kgroups, Invariants, K0Result, KGroups,
    KOptions,
};
pub use schur::{schur_fast_path, schur_fast_path_reduced, SchurPath};

use crate::exactmath::ExactError;
use crate::zgb::ZgbError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("{}", UNSUPPORTED_PARITY)]
    UnsupportedParity { n: usize, k: usize },
    #[error(transparent)]
    Gb(#[from] ZgbError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("engines disagree: {0}")]
    CrossCheck(String),
    #[error("internal error: {0}")]
    Internal(String),
}
