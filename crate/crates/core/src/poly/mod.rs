//! Exact multivariate and Laurent polynomials over the integers and the
//! rationals, with a symmetric-function toolkit.

mod coeff;
mod monomial;
mod polynomial;
mod symmetric;
mod text;
mod var;

pub use coeff::{Coeff, RingTag};
pub use monomial::Monomial;
pub use polynomial::{Polynomial, QPoly, ZPoly};
pub use symmetric::{
    complete_homogeneous, count_tableaux, determinant, elementary_all, elementary_symmetric,
    newton_convert, power_sum, schur_bialternant, schur_by_tableaux, schur_from_elementary,
    schur_jacobi_trudi, schur_polynomial, symmetric_reduce, NewtonDirection, NewtonRing, Partition,
};
pub use text::{format_poly, parse_poly};
pub use var::Var;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("no image given for variable {0}")]
    MissingImage(String),
    #[error("image of {0} is not invertible but appears with a negative exponent")]
    NotInvertible(String),
    #[error("index {index} out of range 0..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not symmetric; remainder {0}")]
    NotSymmetric(String),
}
