//! Exact coefficient arithmetic and sparse multivariate polynomials.

mod field;
mod linear;
mod monomial;
mod poly;

pub use field::{Field, Fp, Integral, Rational};
pub use linear::Matrix;
pub use monomial::{Monomial, MonomialOrder, OrderKind};
pub use poly::{equal_up_to_scalar, Degree, Polynomial, Ring};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("not a permutation of the variable indices")]
    InvalidPermutation,
    #[error("variable `{0}` declared twice")]
    DuplicateVariable(String),
}

/// Shorthand for an integer rational.
pub fn q(v: i64) -> Rational {
    Rational::from_i64(v)
}
