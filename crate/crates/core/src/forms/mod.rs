//! Hyperbolic hermitian and quadratic forms over `Λ = Z[Z/m]`.

mod complement;
mod matrix;
mod module;

pub use complement::{verify_lagrangian_complement, ComplementCertificate, ComplementFailure};
pub use matrix::{ring_det, RingMatrix, RingVector};
pub use module::{QuadraticModule, Sign, TransvectionBase};

use crate::ring::{FormParameterKind, RingError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: usize, right: usize },
    #[error("zero vector")]
    ZeroVector,
    #[error("index {index} out of range for size {size}")]
    BadIndex { index: usize, size: usize },
    #[error("sign {sign} is incompatible with form parameter {kind}")]
    IncompatibleParameter { sign: i64, kind: FormParameterKind },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("not a Lagrangian complement: {0}")]
    NotComplement(ComplementFailure),
    #[error(transparent)]
    Ring(#[from] RingError),
}
