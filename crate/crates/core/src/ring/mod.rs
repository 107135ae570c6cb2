//! Exact arithmetic in the integral group ring `Λ = Z[Z/m]`.

mod element;
mod lattice;
mod ops;
mod param;
mod random;

pub use element::GroupRingElement;
pub use lattice::Hnf;
pub use ops::{
    exact_divide, ideal_contains, ideal_lattice, ideal_normalize, integer_det, is_unit,
    solve_combination, Division, NormData, UnitConvention,
};
pub use param::{param_reduce, FormParameterKind, ParameterClass};
pub use random::{random_element, random_sparse};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(usize),
    #[error("expected {m} coefficients, got {len}")]
    WrongLength { m: usize, len: usize },
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: usize, right: usize },
    #[error("form parameter kinds differ")]
    KindMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("not divisible")]
    NotDivisible,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("all generators are zero")]
    Degenerate,
    #[error("integer overflow in a machine-size parameter")]
    Overflow,
    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),
}
