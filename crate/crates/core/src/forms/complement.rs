//! Checking that a submodule `U` is a Lagrangian complement of `S`.

use serde::{Deserialize, Serialize};

use super::matrix::{ring_det, RingMatrix, RingVector};
use super::module::QuadraticModule;
use super::FormError;
use crate::ring::{is_unit, GroupRingElement, ParameterClass};

/// The condition that made [`verify_lagrangian_complement`] reject.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "condition", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ComplementFailure {
    WrongCount { s: usize, u: usize, rank: usize },
    GramNonzero { i: usize, j: usize },
    MuNonzero { i: usize },
    DeterminantNotUnit,
}

impl std::fmt::Display for ComplementFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::WrongCount { s, u, rank } => write!(f, "expected {rank} vectors each in S and U, got {s} and {u}"),
            Self::GramNonzero { i, j } => write!(f, "λ(u{i}, u{j}) ≠ 0"),
            Self::MuNonzero { i } => write!(f, "μ(u{i}) ≠ 0"),
            Self::DeterminantNotUnit => f.write_str("determinant of S ∪ U is not a unit"),
        }
    }
}

/// Evidence that `U` is a Lagrangian complement of `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplementCertificate {
    pub module: QuadraticModule,
    pub s_basis: Vec<RingVector>,
    pub u_basis: Vec<RingVector>,
    /// `λ(uᵢ, uⱼ)` for all pairs.
    pub gram: Vec<Vec<GroupRingElement>>,
    pub mu: Vec<ParameterClass>,
    pub det: GroupRingElement,
    pub det_inverse: GroupRingElement,
}

/// Checks that the matrix with columns `S ∪ U` has unit determinant, then
/// `λ|U×U = 0` and `μ|U = 0`, reporting the first condition that fails.
pub fn verify_lagrangian_complement(
    q: &QuadraticModule,
    s: &[RingVector],
    u: &[RingVector],
) -> Result<ComplementCertificate, FormError> {
    if s.len() != q.rank || u.len() != q.rank {
        return Err(FormError::NotComplement(ComplementFailure::WrongCount {
            s: s.len(),
            u: u.len(),
            rank: q.rank,
        }));
    }
    for v in s.iter().chain(u) {
        q.check_vector(v)?;
    }
    let cols: Vec<RingVector> = s.iter().chain(u).cloned().collect();
    let det = ring_det(&RingMatrix::from_columns(&cols)?);
    let Some(det_inverse) = is_unit(&det) else {
        return Err(FormError::NotComplement(ComplementFailure::DeterminantNotUnit));
    };
    let mut gram = Vec::with_capacity(u.len());
    for (i, x) in u.iter().enumerate() {
        let mut row = Vec::with_capacity(u.len());
        for (j, y) in u.iter().enumerate() {
            let l = q.lambda(x, y)?;
            if !l.is_zero() {
                return Err(FormError::NotComplement(ComplementFailure::GramNonzero { i, j }));
            }
            row.push(l);
        }
        gram.push(row);
    }
    let mut mu = Vec::with_capacity(u.len());
    for (i, x) in u.iter().enumerate() {
        let c = q.mu(x)?;
        if !c.is_zero() {
            return Err(FormError::NotComplement(ComplementFailure::MuNonzero { i }));
        }
        mu.push(c);
    }
    Ok(ComplementCertificate {
        module: *q,
        s_basis: s.to_vec(),
        u_basis: u.to_vec(),
        gram,
        mu,
        det,
        det_inverse,
    })
}
