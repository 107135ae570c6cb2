//! Constructive Lagrangian complements for rank-2 embeddings into hyperbolic
//! forms of rank 2.
//!
//! An embedding is given in normalized shape: `v₁ = e₁` and
//! `v₂ = a₁e₁ + a₂e₂ + c·f₁ + b₂f₂`, where `c = s` for the skew-hermitian
//! branches and `c = 1 − g` for the symmetric one. Each solver moves `v₂` to
//! a standard position with explicit isometries, writes down a complement
//! there and pulls it back.

mod rank2;
mod solve;
mod sweep;

pub use rank2::{rank2_vector_isometry, SearchBudget};
pub use solve::{solve, solve_even_m, solve_even_n, solve_odd_m, NamedIsometry, SolverTrace};
pub use sweep::{random_spec, run_sweep, SweepOutcome, SweepReport};

use serde::{Deserialize, Serialize};

use crate::forms::{FormError, QuadraticModule, RingVector};
use crate::ring::{GroupRingElement, RingError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Branch {
    OddMSkew,
    EvenMSkew,
    EvenNSym,
}

impl Branch {
    pub const ALL: [Branch; 3] = [Branch::OddMSkew, Branch::EvenMSkew, Branch::EvenNSym];

    /// Whether the branch is defined for this modulus.
    pub fn accepts(self, m: usize) -> bool {
        match self {
            Branch::OddMSkew => m % 2 == 1,
            Branch::EvenMSkew => m % 2 == 0,
            Branch::EvenNSym => m >= 2,
        }
    }

    pub fn module(self, m: usize) -> QuadraticModule {
        match self {
            Branch::OddMSkew | Branch::EvenMSkew => QuadraticModule::skew_tilde(m, 2),
            Branch::EvenNSym => QuadraticModule::symmetric(m, 2),
        }
    }

    /// The fixed `f₁`-coefficient of `v₂`.
    pub fn f1_coefficient(self, m: usize) -> GroupRingElement {
        match self {
            Branch::OddMSkew | Branch::EvenMSkew => GroupRingElement::norm_element(m),
            Branch::EvenNSym => &GroupRingElement::one(m) - &GroupRingElement::gen(m),
        }
    }
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Branch::OddMSkew => "odd-m",
            Branch::EvenMSkew => "even-m",
            Branch::EvenNSym => "even-n",
        })
    }
}

impl std::str::FromStr for Branch {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "odd-m" | "odd-m-skew" => Ok(Branch::OddMSkew),
            "even-m" | "even-m-skew" => Ok(Branch::EvenMSkew),
            "even-n" | "even-n-sym" => Ok(Branch::EvenNSym),
            other => Err(format!("unknown branch {other:?}")),
        }
    }
}

/// The coefficients of `v₂ = a₁e₁ + a₂e₂ + c·f₁ + b₂f₂`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingSpec {
    pub m: usize,
    pub branch: Branch,
    pub a1: GroupRingElement,
    pub a2: GroupRingElement,
    pub b2: GroupRingElement,
}

impl EmbeddingSpec {
    pub fn new(
        branch: Branch,
        a1: GroupRingElement,
        a2: GroupRingElement,
        b2: GroupRingElement,
    ) -> Result<Self, LagrangianError> {
        let m = a1.modulus();
        for x in [&a2, &b2] {
            if x.modulus() != m {
                return Err(RingError::ModulusMismatch { left: m, right: x.modulus() }.into());
            }
        }
        Ok(Self { m, branch, a1, a2, b2 })
    }

    pub fn module(&self) -> QuadraticModule {
        self.branch.module(self.m)
    }

    pub fn v1(&self) -> RingVector {
        self.module().e(0)
    }

    pub fn v2(&self) -> RingVector {
        RingVector::new(vec![
            self.a1.clone(),
            self.a2.clone(),
            self.branch.f1_coefficient(self.m),
            self.b2.clone(),
        ])
        .expect("uniform modulus")
    }

    /// `a₂e₂ + c·f₁ + b₂f₂`
    pub fn tail(&self) -> RingVector {
        let mut v = self.v2();
        v.set(0, GroupRingElement::zero(self.m));
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LagrangianError {
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("rank-2 isometry search exhausted after {attempts} attempts")]
    SearchExhausted { attempts: usize },
    #[error("ideal normalization failed: {0}")]
    NormalizationFailed(RingError),
    #[error("μ classes of the rank-2 vectors differ ({found})")]
    ParityObstruction { found: String },
    #[error("neither ε(a₂) nor ε(b₂) is ±1 (got {a2} and {b2})")]
    AugmentationObstruction { a2: String, b2: String },
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Ring(#[from] RingError),
}
