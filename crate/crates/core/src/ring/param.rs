//! Form parameters and the quotient groups in which quadratic refinements
//! take their values.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::element::GroupRingElement;
use super::lattice::Hnf;
use super::RingError;

/// Which Z-sublattice of `Λ` a quadratic refinement is taken modulo.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum FormParameterKind {
    /// `⟨1, x + x̄⟩`
    Tilde,
    /// `⟨x + x̄⟩`
    Plus,
    /// `⟨x − x̄⟩`
    Minus,
}

impl FormParameterKind {
    pub const ALL: [FormParameterKind; 3] = [Self::Tilde, Self::Plus, Self::Minus];

    /// Generators of the lattice as coefficient vectors.
    pub fn lattice_generators(self, m: usize) -> Vec<Vec<BigInt>> {
        let mut gens = Vec::with_capacity(m + 1);
        if self == Self::Tilde {
            gens.push(GroupRingElement::one(m).into_coeffs());
        }
        for i in 0..m as i64 {
            let a = GroupRingElement::monomial(m, i, 1);
            let b = GroupRingElement::monomial(m, -i, 1);
            let g = match self {
                Self::Tilde | Self::Plus => &a + &b,
                Self::Minus => &a - &b,
            };
            gens.push(g.into_coeffs());
        }
        gens
    }

    pub fn lattice(self, m: usize) -> Hnf {
        Hnf::new(&self.lattice_generators(m), m)
    }
}

impl fmt::Display for FormParameterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Tilde => "TILDE",
            Self::Plus => "PLUS",
            Self::Minus => "MINUS",
        })
    }
}

impl FromStr for FormParameterKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "TILDE" => Ok(Self::Tilde),
            "PLUS" => Ok(Self::Plus),
            "MINUS" => Ok(Self::Minus),
            other => Err(format!("unknown form parameter {other:?}")),
        }
    }
}

/// A class in `Λ / Γ` held by its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParameterClass {
    pub kind: FormParameterKind,
    #[serde(flatten)]
    representative: GroupRingElement,
}

impl ParameterClass {
    pub fn representative(&self) -> &GroupRingElement {
        &self.representative
    }

    pub fn is_zero(&self) -> bool {
        self.representative.is_zero()
    }

    pub fn zero(m: usize, kind: FormParameterKind) -> Self {
        Self { kind, representative: GroupRingElement::zero(m) }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        if self.kind != other.kind {
            return Err(RingError::KindMismatch);
        }
        Ok(param_reduce(&self.representative.try_add(&other.representative)?, self.kind))
    }
}

/// Canonical representative of `x` modulo the parameter lattice, reducing
/// coordinates in index order `0, 1, …, m−1`.
pub fn param_reduce(x: &GroupRingElement, kind: FormParameterKind) -> ParameterClass {
    let m = x.modulus();
    let (rem, _) = kind.lattice(m).reduce(x.coeffs());
    ParameterClass {
        kind,
        representative: GroupRingElement::new(m, rem).expect("length preserved"),
    }
}
