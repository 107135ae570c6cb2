//! Elements of the integral group ring `Λ = Z[Z/m]`.
//!
//! An element `Σ cᵢ gⁱ` is stored densely as its coefficient vector of
//! length `m`; the coefficient of `gⁱ` sits at index `i`. The modulus is part
//! of the value, so mixing elements of different rings is an error rather
//! than a silent truncation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::RingError;

/// An element of `Z[Z/m]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    m: usize,
    coeffs: Vec<BigInt>,
}

impl GroupRingElement {
    /// Builds an element from its coefficient vector. `coeffs.len()` must be `m`.
    pub fn new(m: usize, coeffs: Vec<BigInt>) -> Result<Self, RingError> {
        if m < 2 {
            return Err(RingError::InvalidModulus(m));
        }
        if coeffs.len() != m {
            return Err(RingError::WrongLength { m, len: coeffs.len() });
        }
        Ok(Self { m, coeffs })
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64s(m: usize, coeffs: &[i64]) -> Result<Self, RingError> {
        Self::new(m, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(m: usize) -> Self {
        assert!(m >= 2, "modulus must be at least 2");
        Self { m, coeffs: vec![BigInt::zero(); m] }
    }

    pub fn one(m: usize) -> Self {
        Self::monomial(m, 0, 1)
    }

    /// `c·gᵏ`, with the exponent taken mod `m` (negative exponents allowed).
    pub fn monomial(m: usize, exp: i64, c: i64) -> Self {
        let mut x = Self::zero(m);
        x.coeffs[exp.rem_euclid(m as i64) as usize] = BigInt::from(c);
        x
    }

    /// The generator `g`.
    pub fn gen(m: usize) -> Self {
        Self::monomial(m, 1, 1)
    }

    /// An integer constant `c·1`.
    pub fn constant(m: usize, c: impl Into<BigInt>) -> Self {
        let mut x = Self::zero(m);
        x.coeffs[0] = c.into();
        x
    }

    /// The norm element `s = 1 + g + ⋯ + g^{m−1}`.
    pub fn norm_element(m: usize) -> Self {
        Self { m, coeffs: vec![BigInt::one(); m] }
    }

    /// `1 + g + ⋯ + g^{l−1}` with exponents wrapped mod `m`; `l` may exceed `m`.
    pub fn geometric(m: usize, l: u64) -> Self {
        let mm = m as u64;
        let full = l / mm;
        let rest = (l % mm) as usize;
        let coeffs = (0..m)
            .map(|i| BigInt::from(full + u64::from(i < rest)))
            .collect();
        Self { m, coeffs }
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> &BigInt {
        &self.coeffs[exp.rem_euclid(self.m as i64) as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn check_same(&self, other: &Self) -> Result<(), RingError> {
        if self.m == other.m {
            Ok(())
        } else {
            Err(RingError::ModulusMismatch { left: self.m, right: other.m })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { m: self.m, coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { m: self.m, coeffs })
    }

    /// Product in `Λ` (cyclic convolution).
    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check_same(other)?;
        let m = self.m;
        let mut out = vec![BigInt::zero(); m];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[(i + j) % m] += a * b;
            }
        }
        Ok(Self { m, coeffs: out })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self { m: self.m, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplication by `gᵏ`: a cyclic shift of the coefficients.
    pub fn shift(&self, k: i64) -> Self {
        let m = self.m;
        let k = k.rem_euclid(m as i64) as usize;
        let mut coeffs = vec![BigInt::zero(); m];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(i + k) % m] = c.clone();
        }
        Self { m, coeffs }
    }

    /// The involution `x ↦ x̄` induced by `g ↦ g⁻¹`.
    pub fn involution(&self) -> Self {
        let m = self.m;
        let coeffs = (0..m).map(|i| self.coeffs[(m - i) % m].clone()).collect();
        Self { m, coeffs }
    }

    /// The augmentation `ε: Λ → Z`.
    pub fn augmentation(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// The mod 2 augmentation `ε₂: Λ → Z/2`.
    pub fn augmentation_mod2(&self) -> u8 {
        let e = self.augmentation();
        u8::from(!(e % 2u8).is_zero())
    }

    /// Whether `x = x̄`.
    pub fn is_symmetric(&self) -> bool {
        *self == self.involution()
    }

    /// Largest absolute coefficient.
    pub fn height(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// The `m × m` integer matrix of multiplication by `self`, in the basis
    /// `1, g, …, g^{m−1}`. Column `j` is the coefficient vector of `self·gʲ`.
    pub fn multiplication_matrix(&self) -> Vec<Vec<BigInt>> {
        let m = self.m;
        (0..m)
            .map(|i| (0..m).map(|j| self.coeffs[(i + m - j) % m].clone()).collect())
            .collect()
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: Self) -> GroupRingElement {
        self.try_add(rhs).expect("modulus mismatch in addition")
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: Self) -> GroupRingElement {
        self.try_sub(rhs).expect("modulus mismatch in subtraction")
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, rhs: Self) -> GroupRingElement {
        self.try_mul(rhs).expect("modulus mismatch in multiplication")
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        GroupRingElement { m: self.m, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        -&self
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if wrote {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("g")?,
                (1, false) => write!(f, "{mag}g")?,
                (_, true) => write!(f, "g^{i}")?,
                (_, false) => write!(f, "{mag}g^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] in Z[Z/{}]", self, self.m)
    }
}

/// Serde helpers writing big integers as JSON numbers when they fit in `i64`
/// and as decimal strings otherwise.
pub(crate) mod bigint_json {
    use super::*;

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Int(i64),
        Str(String),
    }

    pub fn to_value(c: &BigInt) -> serde_json::Value {
        match c.to_i64() {
            Some(v) => serde_json::Value::from(v),
            None => serde_json::Value::String(c.to_string()),
        }
    }

    pub fn serialize_vec<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let vals: Vec<serde_json::Value> = v.iter().map(to_value).collect();
        vals.serialize(s)
    }

    pub fn deserialize_vec<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let raw = Vec::<Repr>::deserialize(d)?;
        raw.into_iter()
            .map(|r| match r {
                Repr::Int(v) => Ok(BigInt::from(v)),
                Repr::Str(s) => s.parse::<BigInt>().map_err(serde::de::Error::custom),
            })
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    m: usize,
    #[serde(serialize_with = "bigint_json::serialize_vec", deserialize_with = "bigint_json::deserialize_vec")]
    coeffs: Vec<BigInt>,
}

impl Serialize for GroupRingElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ElementJson { m: self.m, coeffs: self.coeffs.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroupRingElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = ElementJson::deserialize(d)?;
        GroupRingElement::new(raw.m, raw.coeffs).map_err(serde::de::Error::custom)
    }
}
