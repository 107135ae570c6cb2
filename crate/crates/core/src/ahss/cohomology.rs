//! Mod-2 cohomology of `K(Z/m, 1)` for even `m`, with Steenrod squares.
//!
//! `m ≡ 2 (mod 4)`: `Z/2[x]`, `|x| = 1`, `Sq(x) = x + x²`.
//! `m ≡ 0 (mod 4)`: `Z/2[x, y]/(x²)`, `|y| = 2`, `Sq(x) = x`, `Sq(y) = y + y²`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::AhssError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum RingCase {
    /// `m ≡ 2 (mod 4)`
    Poly,
    /// `m ≡ 0 (mod 4)`
    Trunc,
}

impl RingCase {
    pub fn for_modulus(m: usize) -> Result<Self, AhssError> {
        match m % 4 {
            2 => Ok(RingCase::Poly),
            0 if m > 0 => Ok(RingCase::Trunc),
            _ => Err(AhssError::OddModulus(m)),
        }
    }
}

/// `xᵃ yᵇ`
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.x + 2 * self.y
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |f: &mut fmt::Formatter<'_>, v: &str, e: u32| match e {
            0 => Ok(()),
            1 => f.write_str(v),
            e => write!(f, "{v}^{e}"),
        };
        if self.x == 0 && self.y == 0 {
            return f.write_str("1");
        }
        part(f, "x", self.x)?;
        part(f, "y", self.y)
    }
}

/// A homogeneous class: a set of monomials summed mod 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CohomologyClass {
    pub m: usize,
    pub case: RingCase,
    pub degree: u32,
    pub terms: BTreeSet<Monomial>,
}

impl CohomologyClass {
    pub fn zero(m: usize, degree: u32) -> Result<Self, AhssError> {
        Ok(Self { m, case: RingCase::for_modulus(m)?, degree, terms: BTreeSet::new() })
    }

    /// The class of one monomial, or zero if a relation kills it.
    pub fn monomial(m: usize, mono: Monomial) -> Result<Self, AhssError> {
        let case = RingCase::for_modulus(m)?;
        if case == RingCase::Poly && mono.y > 0 {
            return Err(AhssError::BadMonomial(format!("{mono} has a y factor but the ring is Z/2[x]")));
        }
        let mut c = Self { m, case, degree: mono.degree(), terms: BTreeSet::new() };
        if !(case == RingCase::Trunc && mono.x >= 2) {
            c.terms.insert(mono);
        }
        Ok(c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_ring(&self, other: &Self) -> Result<(), AhssError> {
        if self.m != other.m {
            return Err(AhssError::ModulusMismatch { left: self.m, right: other.m });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AhssError> {
        self.same_ring(other)?;
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(AhssError::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let degree = if self.is_zero() { other.degree } else { self.degree };
        let terms = self.terms.symmetric_difference(&other.terms).copied().collect();
        Ok(Self { m: self.m, case: self.case, degree, terms })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AhssError> {
        self.same_ring(other)?;
        let mut out = Self { m: self.m, case: self.case, degree: self.degree + other.degree, terms: BTreeSet::new() };
        for a in &self.terms {
            for b in &other.terms {
                let p = Monomial { x: a.x + b.x, y: a.y + b.y };
                if self.case == RingCase::Trunc && p.x >= 2 {
                    continue;
                }
                if !out.terms.remove(&p) {
                    out.terms.insert(p);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for CohomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl FromStr for Monomial {
    type Err = AhssError;
    /// Parses `1`, `x`, `x^3`, `y^2`, `xy^2`, `x y`.
    fn from_str(s: &str) -> Result<Self, AhssError> {
        let bad = || AhssError::BadMonomial(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        if t == "1" {
            return Ok(Monomial { x: 0, y: 0 });
        }
        let mut mono = Monomial { x: 0, y: 0 };
        let mut chars = t.chars().peekable();
        let mut seen = false;
        while let Some(v) = chars.next() {
            if v != 'x' && v != 'y' {
                return Err(bad());
            }
            let mut exp = 1u32;
            if chars.peek() == Some(&'^') {
                chars.next();
                let mut digits = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                exp = digits.parse().map_err(|_| bad())?;
            }
            if v == 'x' { mono.x += exp } else { mono.y += exp }
            seen = true;
        }
        if !seen {
            return Err(bad());
        }
        Ok(mono)
    }
}

/// Monomial basis of `Hᵈ`; always one class in each degree.
pub fn cohomology_basis(m: usize, d: u32) -> Result<Vec<CohomologyClass>, AhssError> {
    let mono = match RingCase::for_modulus(m)? {
        RingCase::Poly => Monomial { x: d, y: 0 },
        RingCase::Trunc if d % 2 == 0 => Monomial { x: 0, y: d / 2 },
        RingCase::Trunc => Monomial { x: 1, y: (d - 1) / 2 },
    };
    Ok(vec![CohomologyClass::monomial(m, mono)?])
}

/// The class `w₂` of the twisting bundle: the nonzero element of `H²`.
pub fn w2(m: usize) -> Result<CohomologyClass, AhssError> {
    Ok(cohomology_basis(m, 2)?.remove(0))
}

fn total_square_of_generator(m: usize, generator: Monomial) -> Result<CohomologyClass, AhssError> {
    let g = CohomologyClass::monomial(m, generator)?;
    let sq = g.try_mul(&g)?;
    // Sq(g) = g + g², which is inhomogeneous; keep the terms together
    let mut terms = g.terms.clone();
    terms.extend(sq.terms.iter().copied());
    Ok(CohomologyClass { m, case: g.case, degree: 0, terms })
}

fn mul_inhomogeneous(a: &CohomologyClass, b: &CohomologyClass) -> CohomologyClass {
    let mut out = a.try_mul(b).expect("same modulus");
    out.degree = 0;
    out
}

/// `Sqᵏ(c)`, the degree `deg c + k` part of the total square
/// `Sq(c) = Π Sq(x)ᵃ Sq(y)ᵇ` taken monomial by monomial.
pub fn steenrod_square(k: u32, c: &CohomologyClass) -> Result<CohomologyClass, AhssError> {
    let m = c.m;
    let sx = total_square_of_generator(m, Monomial { x: 1, y: 0 })?;
    let sy = match c.case {
        RingCase::Trunc => Some(total_square_of_generator(m, Monomial { x: 0, y: 1 })?),
        RingCase::Poly => None,
    };
    let target = c.degree + k;
    let mut out = CohomologyClass { m, case: c.case, degree: target, terms: BTreeSet::new() };
    for mono in &c.terms {
        let mut total = CohomologyClass::monomial(m, Monomial { x: 0, y: 0 })?;
        total.degree = 0;
        for _ in 0..mono.x {
            total = mul_inhomogeneous(&total, &sx);
        }
        for _ in 0..mono.y {
            total = mul_inhomogeneous(&total, sy.as_ref().expect("y only in the truncated case"));
        }
        for t in total.terms.iter().filter(|t| t.degree() == target) {
            if !out.terms.remove(t) {
                out.terms.insert(*t);
            }
        }
    }
    Ok(out)
}
