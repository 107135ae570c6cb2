//! Existence and classification of orientation-preserving free `Z/m`-actions
//! on `#genus(Sⁿ×Sⁿ)`.
//!
//! The manifold parameter is called `genus` throughout; `gen` is reserved for
//! the generator of `Z/m` in the group ring.

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CensusError {
    #[error("n = {0} is outside the C(n) table (4..=9)")]
    OutOfTable(u32),
    #[error("invalid query: {0}")]
    InvalidQuery(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionQuery {
    pub n: u32,
    pub m: u64,
    pub genus: u64,
    /// Residues of `p₁, …, p_{[n/4]}` mod `m`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pontryagin: Option<Vec<u64>>,
}

impl ActionQuery {
    pub fn new(n: u32, m: u64, genus: u64) -> Self {
        Self { n, m, genus, pontryagin: None }
    }

    pub fn with_pontryagin(mut self, classes: Vec<u64>) -> Self {
        self.pontryagin = Some(classes);
        self
    }

    pub fn validate(&self) -> Result<(), CensusError> {
        if self.n < 2 {
            return Err(CensusError::InvalidQuery(format!("n must be at least 2, got {}", self.n)));
        }
        if self.m < 2 {
            return Err(CensusError::InvalidQuery(format!("m must be at least 2, got {}", self.m)));
        }
        if let Some(p) = &self.pontryagin {
            let k = (self.n / 4) as usize;
            if p.len() != k {
                return Err(CensusError::InvalidQuery(format!(
                    "expected {k} Pontryagin residues for n = {}, got {}",
                    self.n,
                    p.len()
                )));
            }
            if let Some(bad) = p.iter().find(|&&r| r >= self.m) {
                return Err(CensusError::InvalidQuery(format!("residue {bad} is not reduced mod {}", self.m)));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Existence {
    pub exists: bool,
    pub reason: String,
    /// `χ(M) = 2(1 + (−1)ⁿ·genus)/m`, as `"a"` or `"a/b"`.
    pub euler_char: String,
    pub euler_char_integral: bool,
}

fn sign(n: u32) -> i128 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `χ(M) = 2(1 + (−1)ⁿ·genus)/m`.
pub fn euler_characteristic(n: u32, m: u64, genus: u64) -> Ratio<i128> {
    Ratio::new(2 * (1 + sign(n) * genus as i128), m as i128)
}

fn ratio_string(r: &Ratio<i128>) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A free action exists iff `m` divides `genus + (−1)ⁿ`.
pub fn existence_check(q: &ActionQuery) -> Existence {
    let shifted = q.genus as i128 + sign(q.n);
    let m = q.m as i128;
    let exists = m > 0 && shifted.mod_floor(&m) == 0;
    let chi = euler_characteristic(q.n, q.m, q.genus);
    let reason = format!(
        "genus + (−1)^n = {} + ({}) = {shifted}, which is {}divisible by m = {m}; χ(M) = 2(1 + (−1)^n·genus)/m = {}",
        q.genus,
        sign(q.n),
        if exists { "" } else { "not " },
        ratio_string(&chi)
    );
    Existence { exists, reason, euler_char: ratio_string(&chi), euler_char_integral: chi.is_integer() }
}

/// The prime bound `C(n)` for `4 ≤ n ≤ 9`.
pub fn c_of_n(n: u32) -> Result<u64, CensusError> {
    match n {
        4..=7 => Ok(3),
        8 | 9 => Ok(5),
        _ => Err(CensusError::OutOfTable(n)),
    }
}

pub fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            out.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ConjugationKind {
    Topological,
    Smooth,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ClassCount {
    Exact { count: u64, parameterization: String },
    OutOfRange { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub query: ActionQuery,
    pub exists: bool,
    pub reason: String,
    /// `None` exactly when no action exists.
    pub class_count: Option<ClassCount>,
    pub conjugation_kind: ConjugationKind,
    pub quotient_descriptors: Vec<String>,
    /// The class picked out by the supplied Pontryagin residues.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub selected_class: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub realizable_module: Option<String>,
    pub euler_char: String,
    pub notes: Vec<String>,
}

impl CensusReport {
    pub fn is_out_of_range(&self) -> bool {
        matches!(self.class_count, Some(ClassCount::OutOfRange { .. }))
    }

    /// 0 when classified, 2 when no action exists, 3 when out of range.
    pub fn exit_code(&self) -> i32 {
        if !self.exists {
            2
        } else if self.is_out_of_range() {
            3
        } else {
            0
        }
    }
}

fn superscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).expect("digit") as usize]).collect()
}

fn sphere_product(n: u32) -> String {
    let s = superscript(n);
    format!("(S{s}×S{s})")
}

fn realizable_module(n: u32, m: u64, genus: u64) -> String {
    let (head, r) = if n % 2 == 1 { ("Z²", (genus - 1) / m) } else { ("I²", (genus + 1) / m - 1) };
    if r == 0 {
        head.to_string()
    } else {
        format!("{head} ⊕ Z[Z/{m}]^{}", 2 * r)
    }
}

const NAMING_NOTE: &str = "genus denotes the number of S^n×S^n summands; gen denotes the generator of Z/m";

/// Counts and describes the conjugacy classes of actions for `q`.
pub fn classification(q: &ActionQuery) -> Result<CensusReport, CensusError> {
    q.validate()?;
    let ex = existence_check(q);
    let (n, m) = (q.n, q.m);
    let conjugation_kind = if n == 2 { ConjugationKind::Topological } else { ConjugationKind::Smooth };
    let mut report = CensusReport {
        query: q.clone(),
        exists: ex.exists,
        reason: ex.reason,
        class_count: None,
        conjugation_kind,
        quotient_descriptors: Vec::new(),
        selected_class: None,
        realizable_module: None,
        euler_char: ex.euler_char,
        notes: vec![NAMING_NOTE.to_string()],
    };
    if !ex.exists {
        return Ok(report);
    }
    match n {
        2 => {
            let rank = 2 * (q.genus + 1) / m - 2;
            report.class_count = Some(ClassCount::Exact { count: 1, parameterization: "UNIQUE".into() });
            report.quotient_descriptors.push(format!(
                "M⁴ with π₁ = Z/{m}, w₂ = 0, even indefinite intersection form of signature 0 and rank {rank} on H₂/Tors"
            ));
            report.notes.push("classification is up to topological conjugation; the smooth classification is open".into());
        }
        3 => {
            let base = "(L³_m×S³)#((g−1)/m)(S³×S³)".to_string();
            if m % 2 == 1 {
                report.class_count = Some(ClassCount::Exact { count: 1, parameterization: "UNIQUE".into() });
                report.quotient_descriptors.push(base);
            } else {
                report.class_count = Some(ClassCount::Exact { count: 2, parameterization: "W2".into() });
                report.quotient_descriptors.push(base);
                report.quotient_descriptors.push("S(ξ)#((g−1)/m)(S³×S³)".into());
                report.notes.push("the two classes are distinguished by w₂ of the quotient".into());
            }
            report.realizable_module = Some(realizable_module(n, m, q.genus));
        }
        _ => {
            let bound = match c_of_n(n) {
                Ok(c) => c,
                Err(e) => {
                    report.class_count = Some(ClassCount::OutOfRange { reason: e.to_string() });
                    return Ok(report);
                }
            };
            let small: Vec<u64> = prime_factors(m).into_iter().filter(|&p| p <= bound).collect();
            if !small.is_empty() {
                report.class_count = Some(ClassCount::OutOfRange {
                    reason: format!("prime factor(s) {small:?} of m = {m} do not exceed C({n}) = {bound}"),
                });
                return Ok(report);
            }
            let k = n / 4;
            let count = m
                .checked_pow(k)
                .ok_or_else(|| CensusError::InvalidQuery(format!("{m}^{k} does not fit in 64 bits")))?;
            report.class_count = Some(ClassCount::Exact {
                count,
                parameterization: format!("PONTRYAGIN (Z/{m})^{k}"),
            });
            let spheres = sphere_product(n);
            let descriptor = if n % 2 == 1 {
                format!("S(ξ)#((g−1)/m){spheres}#(1/m)Σ")
            } else {
                format!("N(ξ)#((g+1)/m){spheres}#(1/m)Σ")
            };
            if let Some(p) = &q.pontryagin {
                let tuple = p.iter().map(u64::to_string).collect::<Vec<_>>().join(", ");
                report.selected_class = Some(format!("{descriptor} with (p₁, …, p_{k}) = ({tuple}) in (Z/{m})^{k}"));
            }
            report.quotient_descriptors.push(descriptor);
            report.realizable_module = Some(realizable_module(n, m, q.genus));
            report.notes.push(format!(
                "(1/m)Σ is the homotopy sphere whose m-fold sum is Σ; this presumes m is invertible in Θ_{}, which holds when every prime factor of m exceeds C(n)",
                2 * n
            ));
        }
    }
    Ok(report)
}
