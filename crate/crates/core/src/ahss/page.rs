//! `E²` and `E³` pages of `H_p(K(Z/m,1); Ω^spin_q) ⇒ Ω^spin_{p+q}` and the
//! report on the line `p + q = 6`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::cohomology::{cohomology_basis, steenrod_square, w2, RingCase};
use super::AhssError;

/// Largest total degree materialized.
pub const MAX_TOTAL_DEGREE: u32 = 8;

/// `Ω^spin_q` for `q = 0..=8` as lists of cyclic orders, `0` meaning `Z`.
/// Standard values (Milnor, Anderson–Brown–Peterson).
pub const SPIN_BORDISM: [&[u64]; 9] = [&[0], &[2], &[2], &[], &[0], &[], &[], &[], &[0, 0]];

/// A finitely generated abelian group as a list of cyclic orders; `0` is `Z`,
/// trivial factors are dropped.
pub type GroupDescriptor = Vec<u64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Provenance {
    Computed,
    #[serde(rename = "PAPER_CITED")]
    Cited,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Differential {
    pub page: u8,
    pub source: (u32, u32),
    pub target: (u32, u32),
    pub rank: u32,
    pub provenance: Provenance,
    /// Reasoning behind a cited differential; empty for computed ones.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub justification: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageEntry {
    pub p: u32,
    pub q: u32,
    pub group: GroupDescriptor,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralPage {
    pub page_index: u8,
    pub m: usize,
    pub twisted: bool,
    #[serde(with = "entry_list")]
    pub entries: BTreeMap<(u32, u32), GroupDescriptor>,
    pub differentials: Vec<Differential>,
}

mod entry_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(map: &BTreeMap<(u32, u32), GroupDescriptor>, s: S) -> Result<S::Ok, S::Error> {
        let list: Vec<PageEntry> = map.iter().map(|(&(p, q), g)| PageEntry { p, q, group: g.clone() }).collect();
        list.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<(u32, u32), GroupDescriptor>, D::Error> {
        let list = Vec::<PageEntry>::deserialize(d)?;
        Ok(list.into_iter().map(|e| ((e.p, e.q), e.group)).collect())
    }
}

impl SpectralPage {
    pub fn entry(&self, p: u32, q: u32) -> &[u64] {
        self.entries.get(&(p, q)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn line(&self, total: u32) -> Vec<PageEntry> {
        (0..=total).map(|p| PageEntry { p, q: total - p, group: self.entry(p, total - p).to_vec() }).collect()
    }
}

/// `H_p(K(Z/m,1); Z)`.
pub fn integral_homology(m: usize, p: u32) -> GroupDescriptor {
    match p {
        0 => vec![0],
        p if p % 2 == 1 && m > 1 => vec![m as u64],
        _ => vec![],
    }
}

/// `H_p(K(Z/m,1); Z/2)` by universal coefficients.
pub fn mod2_homology(m: usize, p: u32) -> GroupDescriptor {
    if p == 0 || m % 2 == 0 {
        vec![2]
    } else {
        vec![]
    }
}

/// `H_p(K(Z/m,1); A)` for `A` given by a descriptor built from `Z` and `Z/2`.
fn homology_with(m: usize, p: u32, coefficients: &[u64]) -> GroupDescriptor {
    let mut out = Vec::new();
    for &c in coefficients {
        match c {
            0 => out.extend(integral_homology(m, p)),
            2 => out.extend(mod2_homology(m, p)),
            other => unreachable!("no Z/{other} in the coefficient table"),
        }
    }
    out
}

/// Rank over `Z/2` of `c ↦ Sq²c (+ w₂·c)` from `H^{p−2}` to `H^p`.
pub fn d2_rank(m: usize, p: u32, twisted: bool) -> Result<u32, AhssError> {
    if p < 2 {
        return Err(AhssError::DegreeTooSmall(p));
    }
    RingCase::for_modulus(m)?;
    let w = w2(m)?;
    let mut rank = 0;
    for c in cohomology_basis(m, p - 2)? {
        let mut image = steenrod_square(2, &c)?;
        if twisted {
            image = image.try_add(&w.try_mul(&c)?)?;
        }
        if !image.is_zero() {
            rank += 1;
        }
    }
    Ok(rank)
}

/// The `E²` page for `p + q ≤ 8` with every `d₂` that can be nonzero.
///
/// For odd `m` there is no nonzero `w₂`, so the twisted page equals the
/// untwisted one.
pub fn e2_page(m: usize, twisted: bool) -> Result<SpectralPage, AhssError> {
    if m < 2 {
        return Err(AhssError::ModulusTooSmall(m));
    }
    let mut entries = BTreeMap::new();
    for total in 0..=MAX_TOTAL_DEGREE {
        for p in 0..=total {
            let q = total - p;
            entries.insert((p, q), homology_with(m, p, SPIN_BORDISM[q as usize]));
        }
    }
    let mut differentials = Vec::new();
    if m % 2 == 0 {
        for p in 2..=MAX_TOTAL_DEGREE {
            // row 1 → row 2, dual to the operator on H^{p−2} → H^p
            if p + 1 <= MAX_TOTAL_DEGREE {
                differentials.push(Differential {
                    page: 2,
                    source: (p, 1),
                    target: (p - 2, 2),
                    rank: d2_rank(m, p, twisted)?,
                    provenance: Provenance::Computed,
                    justification: Vec::new(),
                });
            }
            // row 0 → row 1 factors through reduction H_p(Z) → H_p(Z/2),
            // onto for odd p and from zero for even p > 0
            if p % 2 == 1 {
                differentials.push(Differential {
                    page: 2,
                    source: (p, 0),
                    target: (p - 2, 1),
                    rank: d2_rank(m, p, twisted)?,
                    provenance: Provenance::Computed,
                    justification: Vec::new(),
                });
            }
        }
    }
    Ok(SpectralPage { page_index: 2, m, twisted, entries, differentials })
}

/// `E³` from `E²` and its `d₂` ranks. Only `Z/2` targets and `Z/2` or
/// `Z/m` sources occur, so each nonzero `d₂` kills its target and either
/// kills a `Z/2` source or halves a `Z/m` one.
pub fn e3_page(e2: &SpectralPage) -> SpectralPage {
    let mut entries = e2.entries.clone();
    for d in e2.differentials.iter().filter(|d| d.page == 2 && d.rank > 0) {
        if let Some(t) = entries.get_mut(&d.target) {
            t.clear();
        }
        if let Some(s) = entries.get_mut(&d.source) {
            match s.as_slice() {
                [2] => s.clear(),
                [n] if *n > 2 => *s = if *n / 2 > 1 { vec![*n / 2] } else { vec![] },
                _ => {}
            }
        }
    }
    SpectralPage { page_index: 3, m: e2.m, twisted: e2.twisted, entries, differentials: Vec::new() }
}

/// Whether restriction along `Z/2 → Z/m` is nonzero on `H^d(−; Z/2)`.
/// In the polynomial case it is an isomorphism; in the truncated case
/// `x ↦ 0` and `y ↦ x²`.
pub fn restriction_nonzero(m: usize, d: u32) -> Result<bool, AhssError> {
    let c = cohomology_basis(m, d)?.remove(0);
    Ok(match c.case {
        RingCase::Poly => !c.is_zero(),
        RingCase::Trunc => c.terms.iter().any(|t| t.x == 0),
    })
}

/// The comparison maps along `Z/2 → Z/m` used to move the `d₃` from `m = 2`
/// to general even `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    /// `E²_{4,2}(2) → E²_{4,2}(m)`, both `Z/2`.
    pub entry_4_2_iso: bool,
    /// `E²_{1,4}(2) → E²_{1,4}(m)`, `Z/2 → Z/m` sending `1` to `m/2`.
    pub entry_1_4_nonzero: bool,
}

pub fn comparison_from_two(m: usize) -> Result<Comparison, AhssError> {
    RingCase::for_modulus(m)?;
    // H_4(−; Z/2) is one-dimensional on both sides and dual to restriction
    let entry_4_2_iso = restriction_nonzero(m, 4)?;
    let image_of_one = (m / 2) as u64 % m as u64;
    Ok(Comparison { entry_4_2_iso, entry_1_4_nonzero: image_of_one != 0 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineEntry {
    pub p: u32,
    pub q: u32,
    pub e2: GroupDescriptor,
    pub e3: GroupDescriptor,
    pub final_group: GroupDescriptor,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportStep {
    pub description: String,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineReport {
    pub m: usize,
    pub twisted: bool,
    pub total_degree: u32,
    pub e2: SpectralPage,
    pub e3: SpectralPage,
    pub line: Vec<LineEntry>,
    /// Differentials beyond `d₂` that are taken as known.
    pub cited: Vec<Differential>,
    pub steps: Vec<ReportStep>,
    /// True when every line entry vanishes at the final page.
    pub conclusion_zero: bool,
    /// `Cited` if any step relied on cited data.
    pub provenance: Provenance,
    pub bibliography: Vec<String>,
}

const LINE: u32 = 6;

fn cited_d3(m: usize, comparison: Comparison) -> Differential {
    Differential {
        page: 3,
        source: (4, 2),
        target: (1, 4),
        rank: 1,
        provenance: Provenance::Cited,
        justification: vec![
            "for m = 2, the untwisted 6-line computes Ω^spin_6(RP^∞) ≅ Ω^{Pin⁻}_5 = 0".into(),
            "RP^7 is spin, so the edge homomorphism Ω^spin_7(RP^∞) → H_7(RP^∞; Z) is onto and d₃: E³_{7,0} → E³_{4,2} vanishes".into(),
            "E³_{4,2} = Z/2 must therefore die through d₃: E³_{4,2} → E³_{1,4}, which is injective for m = 2".into(),
            format!(
                "naturality along Z/2 → Z/{m}: the (4,2) comparison is {} and the (1,4) comparison is {} (computed), so d₃ is nontrivial for m = {m}",
                if comparison.entry_4_2_iso { "an isomorphism" } else { "not an isomorphism" },
                if comparison.entry_1_4_nonzero { "nonzero" } else { "zero" },
            ),
        ],
    }
}

fn describe(g: &[u64]) -> String {
    if g.is_empty() {
        return "0".into();
    }
    g.iter().map(|&n| if n == 0 { "Z".to_string() } else { format!("Z/{n}") }).collect::<Vec<_>>().join(" ⊕ ")
}

/// Decides the line `p + q = 6` of the spectral sequence.
pub fn spin_line_report(m: usize, twisted: bool) -> Result<LineReport, AhssError> {
    let e2 = e2_page(m, twisted)?;
    let e3 = e3_page(&e2);
    let mut steps = Vec::new();
    let mut cited = Vec::new();
    let mut line = Vec::new();

    let nonzero: Vec<PageEntry> = e2.line(LINE).into_iter().filter(|e| !e.group.is_empty()).collect();
    steps.push(ReportStep {
        description: format!(
            "E² on the line: {}",
            if nonzero.is_empty() {
                "all entries zero".to_string()
            } else {
                nonzero.iter().map(|e| format!("E²_{{{},{}}} = {}", e.p, e.q, describe(&e.group))).collect::<Vec<_>>().join(", ")
            }
        ),
        provenance: Provenance::Computed,
    });

    for entry in e2.line(LINE) {
        let (p, q) = (entry.p, entry.q);
        let e3_group = e3.entry(p, q).to_vec();
        if !entry.group.is_empty() {
            for d in e2.differentials.iter().filter(|d| d.rank > 0 && (d.source == (p, q) || d.target == (p, q))) {
                steps.push(ReportStep {
                    description: format!(
                        "d₂: E²_{{{},{}}} → E²_{{{},{}}} has rank {}, so E³_{{{p},{q}}} = {}",
                        d.source.0, d.source.1, d.target.0, d.target.1, d.rank, describe(&e3_group)
                    ),
                    provenance: Provenance::Computed,
                });
            }
        }
        let mut final_group = e3_group.clone();
        let mut provenance = Provenance::Computed;
        if (p, q) == (4, 2) && !e3_group.is_empty() {
            let comparison = comparison_from_two(m)?;
            steps.push(ReportStep {
                description: format!(
                    "comparison along Z/2 → Z/{m}: (4,2) isomorphism = {}, (1,4) nonzero = {}",
                    comparison.entry_4_2_iso, comparison.entry_1_4_nonzero
                ),
                provenance: Provenance::Computed,
            });
            if !(comparison.entry_4_2_iso && comparison.entry_1_4_nonzero) {
                return Err(AhssError::InvariantViolated("comparison maps do not transport d₃".into()));
            }
            let d3 = cited_d3(m, comparison);
            steps.push(ReportStep {
                description: "d₃: E³_{4,2} → E³_{1,4} is nontrivial, so E⁴_{4,2} = 0".into(),
                provenance: Provenance::Cited,
            });
            cited.push(d3);
            final_group.clear();
            provenance = Provenance::Cited;
        }
        line.push(LineEntry { p, q, e2: entry.group, e3: e3_group, final_group, provenance });
    }

    let conclusion_zero = line.iter().all(|e| e.final_group.is_empty());
    steps.push(ReportStep {
        description: if conclusion_zero {
            "every entry on the line vanishes, so the bordism group is 0".into()
        } else {
            "some entry on the line survives".into()
        },
        provenance: if cited.is_empty() { Provenance::Computed } else { Provenance::Cited },
    });
    let provenance = if cited.is_empty() { Provenance::Computed } else { Provenance::Cited };
    let bibliography = if cited.is_empty() {
        Vec::new()
    } else {
        vec![
            "Ω^{Pin⁻}_5 = 0 (Kirby–Taylor, Pin structures on low-dimensional manifolds)".into(),
            "Ω^spin_q for q ≤ 8 (Milnor; Anderson–Brown–Peterson)".into(),
        ]
    };
    Ok(LineReport { m, twisted, total_degree: LINE, e2, e3, line, cited, steps, conclusion_zero, provenance, bibliography })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d2_anchor_ranks() {
        assert_eq!(d2_rank(2, 5, false).unwrap(), 1);
        assert_eq!(d2_rank(2, 6, false).unwrap(), 0);
        assert_eq!(d2_rank(4, 6, true).unwrap(), 1);
        assert_eq!(d2_rank(4, 7, true).unwrap(), 1);
        assert!(matches!(d2_rank(3, 5, false), Err(AhssError::OddModulus(3))));
    }

    #[test]
    fn e2_line_entries() {
        let odd = e2_page(5, false).unwrap();
        assert!(odd.line(6).iter().filter(|e| e.p > 0).all(|e| e.group.is_empty()));
        let even = e2_page(6, false).unwrap();
        assert_eq!(even.entry(4, 2), &[2]);
        assert_eq!(even.entry(5, 1), &[2]);
        assert_eq!(even.entry(1, 4), &[6]);
        assert_eq!(even.entry(0, 0), &[0]);
        assert_eq!(even.entry(0, 8), &[0, 0]);
        assert_eq!(even.entries.len(), 45);
    }

    #[test]
    fn untwisted_two_survives_d2() {
        let r = spin_line_report(2, false).unwrap();
        let e = r.line.iter().find(|e| (e.p, e.q) == (4, 2)).unwrap();
        assert_eq!(e.e3, vec![2]);
        assert!(e.final_group.is_empty());
        assert_eq!(r.provenance, Provenance::Cited);
        assert_eq!(r.cited.len(), 1);
        assert!(r.conclusion_zero);
        assert!(r.line.iter().find(|e| (e.p, e.q) == (5, 1)).unwrap().e3.is_empty());
    }

    #[test]
    fn twisted_and_odd_are_computed() {
        for (m, twisted) in [(6, true), (4, true), (3, false), (3, true)] {
            let r = spin_line_report(m, twisted).unwrap();
            assert!(r.conclusion_zero);
            assert_eq!(r.provenance, Provenance::Computed);
            assert!(r.cited.is_empty());
            assert!(r.steps.iter().all(|s| s.provenance == Provenance::Computed));
        }
    }

    #[test]
    fn comparison_maps() {
        for m in [2usize, 4, 6, 8, 10, 12] {
            let c = comparison_from_two(m).unwrap();
            assert!(c.entry_4_2_iso && c.entry_1_4_nonzero, "m = {m}");
        }
        assert!(!restriction_nonzero(4, 1).unwrap());
        assert!(restriction_nonzero(4, 2).unwrap());
    }

    #[test]
    fn halving_row_zero() {
        let e3 = e3_page(&e2_page(6, true).unwrap());
        assert_eq!(e3.entry(7, 0), &[3]);
        let e3 = e3_page(&e2_page(2, true).unwrap());
        assert!(e3.entry(7, 0).is_empty());
    }
}
