//! Mod-2 cohomology of cyclic groups and the Atiyah–Hirzebruch bookkeeping
//! for spin bordism of `K(Z/m, 1)` in total degree 6.

mod cohomology;
mod page;

pub use cohomology::{cohomology_basis, steenrod_square, w2, CohomologyClass, Monomial, RingCase};
pub use page::{
    comparison_from_two, d2_rank, e2_page, e3_page, integral_homology, mod2_homology, restriction_nonzero,
    spin_line_report, Comparison, Differential, GroupDescriptor, LineEntry, LineReport, PageEntry, Provenance,
    ReportStep, SpectralPage, MAX_TOTAL_DEGREE, SPIN_BORDISM,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AhssError {
    #[error("modulus {0} is odd; the cohomology ring is trivial in positive degrees")]
    OddModulus(usize),
    #[error("modulus {0} is too small")]
    ModulusTooSmall(usize),
    #[error("d₂ needs p ≥ 2, got {0}")]
    DegreeTooSmall(u32),
    #[error("cannot parse monomial {0:?}")]
    BadMonomial(String),
    #[error("classes over different moduli ({left} vs {right})")]
    ModulusMismatch { left: usize, right: usize },
    #[error("classes of different degrees ({left} vs {right})")]
    DegreeMismatch { left: u32, right: u32 },
    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),
}
