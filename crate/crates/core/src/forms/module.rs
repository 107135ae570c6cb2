//! Based hyperbolic modules `H^r_ε(Λ)` with a quadratic refinement.

use serde::{Deserialize, Serialize};

use super::matrix::{RingMatrix, RingVector};
use super::FormError;
use crate::ring::{
    ideal_contains, is_unit, param_reduce, FormParameterKind, GroupRingElement, ParameterClass,
};

/// The sign of the form: `λ(y, x) = ε·λ(x, y)‾`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `ε·x`
    pub fn apply(self, x: &GroupRingElement) -> GroupRingElement {
        match self {
            Sign::Plus => x.clone(),
            Sign::Minus => -x,
        }
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;
    fn try_from(v: i8) -> Result<Self, String> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(format!("sign must be +1 or -1, got {v}")),
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.as_i64() as i8
    }
}

/// Which elementary isometry [`QuadraticModule::transvection`] builds. Column
/// images, with `p` the parameter:
///
/// * `Mixed { e: i, f: j }`: `e_j ↦ e_j + p·e_i`, `f_i ↦ f_i − p̄·f_j` (needs `i ≠ j`)
/// * `Upper { e: i, f: j }`: `f_i ↦ f_i + p·e_j`, `f_j ↦ f_j − ε p̄·e_i`
/// * `Lower { e: i, f: j }`: `e_i ↦ e_i + p·f_j`, `e_j ↦ e_j − ε p̄·f_i`
///
/// For `Upper`/`Lower` with `i = j` only the first update is applied and the
/// parameter must satisfy `p = −ε p̄` with `[p] = 0` in the parameter quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "lowercase")]
pub enum TransvectionBase {
    Mixed { e: usize, f: usize },
    Upper { e: usize, f: usize },
    Lower { e: usize, f: usize },
}

/// `H^r_ε(Λ)` on the basis `e₁…e_r, f₁…f_r`, with `μ` valued in `Λ/Γ` for
/// the form parameter `Γ` named by `kind`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadraticModule {
    pub m: usize,
    pub rank: usize,
    pub sign: Sign,
    pub kind: FormParameterKind,
}

impl QuadraticModule {
    /// The parameter must contain every `x − ε x̄`, which rules out
    /// `(+1, TILDE)`, `(+1, PLUS)` and `(−1, MINUS)`.
    pub fn new(m: usize, rank: usize, sign: Sign, kind: FormParameterKind) -> Result<Self, FormError> {
        if m < 2 {
            return Err(crate::ring::RingError::InvalidModulus(m).into());
        }
        if rank == 0 {
            return Err(FormError::DimensionMismatch { expected: 1, got: 0 });
        }
        let ok = matches!(
            (sign, kind),
            (Sign::Minus, FormParameterKind::Tilde | FormParameterKind::Plus) | (Sign::Plus, FormParameterKind::Minus)
        );
        if !ok {
            return Err(FormError::IncompatibleParameter { sign: sign.as_i64(), kind });
        }
        Ok(Self { m, rank, sign, kind })
    }

    /// `H^r_−(Λ)` with the `⟨1, x + x̄⟩` parameter.
    pub fn skew_tilde(m: usize, rank: usize) -> Self {
        Self::new(m, rank, Sign::Minus, FormParameterKind::Tilde).expect("valid")
    }

    /// `H^r_+(Λ)` with the `⟨x − x̄⟩` parameter.
    pub fn symmetric(m: usize, rank: usize) -> Self {
        Self::new(m, rank, Sign::Plus, FormParameterKind::Minus).expect("valid")
    }

    pub fn dim(&self) -> usize {
        2 * self.rank
    }

    pub fn e(&self, i: usize) -> RingVector {
        RingVector::unit(self.m, self.dim(), i)
    }

    pub fn f(&self, i: usize) -> RingVector {
        RingVector::unit(self.m, self.dim(), self.rank + i)
    }

    /// Builds `Σ aᵢ eᵢ + bᵢ fᵢ`.
    pub fn vector(&self, a: &[GroupRingElement], b: &[GroupRingElement]) -> Result<RingVector, FormError> {
        if a.len() != self.rank || b.len() != self.rank {
            return Err(FormError::DimensionMismatch { expected: self.rank, got: a.len().min(b.len()) });
        }
        let v = RingVector::new(a.iter().chain(b).cloned().collect())?;
        self.check_vector(&v)?;
        Ok(v)
    }

    pub fn zero_class(&self) -> ParameterClass {
        ParameterClass::zero(self.m, self.kind)
    }

    /// Class of `x` in the parameter quotient.
    pub fn class(&self, x: &GroupRingElement) -> ParameterClass {
        param_reduce(x, self.kind)
    }

    pub(crate) fn check_vector(&self, v: &RingVector) -> Result<(), FormError> {
        if v.modulus() != self.m {
            return Err(FormError::ModulusMismatch { left: self.m, right: v.modulus() });
        }
        if v.len() != self.dim() {
            return Err(FormError::DimensionMismatch { expected: self.dim(), got: v.len() });
        }
        Ok(())
    }

    fn check_matrix(&self, mat: &RingMatrix) -> Result<(), FormError> {
        if mat.modulus() != self.m {
            return Err(FormError::ModulusMismatch { left: self.m, right: mat.modulus() });
        }
        if mat.size() != self.dim() {
            return Err(FormError::DimensionMismatch { expected: self.dim(), got: mat.size() });
        }
        Ok(())
    }

    /// `λ(x, y) = Σ aᵢ d̄ᵢ + ε bᵢ c̄ᵢ` for `x = Σ aᵢeᵢ + bᵢfᵢ`, `y = Σ cᵢeᵢ + dᵢfᵢ`.
    pub fn lambda(&self, x: &RingVector, y: &RingVector) -> Result<GroupRingElement, FormError> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        let r = self.rank;
        let mut ef = GroupRingElement::zero(self.m);
        let mut fe = GroupRingElement::zero(self.m);
        for i in 0..r {
            ef = &ef + &(x.coord(i) * &y.coord(r + i).involution());
            fe = &fe + &(x.coord(r + i) * &y.coord(i).involution());
        }
        Ok(&ef + &self.sign.apply(&fe))
    }

    /// The lift `Σ aᵢ b̄ᵢ` of `μ(x)`.
    pub fn mu_lift(&self, x: &RingVector) -> Result<GroupRingElement, FormError> {
        self.check_vector(x)?;
        let r = self.rank;
        Ok((0..r).fold(GroupRingElement::zero(self.m), |acc, i| {
            &acc + &(x.coord(i) * &x.coord(r + i).involution())
        }))
    }

    /// `μ(x) = [Σ aᵢ b̄ᵢ]`.
    pub fn mu(&self, x: &RingVector) -> Result<ParameterClass, FormError> {
        Ok(self.class(&self.mu_lift(x)?))
    }

    /// Whether the coordinates of `x` generate the unit ideal.
    pub fn is_primitive(&self, x: &RingVector) -> Result<bool, FormError> {
        self.check_vector(x)?;
        if x.is_zero() {
            return Err(FormError::ZeroVector);
        }
        Ok(ideal_contains(x.coords(), &GroupRingElement::one(self.m)))
    }

    /// The Gram matrix `G` with `λ(x, y) = xᵀ G ȳ`.
    pub fn gram(&self) -> RingMatrix {
        let n = self.dim();
        let mut g = RingMatrix::identity(self.m, n);
        let eps = GroupRingElement::constant(self.m, self.sign.as_i64());
        for i in 0..n {
            g.set(i, i, GroupRingElement::zero(self.m));
        }
        for i in 0..self.rank {
            g.set(i, self.rank + i, GroupRingElement::one(self.m));
            g.set(self.rank + i, i, eps.clone());
        }
        g
    }

    /// Whether `M` preserves `λ` (as `M G M† = G`) and `μ` on every basis vector.
    pub fn isometry_check(&self, mat: &RingMatrix) -> Result<bool, FormError> {
        self.check_matrix(mat)?;
        let g = self.gram();
        if mat.try_mul(&g)?.try_mul(&mat.dagger())? != g {
            return Ok(false);
        }
        for j in 0..self.dim() {
            if !self.mu(&mat.column(j))?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Inverse of an isometry, `M⁻¹ = ε G M† G`.
    pub fn isometry_inverse(&self, mat: &RingMatrix) -> Result<RingMatrix, FormError> {
        self.check_matrix(mat)?;
        let g = self.gram();
        let inv = g.try_mul(&mat.dagger())?.try_mul(&g)?;
        Ok(match self.sign {
            Sign::Plus => inv,
            Sign::Minus => {
                let rows = inv.rows().iter().map(|r| r.iter().map(|x| -x).collect()).collect();
                RingMatrix::from_rows(rows)?
            }
        })
    }

    fn check_index(&self, i: usize) -> Result<(), FormError> {
        if i >= self.rank {
            return Err(FormError::BadIndex { index: i, size: self.rank });
        }
        Ok(())
    }

    /// The elementary isometry named by `base` with parameter `p`.
    pub fn transvection(&self, base: TransvectionBase, p: &GroupRingElement) -> Result<RingMatrix, FormError> {
        if p.modulus() != self.m {
            return Err(FormError::ModulusMismatch { left: self.m, right: p.modulus() });
        }
        let r = self.rank;
        let mut mat = RingMatrix::identity(self.m, self.dim());
        let bar = p.involution();
        let eps_bar = -&self.sign.apply(&bar);
        match base {
            TransvectionBase::Mixed { e: i, f: j } => {
                self.check_index(i)?;
                self.check_index(j)?;
                if i == j {
                    return Err(FormError::BadIndex { index: i, size: r });
                }
                mat.set(i, j, p.clone());
                mat.set(r + j, r + i, -&bar);
            }
            TransvectionBase::Upper { e: i, f: j } | TransvectionBase::Lower { e: i, f: j } => {
                self.check_index(i)?;
                self.check_index(j)?;
                let upper = matches!(base, TransvectionBase::Upper { .. });
                if i == j {
                    self.check_rank_one_parameter(p, upper)?;
                }
                // (row, col) of the two updates
                let (first, second) = if upper {
                    ((j, r + i), (i, r + j))
                } else {
                    ((r + j, i), (r + i, j))
                };
                mat.set(first.0, first.1, p.clone());
                if i != j {
                    mat.set(second.0, second.1, eps_bar);
                }
            }
        }
        Ok(mat)
    }

    fn check_rank_one_parameter(&self, p: &GroupRingElement, upper: bool) -> Result<(), FormError> {
        if *p != -&self.sign.apply(&p.involution()) {
            return Err(FormError::InvalidParameter(format!("{p} is not ε-antisymmetric")));
        }
        let lift = if upper { p.clone() } else { p.involution() };
        if !self.class(&lift).is_zero() {
            return Err(FormError::InvalidParameter(format!("[{p}] is nonzero in the parameter quotient")));
        }
        Ok(())
    }

    /// `e_i ↦ w·e_i`, `f_i ↦ w̄⁻¹·f_i` for a unit `w`.
    pub fn unit_scaling(&self, i: usize, w: &GroupRingElement) -> Result<RingMatrix, FormError> {
        self.check_index(i)?;
        let inv = is_unit(w).ok_or_else(|| FormError::InvalidParameter(format!("{w} is not a unit")))?;
        let mut mat = RingMatrix::identity(self.m, self.dim());
        mat.set(i, i, w.clone());
        mat.set(self.rank + i, self.rank + i, inv.involution());
        Ok(mat)
    }

    /// `e_i ↦ f_i`, `f_i ↦ ε·e_i`.
    pub fn hyperbolic_swap(&self, i: usize) -> Result<RingMatrix, FormError> {
        self.check_index(i)?;
        let mut mat = RingMatrix::identity(self.m, self.dim());
        let r = self.rank;
        mat.set(i, i, GroupRingElement::zero(self.m));
        mat.set(r + i, r + i, GroupRingElement::zero(self.m));
        mat.set(r + i, i, GroupRingElement::one(self.m));
        mat.set(i, r + i, GroupRingElement::constant(self.m, self.sign.as_i64()));
        Ok(mat)
    }
}
