//! The three complement constructions.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::rank2::{rank2_vector_isometry, SearchBudget};
use super::{Branch, EmbeddingSpec, LagrangianError};
use crate::forms::{
    verify_lagrangian_complement, ComplementCertificate, QuadraticModule, RingMatrix, RingVector,
    TransvectionBase,
};
use crate::ring::{
    exact_divide, ideal_normalize, solve_combination, GroupRingElement, NormData, RingError,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedIsometry {
    pub name: String,
    pub matrix: RingMatrix,
}

/// Audit trail of one solver run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverTrace {
    pub spec: EmbeddingSpec,
    pub module: QuadraticModule,
    /// `{v₁, v₂}` as given.
    pub input_s: Vec<RingVector>,
    /// `{v₁, v₂}` after the even-m replacement `v₂ ↦ v₁ + v₂`, if applied.
    pub working_s: Vec<RingVector>,
    pub replaced: bool,
    /// `(r, k, t)` with `r a₂ + k s + t b₂ = −a₁` (even-m only).
    pub coefficients: Option<[GroupRingElement; 3]>,
    /// The integer `h` with `e₁`-coefficient `h·s` after `R∘T` (even-m only).
    pub h: Option<i64>,
    /// Applied in order to `working_s`.
    pub steps: Vec<NamedIsometry>,
    pub norm: Option<NormData>,
    /// The integer `a` or ring element `a` placed in the standard complement.
    pub complement_parameter: GroupRingElement,
    pub normalized_s: Vec<RingVector>,
    pub normalized_u: Vec<RingVector>,
    /// The complement of `input_s`.
    pub u: Vec<RingVector>,
    pub certificate: ComplementCertificate,
}

impl SolverTrace {
    /// Product of the recorded steps, first step rightmost.
    pub fn composite(&self) -> Result<RingMatrix, LagrangianError> {
        let mut acc = RingMatrix::identity(self.module.m, self.module.dim());
        for s in &self.steps {
            acc = s.matrix.try_mul(&acc)?;
        }
        Ok(acc)
    }

    /// Every step is an isometry and their product maps `working_s` to
    /// `normalized_s`.
    pub fn replay(&self) -> Result<bool, LagrangianError> {
        for s in &self.steps {
            if !self.module.isometry_check(&s.matrix)? {
                return Ok(false);
            }
        }
        let a = self.composite()?;
        for (w, n) in self.working_s.iter().zip(&self.normalized_s) {
            if a.apply(w)? != *n {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Dispatches on `spec.branch`.
pub fn solve(spec: &EmbeddingSpec, budget: &SearchBudget) -> Result<SolverTrace, LagrangianError> {
    match spec.branch {
        Branch::OddMSkew => solve_odd_m(spec, budget),
        Branch::EvenMSkew => solve_even_m(spec, budget),
        Branch::EvenNSym => solve_even_n(spec),
    }
}

fn check_branch(spec: &EmbeddingSpec, branch: Branch) -> Result<(), LagrangianError> {
    if spec.branch != branch {
        return Err(LagrangianError::PreconditionFailed(format!("spec is for branch {}, not {branch}", spec.branch)));
    }
    if !branch.accepts(spec.m) {
        return Err(LagrangianError::PreconditionFailed(format!("m = {} has the wrong parity for {branch}", spec.m)));
    }
    Ok(())
}

fn check_primitive_tail(spec: &EmbeddingSpec) -> Result<(), LagrangianError> {
    let q = spec.module();
    let tail = spec.tail();
    if tail.is_zero() || !q.is_primitive(&tail)? {
        return Err(LagrangianError::PreconditionFailed("a₂e₂ + c·f₁ + b₂f₂ is not primitive".into()));
    }
    Ok(())
}

fn check_isotropic(q: &QuadraticModule, v2: &RingVector) -> Result<(), LagrangianError> {
    if !q.lambda(v2, v2)?.is_zero() {
        return Err(LagrangianError::PreconditionFailed("λ(v₂, v₂) ≠ 0".into()));
    }
    Ok(())
}

fn vec4(a1: &GroupRingElement, a2: &GroupRingElement, c: &GroupRingElement, b2: &GroupRingElement) -> RingVector {
    RingVector::new(vec![a1.clone(), a2.clone(), c.clone(), b2.clone()]).expect("uniform modulus")
}

fn divide_by(x: &GroupRingElement, d: &GroupRingElement) -> Result<GroupRingElement, LagrangianError> {
    exact_divide(x, d)
        .map(|q| q.quotient)
        .map_err(|e| LagrangianError::NotDivisible(format!("{x} by {d}: {e}")))
}

/// Moves `(α, β)` to `(target_e, s)` in the `(e₂, f₂)` block.
fn block_isometry(
    q: &QuadraticModule,
    alpha: &GroupRingElement,
    beta: &GroupRingElement,
    target_e: &GroupRingElement,
    budget: &SearchBudget,
) -> Result<RingMatrix, LagrangianError> {
    let q1 = QuadraticModule::new(q.m, 1, q.sign, q.kind)?;
    let from = q1.vector(&[alpha.clone()], &[beta.clone()])?;
    let to = q1.vector(&[target_e.clone()], &[GroupRingElement::norm_element(q.m)])?;
    let block = rank2_vector_isometry(&q1, &from, &to, budget)?;
    Ok(block.embed(4, &[1, 3])?)
}

/// `{−a·e₂ + f₁, −a·e₁ + f₂}`
fn skew_complement(q: &QuadraticModule, a: i64) -> Vec<RingVector> {
    let m = q.m;
    let na = GroupRingElement::constant(m, -a);
    let z = GroupRingElement::zero(m);
    let one = GroupRingElement::one(m);
    vec![vec4(&z, &na, &one, &z), vec4(&na, &z, &z, &one)]
}

struct Finished {
    steps: Vec<NamedIsometry>,
    normalized_s: Vec<RingVector>,
    normalized_u: Vec<RingVector>,
}

/// Pulls the normalized complement back and certifies it against `input_s`.
fn finish(
    spec: &EmbeddingSpec,
    q: &QuadraticModule,
    working_s: Vec<RingVector>,
    done: Finished,
) -> Result<(Vec<RingVector>, ComplementCertificate, Vec<RingVector>), LagrangianError> {
    let mut composite = RingMatrix::identity(q.m, 4);
    for s in &done.steps {
        composite = s.matrix.try_mul(&composite)?;
    }
    for (w, n) in working_s.iter().zip(&done.normalized_s) {
        if composite.apply(w)? != *n {
            return Err(LagrangianError::InvariantViolated("steps do not reach the normalized position".into()));
        }
    }
    let back = q.isometry_inverse(&composite)?;
    let u = done.normalized_u.iter().map(|w| back.apply(w)).collect::<Result<Vec<_>, _>>()?;
    let input_s = vec![spec.v1(), spec.v2()];
    let certificate = verify_lagrangian_complement(q, &input_s, &u)?;
    Ok((u, certificate, working_s))
}

/// Skew-hermitian case with `m` odd and `μ(v₂) = 0`.
pub fn solve_odd_m(spec: &EmbeddingSpec, budget: &SearchBudget) -> Result<SolverTrace, LagrangianError> {
    check_branch(spec, Branch::OddMSkew)?;
    let q = spec.module();
    let m = q.m;
    let (v1, v2) = (spec.v1(), spec.v2());
    check_primitive_tail(spec)?;
    check_isotropic(&q, &v2)?;
    if !q.mu(&v2)?.is_zero() {
        return Err(LagrangianError::PreconditionFailed("μ(v₂) ≠ 0".into()));
    }
    let norm = ideal_normalize(&[spec.a2.clone(), spec.b2.clone()]).map_err(LagrangianError::NormalizationFailed)?;
    let alpha = divide_by(&spec.a2, &norm.u)?;
    let beta = divide_by(&spec.b2, &norm.u)?;
    let n = block_isometry(&q, &alpha, &beta, &norm.v, budget)?;
    let s = GroupRingElement::norm_element(m);
    let normalized_v2 = vec4(&spec.a1, &(&norm.u * &norm.v), &s, &(&norm.u * &s));
    let done = Finished {
        steps: vec![NamedIsometry { name: "N".into(), matrix: n }],
        normalized_s: vec![v1.clone(), normalized_v2],
        normalized_u: skew_complement(&q, norm.a),
    };
    let normalized_s = done.normalized_s.clone();
    let normalized_u = done.normalized_u.clone();
    let steps = done.steps.clone();
    let (u, certificate, working_s) = finish(spec, &q, vec![v1, v2], done)?;
    Ok(SolverTrace {
        spec: spec.clone(),
        module: q,
        input_s: working_s.clone(),
        working_s,
        replaced: false,
        coefficients: None,
        h: None,
        steps,
        complement_parameter: GroupRingElement::constant(m, norm.a),
        norm: Some(norm),
        normalized_s,
        normalized_u,
        u,
        certificate,
    })
}

/// Skew-hermitian case with `m` even. Accepts `μ(v₂) = 0`, in which case
/// `v₂` is replaced by `v₁ + v₂`, or `μ(v₂) = [g^{m/2}]`.
pub fn solve_even_m(spec: &EmbeddingSpec, budget: &SearchBudget) -> Result<SolverTrace, LagrangianError> {
    check_branch(spec, Branch::EvenMSkew)?;
    let q = spec.module();
    let m = q.m;
    let s = GroupRingElement::norm_element(m);
    let half = q.class(&GroupRingElement::monomial(m, m as i64 / 2, 1));
    let (v1, v2_in) = (spec.v1(), spec.v2());
    check_primitive_tail(spec)?;
    check_isotropic(&q, &v2_in)?;
    let mu = q.mu(&v2_in)?;
    let replaced = if mu.is_zero() {
        true
    } else if mu == half {
        false
    } else {
        return Err(LagrangianError::PreconditionFailed(format!("μ(v₂) = {} is neither 0 nor [g^m']", mu.representative())));
    };
    let a1 = if replaced { &spec.a1 + &GroupRingElement::one(m) } else { spec.a1.clone() };
    let v2 = vec4(&a1, &spec.a2, &s, &spec.b2);

    let rkt = solve_combination(&[spec.a2.clone(), s.clone(), spec.b2.clone()], &-&a1)?
        .ok_or_else(|| LagrangianError::PreconditionFailed("r a₂ + k s + t b₂ = −a₁ has no solution".into()))?;
    let (r, t) = (&rkt[0], &rkt[2]);
    let t_mat = q.transvection(TransvectionBase::Upper { e: 1, f: 0 }, t)?;
    let r_mat = q.transvection(TransvectionBase::Mixed { e: 0, f: 1 }, r)?;
    let moved = r_mat.apply(&t_mat.apply(&v2)?)?;
    let e1 = moved.coord(0);
    let h_big = e1.coeff(0).clone();
    if *e1 != s.scale(&h_big) {
        return Err(LagrangianError::InvariantViolated(format!("e₁-coefficient {e1} is not a multiple of s")));
    }
    let h = h_big.to_i64().ok_or(RingError::Overflow)?;
    let (a2, b2) = (moved.coord(1).clone(), moved.coord(3).clone());
    let norm = ideal_normalize(&[a2.clone(), b2.clone()]).map_err(LagrangianError::NormalizationFailed)?;
    let conv = norm.unit_convention();
    if conv.b % 2 == 0 {
        return Err(LagrangianError::InvariantViolated(format!("ε(v) = {} is even", conv.b)));
    }
    let alpha = divide_by(&a2, &norm.u)?;
    let beta = divide_by(&b2, &norm.u)?;
    let q1 = QuadraticModule::new(m, 1, q.sign, q.kind)?;
    let block_mu = q1.mu(&q1.vector(&[alpha.clone()], &[beta.clone()])?)?;
    if block_mu != half {
        return Err(LagrangianError::ParityObstruction { found: block_mu.representative().to_string() });
    }
    let n = block_isometry(&q, &alpha, &beta, &conv.v, budget)?;
    let normalized_v2 = vec4(&s.scale(&h_big), &(&norm.u * &conv.v), &s, &(&norm.u * &s));
    let done = Finished {
        steps: vec![
            NamedIsometry { name: "T".into(), matrix: t_mat },
            NamedIsometry { name: "R".into(), matrix: r_mat },
            NamedIsometry { name: "N".into(), matrix: n },
        ],
        normalized_s: vec![v1.clone(), normalized_v2],
        normalized_u: skew_complement(&q, conv.a),
    };
    let normalized_s = done.normalized_s.clone();
    let normalized_u = done.normalized_u.clone();
    let steps = done.steps.clone();
    let (u, certificate, working_s) = finish(spec, &q, vec![v1.clone(), v2], done)?;
    Ok(SolverTrace {
        spec: spec.clone(),
        module: q,
        input_s: vec![v1, spec.v2()],
        working_s,
        replaced,
        coefficients: Some([rkt[0].clone(), rkt[1].clone(), rkt[2].clone()]),
        h: Some(h),
        steps,
        complement_parameter: GroupRingElement::constant(m, conv.a),
        norm: Some(norm),
        normalized_s,
        normalized_u,
        u,
        certificate,
    })
}

/// Symmetric case with `f₁`-coefficient `1 − g` and `ε(λ(v₂, v₂)) = 0`.
pub fn solve_even_n(spec: &EmbeddingSpec) -> Result<SolverTrace, LagrangianError> {
    check_branch(spec, Branch::EvenNSym)?;
    let q = spec.module();
    let m = q.m;
    let (v1, v2) = (spec.v1(), spec.v2());
    let (ea, eb) = (spec.a2.augmentation(), spec.b2.augmentation());
    let unit = |x: &BigInt| *x == BigInt::from(1) || *x == BigInt::from(-1);
    if !unit(&ea) && !unit(&eb) {
        return Err(LagrangianError::AugmentationObstruction { a2: ea.to_string(), b2: eb.to_string() });
    }
    if !q.lambda(&v2, &v2)?.augmentation().is_zero() {
        return Err(LagrangianError::PreconditionFailed("ε(λ(v₂, v₂)) ≠ 0".into()));
    }
    check_primitive_tail(spec)?;

    let mut steps = Vec::new();
    let mut current = v2.clone();
    if !unit(&ea) {
        let sw = q.hyperbolic_swap(1)?;
        current = sw.apply(&current)?;
        steps.push(NamedIsometry { name: "swap e₂ f₂".into(), matrix: sw });
    }
    if current.coord(1).augmentation() == BigInt::from(-1) {
        let neg = q.unit_scaling(1, &GroupRingElement::constant(m, -1))?;
        current = neg.apply(&current)?;
        steps.push(NamedIsometry { name: "negate e₂ f₂".into(), matrix: neg });
    }
    let one_minus_g = &GroupRingElement::one(m) - &GroupRingElement::gen(m);
    let a = divide_by(&(current.coord(1) - &GroupRingElement::one(m)), &one_minus_g)?;
    let z = GroupRingElement::zero(m);
    let one = GroupRingElement::one(m);
    let normalized_u = vec![vec4(&z, &a, &one, &z), vec4(&-&a.involution(), &z, &z, &one)];
    let done = Finished {
        steps: steps.clone(),
        normalized_s: vec![v1.clone(), current],
        normalized_u: normalized_u.clone(),
    };
    let normalized_s = done.normalized_s.clone();
    let (u, certificate, working_s) = finish(spec, &q, vec![v1, v2], done)?;
    Ok(SolverTrace {
        spec: spec.clone(),
        module: q,
        input_s: working_s.clone(),
        working_s,
        replaced: false,
        coefficients: None,
        h: None,
        steps,
        norm: None,
        complement_parameter: a,
        normalized_s,
        normalized_u,
        u,
        certificate,
    })
}
