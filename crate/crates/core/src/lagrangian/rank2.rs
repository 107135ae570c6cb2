//! Isometries of a single hyperbolic plane moving one primitive vector to
//! another.

use serde::{Deserialize, Serialize};

use super::LagrangianError;
use crate::forms::{QuadraticModule, RingMatrix, RingVector, Sign, TransvectionBase};
use crate::ring::{exact_divide, is_unit, solve_combination, GroupRingElement};

/// Limits for the correction search in [`rank2_vector_isometry`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Maximum number of basis terms in a correction.
    pub word_length: usize,
    /// Coefficient bound; `None` means `2m`.
    pub height: Option<i64>,
    pub max_attempts: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self { word_length: 4, height: None, max_attempts: 100_000 }
    }
}

impl SearchBudget {
    pub fn height_for(&self, m: usize) -> i64 {
        self.height.unwrap_or(2 * m as i64)
    }
}

/// Elements `w` with `w = −ε w̄`; adding `w·x` to a partner `y` of an
/// isotropic `x` keeps `λ(x, y) = 1` and `λ(y, y) = 0`.
fn correction_basis(q: &QuadraticModule) -> Vec<GroupRingElement> {
    let m = q.m;
    let mut basis = Vec::new();
    if q.sign == Sign::Minus {
        basis.push(GroupRingElement::one(m));
        if m % 2 == 0 {
            basis.push(GroupRingElement::monomial(m, m as i64 / 2, 1));
        }
    }
    for i in 1..=((m - 1) / 2) as i64 {
        let a = GroupRingElement::monomial(m, i, 1);
        let b = GroupRingElement::monomial(m, -i, 1);
        basis.push(match q.sign {
            Sign::Minus => &a + &b,
            Sign::Plus => &a - &b,
        });
    }
    basis
}

/// Visits combinations of `basis` with at most `max_support` nonzero
/// coefficients, by increasing coefficient radius up to `height`. Stops when
/// `visit` returns true or after `max_attempts` calls.
fn search_combinations(
    basis: &[GroupRingElement],
    m: usize,
    budget: &SearchBudget,
    attempts: &mut usize,
    visit: &mut dyn FnMut(&GroupRingElement) -> bool,
) -> bool {
    fn rec(
        basis: &[GroupRingElement],
        idx: usize,
        acc: GroupRingElement,
        support_left: usize,
        radius: i64,
        hit: bool,
        attempts: &mut usize,
        max_attempts: usize,
        visit: &mut dyn FnMut(&GroupRingElement) -> bool,
    ) -> bool {
        if *attempts >= max_attempts {
            return false;
        }
        if idx == basis.len() {
            if !hit {
                return false;
            }
            *attempts += 1;
            return visit(&acc);
        }
        if rec(basis, idx + 1, acc.clone(), support_left, radius, hit, attempts, max_attempts, visit) {
            return true;
        }
        if support_left == 0 {
            return false;
        }
        for c in (1..=radius).flat_map(|c| [c, -c]) {
            let next = &acc + &basis[idx].scale(&c.into());
            let hit = hit || c.abs() == radius;
            if rec(basis, idx + 1, next, support_left - 1, radius, hit, attempts, max_attempts, visit) {
                return true;
            }
        }
        false
    }
    *attempts += 1;
    if visit(&GroupRingElement::zero(m)) {
        return true;
    }
    for radius in 1..=budget.height_for(m) {
        if rec(
            basis,
            0,
            GroupRingElement::zero(m),
            budget.word_length,
            radius,
            false,
            attempts,
            budget.max_attempts,
            visit,
        ) {
            return true;
        }
        if *attempts >= budget.max_attempts {
            break;
        }
    }
    false
}

fn pair(q: &QuadraticModule, a: GroupRingElement, b: GroupRingElement) -> RingVector {
    q.vector(&[a], &[b]).expect("rank-one block")
}

/// A partner `y` of the isotropic primitive `x` with `λ(x, y) = 1`,
/// `λ(y, y) = 0` and `μ(y) = 0`, returned as the matrix with columns `x, y`.
fn complete(
    q: &QuadraticModule,
    x: &RingVector,
    budget: &SearchBudget,
    attempts: &mut usize,
) -> Result<RingMatrix, LagrangianError> {
    let (alpha, beta) = (x.coord(0), x.coord(1));
    let pq = solve_combination(&[alpha.clone(), beta.clone()], &GroupRingElement::one(q.m))?
        .ok_or_else(|| LagrangianError::PreconditionFailed("vector is not primitive".into()))?;
    let (p, qq) = (&pq[0], &pq[1]);
    // λ(x, (ε q̄, p̄)) = 1; subtracting p̄q·x makes the partner isotropic
    let base = pair(q, q.sign.apply(&qq.involution()), p.involution());
    let c = &p.involution() * qq;
    let y0 = base.try_sub(&x.scale(&c))?;
    let basis = correction_basis(q);
    let mut found = None;
    let mut err = None;
    search_combinations(&basis, q.m, budget, attempts, &mut |w| {
        let y = match y0.try_add(&x.scale(w)) {
            Ok(y) => y,
            Err(e) => {
                err = Some(e);
                return true;
            }
        };
        match q.mu(&y) {
            Ok(c) if c.is_zero() => {
                found = Some(y);
                true
            }
            Ok(_) => false,
            Err(e) => {
                err = Some(e);
                true
            }
        }
    });
    if let Some(e) = err {
        return Err(e.into());
    }
    let y = found.ok_or(LagrangianError::SearchExhausted { attempts: *attempts })?;
    Ok(RingMatrix::from_columns(&[x.clone(), y])?)
}

fn invert_2x2(mat: &RingMatrix) -> Result<RingMatrix, LagrangianError> {
    let (a, b, c, d) = (mat.get(0, 0), mat.get(0, 1), mat.get(1, 0), mat.get(1, 1));
    let det = &(a * d) - &(b * c);
    let inv = is_unit(&det).ok_or_else(|| LagrangianError::InvariantViolated("basis matrix is singular".into()))?;
    Ok(RingMatrix::from_rows(vec![
        vec![&inv * d, -&(&inv * b)],
        vec![-&(&inv * c), &inv * a],
    ])?)
}

fn single_transvection(q: &QuadraticModule, from: &RingVector, to: &RingVector) -> Option<RingMatrix> {
    let attempts = [
        // f ↦ f + p·e changes the e-coordinate by p·β
        (TransvectionBase::Upper { e: 0, f: 0 }, 1usize, 0usize),
        // e ↦ e + p·f changes the f-coordinate by p·α
        (TransvectionBase::Lower { e: 0, f: 0 }, 0, 1),
    ];
    for (base, fixed, moved) in attempts {
        if from.coord(fixed) != to.coord(fixed) || from.coord(fixed).is_zero() {
            continue;
        }
        let diff = to.coord(moved) - from.coord(moved);
        let Ok(p) = exact_divide(&diff, from.coord(fixed)) else { continue };
        if let Ok(t) = q.transvection(base, &p.quotient) {
            if t.apply(from).ok().as_ref() == Some(to) {
                return Some(t);
            }
        }
    }
    None
}

/// An isometry `M` of the rank-one block `q` with `M·from = to`.
///
/// Tries the identity and single transvections first. Otherwise both vectors
/// are completed to hyperbolic pairs `(x, y)` with `μ(y) = 0`, searching the
/// bounded set of corrections `y + w·x`, and `M` maps one pair to the other.
pub fn rank2_vector_isometry(
    q: &QuadraticModule,
    from: &RingVector,
    to: &RingVector,
    budget: &SearchBudget,
) -> Result<RingMatrix, LagrangianError> {
    if q.rank != 1 {
        return Err(LagrangianError::PreconditionFailed(format!("expected a rank-one block, got rank {}", q.rank)));
    }
    q.check_vector(from)?;
    q.check_vector(to)?;
    for v in [from, to] {
        if v.is_zero() || !q.is_primitive(v)? {
            return Err(LagrangianError::PreconditionFailed(format!("{v:?} is not primitive")));
        }
    }
    if q.mu(from)? != q.mu(to)? {
        return Err(LagrangianError::PreconditionFailed("μ classes differ".into()));
    }
    let lf = q.lambda(from, from)?;
    if lf != q.lambda(to, to)? {
        return Err(LagrangianError::PreconditionFailed("λ(x, x) differs".into()));
    }
    if from == to {
        return Ok(RingMatrix::identity(q.m, 2));
    }
    if let Some(t) = single_transvection(q, from, to) {
        return Ok(t);
    }
    if !lf.is_zero() {
        return Err(LagrangianError::PreconditionFailed("completion needs isotropic vectors".into()));
    }
    let mut attempts = 0;
    let x = complete(q, from, budget, &mut attempts)?;
    let y = complete(q, to, budget, &mut attempts)?;
    let mat = y.try_mul(&invert_2x2(&x)?)?;
    if !q.isometry_check(&mat)? || mat.apply(from)? != *to {
        return Err(LagrangianError::InvariantViolated("completed frames do not give an isometry".into()));
    }
    Ok(mat)
}
