//! Random valid embeddings and the randomized solver sweep.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::rank2::SearchBudget;
use super::solve::solve;
use super::{Branch, EmbeddingSpec, LagrangianError};
use crate::forms::{verify_lagrangian_complement, QuadraticModule, RingMatrix, RingVector, Sign, TransvectionBase};
use crate::ring::{random_element, random_sparse, GroupRingElement, NormData};

/// A parameter `p` with `p = −ε p̄` and `[p] = 0`, usable for rank-one
/// transvections.
fn rank_one_parameter<R: Rng>(rng: &mut R, q: &QuadraticModule, height: i64) -> GroupRingElement {
    let m = q.m;
    let mut p = GroupRingElement::zero(m);
    for i in 1..=((m - 1) / 2) as i64 {
        let c = rng.gen_range(-height..=height);
        let a = GroupRingElement::monomial(m, i, c);
        let b = GroupRingElement::monomial(m, -i, c);
        p = &p + &match q.sign {
            Sign::Minus => &a + &b,
            Sign::Plus => &a - &b,
        };
    }
    if q.sign == Sign::Minus {
        p = &p + &GroupRingElement::constant(m, rng.gen_range(-height..=height));
        if m % 2 == 0 {
            p = &p + &GroupRingElement::monomial(m, m as i64 / 2, 2 * rng.gen_range(-height..=height));
        }
    }
    p
}

/// A random isometry of the rank-one block built from a short word.
fn random_block_word<R: Rng>(rng: &mut R, q1: &QuadraticModule, len: usize) -> RingMatrix {
    let m = q1.m;
    let mut acc = RingMatrix::identity(m, 2);
    for _ in 0..len {
        let step = match rng.gen_range(0..4) {
            0 => q1.transvection(TransvectionBase::Upper { e: 0, f: 0 }, &rank_one_parameter(rng, q1, 1)),
            1 => q1.transvection(TransvectionBase::Lower { e: 0, f: 0 }, &rank_one_parameter(rng, q1, 1)),
            2 => {
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                q1.unit_scaling(0, &GroupRingElement::monomial(m, rng.gen_range(0..m as i64), sign))
            }
            _ => q1.hyperbolic_swap(0),
        }
        .expect("valid generator");
        acc = step.try_mul(&acc).expect("same size");
    }
    acc
}

/// Random `R` and `T` moves; both fix `e₁` and the `f₁`-coefficient.
fn scramble_with_r_t<R: Rng>(rng: &mut R, q: &QuadraticModule, v: RingVector, moves: usize) -> RingVector {
    let mut v = v;
    for _ in 0..moves {
        let p = random_sparse(rng, q.m, 2, 1);
        let base = if rng.gen_bool(0.5) {
            TransvectionBase::Mixed { e: 0, f: 1 }
        } else {
            TransvectionBase::Upper { e: 1, f: 0 }
        };
        v = q.transvection(base, &p).and_then(|t| t.apply(&v)).expect("valid transvection");
    }
    v
}

fn random_coprime<R: Rng>(rng: &mut R, m: usize) -> i64 {
    loop {
        let l = rng.gen_range(1..=3 * m as i64);
        if num_integer::Integer::gcd(&l, &(m as i64)) == 1 {
            return l;
        }
    }
}

/// A random spec satisfying the branch's preconditions, built by moving a
/// standard position with random isometries.
pub fn random_spec<R: Rng>(rng: &mut R, branch: Branch, m: usize) -> EmbeddingSpec {
    assert!(branch.accepts(m), "{branch} does not accept m = {m}");
    let q = branch.module(m);
    let s = GroupRingElement::norm_element(m);
    match branch {
        Branch::OddMSkew | Branch::EvenMSkew => {
            let q1 = QuadraticModule::new(m, 1, q.sign, q.kind).expect("valid");
            let norm = NormData::for_l(m, random_coprime(rng, m)).expect("coprime");
            let (v, a1) = if branch == Branch::OddMSkew {
                (norm.v.clone(), random_sparse(rng, m, 2, 2))
            } else {
                let h = rng.gen_range(-2..=2i64);
                (norm.unit_convention().v, s.scale(&h.into()))
            };
            let len = rng.gen_range(0..=3);
            let word = random_block_word(rng, &q1, len);
            let moved = word.apply(&q1.vector(&[v], &[s.clone()]).expect("rank one")).expect("size 2");
            let a2 = &norm.u * moved.coord(0);
            let b2 = &norm.u * moved.coord(1);
            let v2 = RingVector::new(vec![a1, a2, s.clone(), b2]).expect("uniform");
            let moves = rng.gen_range(0..=2);
            let mut v2 = scramble_with_r_t(rng, &q, v2, moves);
            if branch == Branch::EvenMSkew && rng.gen_bool(0.5) {
                // present the unreplaced form, μ(v₂) = 0
                v2.set(0, v2.coord(0) - &GroupRingElement::one(m));
            }
            EmbeddingSpec::new(branch, v2.coord(0).clone(), v2.coord(1).clone(), v2.coord(3).clone()).expect("same m")
        }
        Branch::EvenNSym => {
            let one_minus_g = &GroupRingElement::one(m) - &GroupRingElement::gen(m);
            let a2 = &GroupRingElement::one(m) + &(&random_element(rng, m, 1) * &one_minus_g);
            let b2 = &random_element(rng, m, 1) * &one_minus_g;
            let mut pair = [a2, b2];
            if rng.gen_bool(0.5) {
                pair.reverse();
            }
            if rng.gen_bool(0.5) {
                pair = pair.map(|x| -x);
            }
            let [a2, b2] = pair;
            EmbeddingSpec::new(branch, random_sparse(rng, m, 2, 2), a2, b2).expect("same m")
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SweepOutcome {
    Certified,
    SearchExhausted { spec: EmbeddingSpec },
    NotComplement { spec: EmbeddingSpec, reason: String },
    Failed { spec: EmbeddingSpec, reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub branch: Branch,
    pub m: usize,
    pub seed: u64,
    pub count: usize,
    pub certified: usize,
    pub search_exhausted: usize,
    pub not_complement: usize,
    pub failed: usize,
    /// Every outcome other than `Certified`.
    pub incidents: Vec<SweepOutcome>,
}

impl SweepReport {
    pub fn search_exhausted_rate(&self) -> f64 {
        if self.count == 0 {
            0.0
        } else {
            self.search_exhausted as f64 / self.count as f64
        }
    }
}

fn case_seed(seed: u64, branch: Branch, m: usize, i: usize) -> u64 {
    let tag = match branch {
        Branch::OddMSkew => 1u64,
        Branch::EvenMSkew => 2,
        Branch::EvenNSym => 3,
    };
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (tag << 56)
        ^ ((m as u64) << 40)
        ^ i as u64
}

fn run_case(spec: EmbeddingSpec, budget: &SearchBudget) -> SweepOutcome {
    match solve(&spec, budget) {
        Ok(trace) => {
            // re-check from scratch rather than trusting the trace
            let q = spec.module();
            let fresh = verify_lagrangian_complement(&q, &[spec.v1(), spec.v2()], &trace.u);
            let replay = trace.replay();
            match (fresh, replay) {
                (Ok(_), Ok(true)) => SweepOutcome::Certified,
                (Err(e), _) => SweepOutcome::NotComplement { spec, reason: e.to_string() },
                (_, Ok(false)) => SweepOutcome::Failed { spec, reason: "trace replay failed".into() },
                (_, Err(e)) => SweepOutcome::Failed { spec, reason: e.to_string() },
            }
        }
        Err(LagrangianError::SearchExhausted { .. }) => SweepOutcome::SearchExhausted { spec },
        Err(LagrangianError::Form(e @ crate::forms::FormError::NotComplement(_))) => {
            SweepOutcome::NotComplement { spec, reason: e.to_string() }
        }
        Err(e) => SweepOutcome::Failed { spec, reason: e.to_string() },
    }
}

/// Solves `count` random specs for one branch and modulus, in parallel.
/// Results depend only on the arguments.
pub fn run_sweep(branch: Branch, m: usize, count: usize, seed: u64, budget: &SearchBudget) -> SweepReport {
    let outcomes: Vec<SweepOutcome> = (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(case_seed(seed, branch, m, i));
            run_case(random_spec(&mut rng, branch, m), budget)
        })
        .collect();
    let mut report = SweepReport {
        branch,
        m,
        seed,
        count,
        certified: 0,
        search_exhausted: 0,
        not_complement: 0,
        failed: 0,
        incidents: Vec::new(),
    };
    for o in outcomes {
        match &o {
            SweepOutcome::Certified => report.certified += 1,
            SweepOutcome::SearchExhausted { .. } => report.search_exhausted += 1,
            SweepOutcome::NotComplement { .. } => report.not_complement += 1,
            SweepOutcome::Failed { .. } => report.failed += 1,
        }
        if o != SweepOutcome::Certified {
            report.incidents.push(o);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_specs_meet_preconditions() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (branch, ms) in [
            (Branch::OddMSkew, vec![3usize, 5, 7]),
            (Branch::EvenMSkew, vec![2, 4, 6]),
            (Branch::EvenNSym, vec![2, 3, 5]),
        ] {
            for m in ms {
                for _ in 0..10 {
                    let spec = random_spec(&mut rng, branch, m);
                    let q = spec.module();
                    assert!(q.is_primitive(&spec.tail()).unwrap());
                    if branch != Branch::EvenNSym {
                        assert!(q.lambda(&spec.v2(), &spec.v2()).unwrap().is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn small_sweeps_certify() {
        for (branch, m) in [(Branch::OddMSkew, 5), (Branch::EvenMSkew, 4), (Branch::EvenNSym, 3)] {
            let r = run_sweep(branch, m, 10, 3, &SearchBudget::default());
            assert_eq!(r.certified, 10, "{:?}", r.incidents);
        }
    }

    #[test]
    fn sweep_is_deterministic() {
        let a = run_sweep(Branch::EvenMSkew, 6, 8, 42, &SearchBudget::default());
        let b = run_sweep(Branch::EvenMSkew, 6, 8, 42, &SearchBudget::default());
        assert_eq!(a, b);
    }
}
