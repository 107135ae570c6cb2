mod common;

use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zm_forms::forms::{QuadraticModule, RingMatrix, RingVector};
use zm_forms::lagrangian::{
    rank2_vector_isometry, random_spec, run_sweep, solve, Branch, EmbeddingSpec, LagrangianError, SearchBudget,
    SolverTrace,
};
use zm_forms::ring::GroupRingElement;

fn el(m: usize, c: &[i64]) -> GroupRingElement {
    let mut full = vec![0; m];
    for (k, x) in c.iter().enumerate() {
        full[k % m] += x;
    }
    GroupRingElement::from_i64s(m, &full).unwrap()
}

/// `(ε, parameter)` for the branch, chosen independently of the library.
fn branch_form(branch: Branch) -> (i64, Param) {
    match branch {
        Branch::OddMSkew | Branch::EvenMSkew => (-1, Param::Tilde),
        Branch::EvenNSym => (1, Param::Minus),
    }
}

/// `[e₁, v₂]` built from the spec coefficients.
fn oracle_s(spec: &EmbeddingSpec) -> Vec<Vec<Coeffs>> {
    let m = spec.m;
    let zero = vec![num_bigint::BigInt::from(0); m];
    let c = match spec.branch {
        Branch::OddMSkew | Branch::EvenMSkew => norm(m),
        Branch::EvenNSym => sub(&unit_vec(m, 0), &unit_vec(m, 1)),
    };
    vec![
        vec![unit_vec(m, 0), zero.clone(), zero.clone(), zero],
        vec![coeffs(&spec.a1), coeffs(&spec.a2), c, coeffs(&spec.b2)],
    ]
}

/// `M` preserves `λ` on every basis pair and `μ` on every basis vector.
fn oracle_isometry(sign: i64, p: Param, mat: &RingMatrix) -> bool {
    let n = mat.size();
    let m = mat.modulus();
    let cols: Vec<Vec<Coeffs>> = (0..n).map(|j| vector_coeffs(&mat.column(j))).collect();
    let basis: Vec<Vec<Coeffs>> = (0..n).map(|j| (0..n).map(|i| if i == j { unit_vec(m, 0) } else { vec![0.into(); m] }).collect()).collect();
    for i in 0..n {
        if !same_class(m, p, &mu_lift(&cols[i]), &mu_lift(&basis[i])) {
            return false;
        }
        for j in 0..n {
            if lambda(sign, &cols[i], &cols[j]) != lambda(sign, &basis[i], &basis[j]) {
                return false;
            }
        }
    }
    true
}

fn check_trace(spec: &EmbeddingSpec, trace: &SolverTrace) {
    let (sign, p) = branch_form(spec.branch);
    let s = oracle_s(spec);
    let self_pairing = lambda(sign, &s[1], &s[1]);
    if spec.branch == Branch::EvenNSym {
        assert_eq!(aug(&self_pairing), 0.into(), "ε(λ(v₂, v₂)) ≠ 0 for {spec:?}");
    } else {
        assert!(is_zero(&self_pairing), "λ(v₂, v₂) ≠ 0 for {spec:?}");
    }
    let u: Vec<Vec<Coeffs>> = trace.u.iter().map(vector_coeffs).collect();
    if let Err(e) = is_complement(sign, p, &s, &u) {
        panic!("oracle rejects complement for {spec:?}: {e}");
    }
    for step in &trace.steps {
        assert!(oracle_isometry(sign, p, &step.matrix), "step {} is not an isometry for {spec:?}", step.name);
    }
    assert!(trace.replay().unwrap());
    let composite = trace.composite().unwrap();
    for (w, n) in trace.working_s.iter().zip(&trace.normalized_s) {
        assert_eq!(&composite.apply(w).unwrap(), n);
    }
}

#[test]
fn random_solutions_pass_the_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let budget = SearchBudget::default();
    for m in 2..=9 {
        for branch in Branch::ALL {
            if !branch.accepts(m) {
                continue;
            }
            for _ in 0..15 {
                let spec = random_spec(&mut rng, branch, m);
                match solve(&spec, &budget) {
                    Ok(trace) => check_trace(&spec, &trace),
                    Err(LagrangianError::SearchExhausted { .. }) => {}
                    Err(e) => panic!("{branch}, m = {m}: {e} for {spec:?}"),
                }
            }
        }
    }
}

#[test]
fn odd_branch_examples() {
    let budget = SearchBudget::default();
    let m = 5;
    let z = GroupRingElement::zero(m);
    let spec = EmbeddingSpec::new(Branch::OddMSkew, z.clone(), GroupRingElement::one(m), z.clone()).unwrap();
    let trace = solve(&spec, &budget).unwrap();
    let q = spec.module();
    let norm_data = trace.norm.as_ref().unwrap();
    assert!(norm_data.u.is_one());
    // b ∈ [1, m) forces a = 1 when l = 1
    assert_eq!((norm_data.l, norm_data.a, norm_data.b), (1, 1, 4));
    let a = GroupRingElement::constant(m, 1);
    let expected = vec![q.f(0).try_sub(&q.e(1).scale(&a)).unwrap(), q.f(1).try_sub(&q.e(0).scale(&a)).unwrap()];
    assert_eq!(trace.normalized_u, expected);
    check_trace(&spec, &trace);
    // the a = 0 complement {f₁, f₂} is also valid
    let fs = vec![vector_coeffs(&q.f(0)), vector_coeffs(&q.f(1))];
    assert!(is_complement(-1, Param::Tilde, &oracle_s(&spec), &fs).is_ok());

    let m = 3;
    let spec = EmbeddingSpec::new(Branch::OddMSkew, GroupRingElement::zero(m), GroupRingElement::one(m), GroupRingElement::norm_element(m)).unwrap();
    check_trace(&spec, &solve(&spec, &budget).unwrap());

    let z = GroupRingElement::zero(5);
    let spec = EmbeddingSpec::new(Branch::OddMSkew, z.clone(), z.clone(), z).unwrap();
    assert!(matches!(solve(&spec, &budget), Err(LagrangianError::PreconditionFailed(_))));
}

#[test]
fn even_m_branch_examples() {
    let budget = SearchBudget::default();
    let spec = EmbeddingSpec::new(Branch::EvenMSkew, el(2, &[0]), el(2, &[1]), el(2, &[0, 1])).unwrap();
    check_trace(&spec, &solve(&spec, &budget).unwrap());

    let m = 4;
    let s = GroupRingElement::norm_element(m);
    let spec = EmbeddingSpec::new(Branch::EvenMSkew, s.clone(), GroupRingElement::one(m), GroupRingElement::zero(m)).unwrap();
    let trace = solve(&spec, &budget).unwrap();
    check_trace(&spec, &trace);
    let names: Vec<&str> = trace.steps.iter().map(|s| s.name.as_str()).collect();
    assert!(names.iter().any(|n| n.starts_with('R')) && names.iter().any(|n| n.starts_with('T')), "{names:?}");
    // the recorded (r, k, t) solve r·a₂ + k·s + t·b₂ = −a₁ for the working a₁
    let [r, k, t] = trace.coefficients.clone().unwrap();
    let a1 = trace.working_s[1].coord(0);
    let lhs = add(&add(&mul(&coeffs(&r), &coeffs(&spec.a2)), &mul(&coeffs(&k), &norm(m))), &mul(&coeffs(&t), &coeffs(&spec.b2)));
    assert_eq!(lhs, neg(&coeffs(a1)));
    assert!(trace.h.is_some());

    let m = 3;
    let spec = EmbeddingSpec::new(Branch::EvenMSkew, GroupRingElement::zero(m), GroupRingElement::one(m), GroupRingElement::zero(m)).unwrap();
    assert!(matches!(solve(&spec, &budget), Err(LagrangianError::PreconditionFailed(_))));
}

#[test]
fn even_n_branch_examples() {
    let budget = SearchBudget::default();
    for m in 2..=8 {
        let z = GroupRingElement::zero(m);
        let spec = EmbeddingSpec::new(Branch::EvenNSym, z.clone(), GroupRingElement::one(m), z).unwrap();
        let trace = solve(&spec, &budget).unwrap();
        assert!(trace.complement_parameter.is_zero());
        let q = spec.module();
        assert_eq!(trace.u, vec![q.f(0), q.f(1)]);
        check_trace(&spec, &trace);
    }
    let m = 3;
    let spec = EmbeddingSpec::new(Branch::EvenNSym, el(m, &[0]), el(m, &[2, -1]), el(m, &[1, -1])).unwrap();
    let trace = solve(&spec, &budget).unwrap();
    assert!(trace.complement_parameter.is_one());
    check_trace(&spec, &trace);

    let spec = EmbeddingSpec::new(Branch::EvenNSym, el(m, &[0]), el(m, &[1, -1]), el(m, &[0, 1, -1])).unwrap();
    assert!(matches!(solve(&spec, &budget), Err(LagrangianError::AugmentationObstruction { .. })));
}

#[test]
fn rank_two_isometry_examples() {
    let budget = SearchBudget::default();
    for m in 2..=7 {
        let q = QuadraticModule::skew_tilde(m, 1);
        let e = q.e(0);
        assert!(rank2_vector_isometry(&q, &e, &e, &budget).unwrap().is_identity());

        // c = c̄ keeps e + c·f isotropic with μ = [c] = 0
        let c = &GroupRingElement::gen(m) + &GroupRingElement::gen(m).involution();
        let target = RingVector::new(vec![GroupRingElement::one(m), c]).unwrap();
        let mat = rank2_vector_isometry(&q, &e, &target, &budget).unwrap();
        assert_eq!(mat.apply(&e).unwrap(), target);
        assert!(oracle_isometry(-1, Param::Tilde, &mat));

        let plus = QuadraticModule::new(m, 1, zm_forms::forms::Sign::Minus, zm_forms::ring::FormParameterKind::Plus).unwrap();
        let one = GroupRingElement::one(m);
        let target = RingVector::new(vec![one.clone(), one]).unwrap();
        assert!(matches!(rank2_vector_isometry(&plus, &plus.e(0), &target, &budget), Err(LagrangianError::PreconditionFailed(_))));
    }
}

#[test]
fn sweep_counts_are_consistent() {
    let budget = SearchBudget::default();
    for (branch, m) in [(Branch::OddMSkew, 5), (Branch::EvenMSkew, 4), (Branch::EvenNSym, 3)] {
        let r = run_sweep(branch, m, 30, 7, &budget);
        assert_eq!(r.certified + r.search_exhausted + r.not_complement + r.failed, r.count);
        assert_eq!(r.not_complement, 0);
        assert_eq!(r.failed, 0);
        assert_eq!(r, run_sweep(branch, m, 30, 7, &budget));
    }
}
