use num_rational::Ratio;
use zm_forms::census::{
    c_of_n, classification, euler_characteristic, existence_check, ActionQuery, CensusError, ClassCount,
    ConjugationKind,
};

const C_TABLE: [(u32, u64); 6] = [(4, 3), (5, 3), (6, 3), (7, 3), (8, 5), (9, 5)];

fn oracle_exists(n: u32, m: u64, g: u64) -> bool {
    let shifted = g as i64 + if n % 2 == 0 { 1 } else { -1 };
    shifted.rem_euclid(m as i64) == 0
}

fn smallest_prime_factor(m: u64) -> u64 {
    (2..=m).find(|d| m % d == 0).unwrap()
}

/// Expected count, or `None` for out of range.
fn oracle_count(n: u32, m: u64) -> Option<u64> {
    match n {
        2 => Some(1),
        3 => Some(if m % 2 == 1 { 1 } else { 2 }),
        _ => {
            let c = C_TABLE.iter().find(|(k, _)| *k == n)?.1;
            (smallest_prime_factor(m) > c).then(|| m.pow(n / 4))
        }
    }
}

#[test]
fn brute_force_census() {
    for n in 2..=9 {
        for m in 2..=12u64 {
            let mut passing_residues = std::collections::BTreeSet::new();
            for g in 0..=50u64 {
                let q = ActionQuery::new(n, m, g);
                let exists = oracle_exists(n, m, g);
                let ex = existence_check(&q);
                assert_eq!(ex.exists, exists, "(n, m, g) = ({n}, {m}, {g})");
                let sign = if n % 2 == 0 { 1i128 } else { -1 };
                let chi = Ratio::new(2 * (1 + sign * g as i128), m as i128);
                assert_eq!(euler_characteristic(n, m, g), chi);
                if exists {
                    passing_residues.insert(g % m);
                    assert!(chi.is_integer() && chi.to_integer() % 2 == 0, "χ = {chi} for ({n}, {m}, {g})");
                    assert!(ex.euler_char_integral);
                }
                let r = classification(&q).unwrap();
                assert_eq!(r.exists, exists);
                if !exists {
                    assert!(r.class_count.is_none());
                    assert_eq!(r.exit_code(), 2);
                    continue;
                }
                match (oracle_count(n, m), &r.class_count) {
                    (Some(c), Some(ClassCount::Exact { count, .. })) => {
                        assert_eq!(*count, c, "(n, m, g) = ({n}, {m}, {g})");
                        assert_eq!(r.exit_code(), 0);
                    }
                    (None, Some(ClassCount::OutOfRange { .. })) => assert_eq!(r.exit_code(), 3),
                    (want, got) => panic!("(n, m, g) = ({n}, {m}, {g}): expected {want:?}, got {got:?}"),
                }
                let kind = if n == 2 { ConjugationKind::Topological } else { ConjugationKind::Smooth };
                assert_eq!(r.conjugation_kind, kind);
            }
            assert_eq!(passing_residues.len(), 1, "n = {n}, m = {m}");
        }
    }
}

#[test]
fn existence_is_periodic_in_genus() {
    for n in 2..=9 {
        for m in 2..=12u64 {
            for g in 0..=40u64 {
                let a = existence_check(&ActionQuery::new(n, m, g)).exists;
                let b = existence_check(&ActionQuery::new(n, m, g + m)).exists;
                assert_eq!(a, b);
            }
        }
    }
}

#[test]
fn c_table() {
    for (n, c) in C_TABLE {
        assert_eq!(c_of_n(n), Ok(c));
    }
    assert_eq!(c_of_n(10), Err(CensusError::OutOfTable(10)));
    assert_eq!(c_of_n(3), Err(CensusError::OutOfTable(3)));
}

#[test]
fn census_examples() {
    let e = existence_check(&ActionQuery::new(3, 2, 3));
    assert!(e.exists);
    assert_eq!(euler_characteristic(3, 2, 3), Ratio::from_integer(-2));
    assert!(!existence_check(&ActionQuery::new(3, 2, 2)).exists);
    assert!(existence_check(&ActionQuery::new(2, 3, 2)).exists);

    let r = classification(&ActionQuery::new(3, 2, 3)).unwrap();
    assert!(matches!(r.class_count, Some(ClassCount::Exact { count: 2, .. })));
    assert_eq!(
        r.quotient_descriptors,
        vec!["(L³_m×S³)#((g−1)/m)(S³×S³)".to_string(), "S(ξ)#((g−1)/m)(S³×S³)".to_string()]
    );

    let r = classification(&ActionQuery::new(5, 7, 8)).unwrap();
    assert!(matches!(r.class_count, Some(ClassCount::Exact { count: 7, .. })));
    assert_eq!(r.quotient_descriptors, vec!["S(ξ)#((g−1)/m)(S⁵×S⁵)#(1/m)Σ".to_string()]);

    let r = classification(&ActionQuery::new(4, 6, 5)).unwrap();
    assert!(r.is_out_of_range());
    assert_eq!(r.exit_code(), 3);

    let r = classification(&ActionQuery::new(8, 7, 6)).unwrap();
    assert!(matches!(r.class_count, Some(ClassCount::Exact { count: 49, .. })));
    assert_eq!(r.quotient_descriptors, vec!["N(ξ)#((g+1)/m)(S⁸×S⁸)#(1/m)Σ".to_string()]);

    let r = classification(&ActionQuery::new(2, 3, 2)).unwrap();
    assert_eq!(r.conjugation_kind, ConjugationKind::Topological);
    assert!(r.realizable_module.is_none());
}

#[test]
fn realizable_modules() {
    // n odd: Z² ⊕ Λ^{2r} with r = (g − 1)/m
    let r = classification(&ActionQuery::new(3, 2, 5)).unwrap();
    assert_eq!(r.realizable_module.as_deref(), Some("Z² ⊕ Z[Z/2]^4"));
    let r = classification(&ActionQuery::new(3, 3, 1)).unwrap();
    assert_eq!(r.realizable_module.as_deref(), Some("Z²"));
    // n even: I² ⊕ Λ^{2r} with r = (g + 1)/m − 1
    let r = classification(&ActionQuery::new(6, 5, 14)).unwrap();
    assert_eq!(r.realizable_module.as_deref(), Some("I² ⊕ Z[Z/5]^4"));
}

#[test]
fn pontryagin_tuples() {
    let q = ActionQuery::new(9, 7, 15).with_pontryagin(vec![3, 6]);
    let a = classification(&q).unwrap();
    let b = classification(&q).unwrap();
    assert_eq!(a, b);
    let selected = a.selected_class.unwrap();
    assert!(selected.contains("(3, 6)"), "{selected}");
    assert!(matches!(a.class_count, Some(ClassCount::Exact { count: 49, .. })));

    let other = classification(&ActionQuery::new(9, 7, 15).with_pontryagin(vec![3, 5])).unwrap();
    assert_ne!(other.selected_class.unwrap(), selected);

    assert!(matches!(classification(&ActionQuery::new(9, 7, 15).with_pontryagin(vec![3])), Err(CensusError::InvalidQuery(_))));
    assert!(matches!(classification(&ActionQuery::new(9, 7, 15).with_pontryagin(vec![3, 7])), Err(CensusError::InvalidQuery(_))));
}
