//! Random elements for sweeps and self-tests.

use rand::Rng;

use super::element::GroupRingElement;

/// Uniform coefficients in `[−height, height]`.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, m: usize, height: i64) -> GroupRingElement {
    let coeffs: Vec<i64> = (0..m).map(|_| rng.gen_range(-height..=height)).collect();
    GroupRingElement::from_i64s(m, &coeffs).expect("valid modulus")
}

/// At most `terms` nonzero coefficients, each in `[−height, height]`.
pub fn random_sparse<R: Rng + ?Sized>(rng: &mut R, m: usize, terms: usize, height: i64) -> GroupRingElement {
    let mut x = GroupRingElement::zero(m);
    for _ in 0..terms {
        let c = rng.gen_range(-height..=height);
        let e = rng.gen_range(0..m as i64);
        x = &x + &GroupRingElement::monomial(m, e, c);
    }
    x
}
