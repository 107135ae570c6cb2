//! Division, unit detection and ideal computations in `Λ`, all decided by
//! exact integer linear algebra on `Zᵐ`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::element::GroupRingElement;
use super::lattice::Hnf;
use super::RingError;

/// Outcome of [`exact_divide`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Division {
    pub quotient: GroupRingElement,
    /// Set when the divisor is a zero divisor and the quotient is one of
    /// several; the returned one is reduced modulo the annihilator lattice.
    pub ambiguous: bool,
}

/// The Z-lattice of the ideal generated by `gens`, spanned by all `gʲ·genᵢ`.
/// Generator index `i·m + j` corresponds to `gʲ·genᵢ`.
pub fn ideal_lattice(m: usize, gens: &[GroupRingElement]) -> Hnf {
    let rows: Vec<Vec<BigInt>> = gens
        .iter()
        .flat_map(|x| (0..m as i64).map(move |j| x.shift(j).into_coeffs()))
        .collect();
    Hnf::new(&rows, m)
}

fn check_moduli(m: usize, xs: &[&GroupRingElement]) -> Result<(), RingError> {
    for x in xs {
        if x.modulus() != m {
            return Err(RingError::ModulusMismatch { left: m, right: x.modulus() });
        }
    }
    Ok(())
}

fn fold_coefficients(m: usize, k: usize, coeffs: &[BigInt]) -> Vec<GroupRingElement> {
    (0..k)
        .map(|i| GroupRingElement::new(m, coeffs[i * m..(i + 1) * m].to_vec()).expect("length m"))
        .collect()
}

/// Finds `r₁, …, r_k ∈ Λ` with `Σ rᵢ·genᵢ = target`, if any.
pub fn solve_combination(
    gens: &[GroupRingElement],
    target: &GroupRingElement,
) -> Result<Option<Vec<GroupRingElement>>, RingError> {
    let m = target.modulus();
    check_moduli(m, &gens.iter().collect::<Vec<_>>())?;
    let hnf = ideal_lattice(m, gens);
    Ok(hnf.solve(target.coeffs()).map(|c| fold_coefficients(m, gens.len(), &c)))
}

/// Whether `x` lies in the ideal generated by `gens`.
pub fn ideal_contains(gens: &[GroupRingElement], x: &GroupRingElement) -> bool {
    ideal_lattice(x.modulus(), gens).contains(x.coeffs())
}

/// Solves `d·q = x` over `Λ`.
pub fn exact_divide(x: &GroupRingElement, d: &GroupRingElement) -> Result<Division, RingError> {
    let m = x.modulus();
    check_moduli(m, &[d])?;
    if d.is_zero() {
        return Err(RingError::DivisionByZero);
    }
    let hnf = ideal_lattice(m, std::slice::from_ref(d));
    let Some(mut q) = hnf.solve(x.coeffs()) else {
        return Err(RingError::NotDivisible);
    };
    let ambiguous = !hnf.kernel().is_empty();
    if ambiguous {
        let ann = Hnf::new(hnf.kernel(), m);
        q = ann.reduce(&q).0;
        q = l1_descent(q, ann.basis());
    }
    Ok(Division { quotient: GroupRingElement::new(m, q)?, ambiguous })
}

/// Moves `q` along the lattice `basis` while that lowers `Σ|qᵢ|`, one basis
/// vector at a time. The input is the Hermite-reduced coset representative,
/// so the result depends only on the coset.
fn l1_descent(mut q: Vec<BigInt>, basis: &[Vec<BigInt>]) -> Vec<BigInt> {
    let l1 = |v: &[BigInt]| v.iter().map(|x| x.abs()).sum::<BigInt>();
    for _ in 0..64 {
        let mut moved = false;
        for b in basis {
            // breakpoints of k ↦ Σ|qᵢ + k bᵢ| are at −qᵢ/bᵢ
            let mut best = (l1(&q), BigInt::zero());
            for (qi, bi) in q.iter().zip(b) {
                if bi.is_zero() {
                    continue;
                }
                let k0 = (-qi).div_floor(bi);
                for k in [k0.clone(), k0 + 1] {
                    let cand: Vec<BigInt> = q.iter().zip(b).map(|(x, y)| x + &k * y).collect();
                    let c = l1(&cand);
                    if c < best.0 {
                        best = (c, k);
                    }
                }
            }
            if !best.1.is_zero() {
                q = q.iter().zip(b).map(|(x, y)| x + &best.1 * y).collect();
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    q
}

/// Determinant of a square integer matrix by fraction-free elimination.
pub fn integer_det(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let val = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = val / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Returns `Some(x⁻¹)` when `x` is a unit of `Λ`, decided by whether the
/// multiplication matrix of `x` has determinant `±1`.
pub fn is_unit(x: &GroupRingElement) -> Option<GroupRingElement> {
    let det = integer_det(&x.multiplication_matrix());
    if det.abs() != BigInt::one() {
        return None;
    }
    let inv = exact_divide(&GroupRingElement::one(x.modulus()), x)
        .expect("unimodular multiplication matrix is invertible");
    Some(inv.quotient)
}

/// Data describing an ideal `A` with `A + (s) = Λ` as the principal ideal
/// `u·Λ` with `u = 1 + g + ⋯ + g^{l−1}`.
///
/// Invariants: `gcd(l, m) = 1`, `a·m − b·l = 1`, `b > 0`,
/// `v = −g(1 + gˡ + ⋯ + g^{(b−1)l})` and `u·v = 1 − a·s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormData {
    pub u: GroupRingElement,
    pub v: GroupRingElement,
    pub l: i64,
    pub a: i64,
    pub b: i64,
}

/// The complementary sign convention `u·v' + a'·s = 1` with
/// `v' = 1 + gˡ + ⋯ + g^{(b'−1)l}` and `b'·l + a'·m = 1`, so `ε(v') = b'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitConvention {
    pub v: GroupRingElement,
    pub a: i64,
    pub b: i64,
}

/// `1 + gˡ + g^{2l} + ⋯ + g^{(count−1)l}`.
fn stride_sum(m: usize, l: i64, count: i64) -> GroupRingElement {
    let mut x = GroupRingElement::zero(m);
    for k in 0..count {
        x = &x + &GroupRingElement::monomial(m, (k * l).rem_euclid(m as i64), 1);
    }
    x
}

impl NormData {
    /// Builds the data for a given `l` coprime to `m`, choosing `b ∈ [1, m)`.
    pub fn for_l(m: usize, l: i64) -> Result<Self, RingError> {
        let mi = m as i64;
        if l <= 0 || l.gcd(&mi) != 1 {
            return Err(RingError::PreconditionFailed(format!("l = {l} is not a positive integer coprime to m = {m}")));
        }
        // b ≡ −l⁻¹ (mod m)
        let inv = BigInt::from(l).extended_gcd(&BigInt::from(mi)).x.to_i64().expect("small");
        let mut b = (-inv).rem_euclid(mi);
        if b == 0 {
            b = mi;
        }
        let a = (1 + b as i128 * l as i128) / mi as i128;
        let a = i64::try_from(a).map_err(|_| RingError::Overflow)?;
        let u = GroupRingElement::geometric(m, l as u64);
        let v = -(&GroupRingElement::gen(m) * &stride_sum(m, l, b));
        Ok(Self { u, v, l, a, b })
    }

    pub fn modulus(&self) -> usize {
        self.u.modulus()
    }

    /// Checks `u·v = 1 − a·s` exactly.
    pub fn identity_holds(&self) -> bool {
        let m = self.modulus();
        let rhs = &GroupRingElement::one(m)
            - &GroupRingElement::norm_element(m).scale(&BigInt::from(self.a));
        &self.u * &self.v == rhs
    }

    /// The `u·v' + a'·s = 1` convention with positive `ε(v') = b'`.
    pub fn unit_convention(&self) -> UnitConvention {
        let m = self.modulus() as i64;
        let b = m - self.b;
        let (b, a) = if b > 0 { (b, self.a - self.l) } else { (b + m, self.a - 2 * self.l) };
        UnitConvention { v: stride_sum(self.modulus(), self.l, b), a, b }
    }
}

/// Normalizes an ideal `A = (gens)` with `A + (s) = Λ` to `A = u·Λ`.
pub fn ideal_normalize(gens: &[GroupRingElement]) -> Result<NormData, RingError> {
    let Some(first) = gens.first() else {
        return Err(RingError::Degenerate);
    };
    let m = first.modulus();
    check_moduli(m, &gens.iter().collect::<Vec<_>>())?;
    if gens.iter().all(GroupRingElement::is_zero) {
        return Err(RingError::Degenerate);
    }
    let mut with_norm = gens.to_vec();
    with_norm.push(GroupRingElement::norm_element(m));
    if !ideal_contains(&with_norm, &GroupRingElement::one(m)) {
        return Err(RingError::PreconditionFailed("A + (s) does not contain 1".into()));
    }
    let l = gens
        .iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(&x.augmentation()));
    let l = l.to_i64().ok_or(RingError::Overflow)?;
    let data = NormData::for_l(m, l)?;
    if !data.identity_holds() {
        return Err(RingError::InvariantViolated("u·v ≠ 1 − a·s".into()));
    }
    let a_lat = ideal_lattice(m, gens);
    let u_lat = ideal_lattice(m, std::slice::from_ref(&data.u));
    if !a_lat.same_lattice(&u_lat) {
        return Err(RingError::InvariantViolated("u·Λ differs from the ideal".into()));
    }
    Ok(data)
}
