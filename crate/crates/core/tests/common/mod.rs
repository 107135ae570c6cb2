//! Reference implementations used as oracles. Everything here works on raw
//! coefficient vectors and shares no code with the library's algorithms.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use zm_forms::forms::{RingMatrix, RingVector};
use zm_forms::ring::GroupRingElement;

pub type Coeffs = Vec<BigInt>;

pub fn coeffs(x: &GroupRingElement) -> Coeffs {
    x.coeffs().to_vec()
}

pub fn element(v: Coeffs) -> GroupRingElement {
    let m = v.len();
    GroupRingElement::new(m, v).unwrap()
}

pub fn int_vec(v: &[i64]) -> Coeffs {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

/// Cyclic convolution.
pub fn mul(a: &[BigInt], b: &[BigInt]) -> Coeffs {
    let m = a.len();
    let mut out = vec![BigInt::zero(); m];
    for i in 0..m {
        for j in 0..m {
            out[(i + j) % m] += &a[i] * &b[j];
        }
    }
    out
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> Coeffs {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> Coeffs {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[BigInt]) -> Coeffs {
    a.iter().map(|x| -x).collect()
}

/// `g ↦ g⁻¹`: coefficient of `gᵏ` moves to `g^{−k}`.
pub fn bar(a: &[BigInt]) -> Coeffs {
    let m = a.len();
    (0..m).map(|k| a[(m - k) % m].clone()).collect()
}

/// `gʲ·a`.
pub fn shift(a: &[BigInt], j: usize) -> Coeffs {
    let m = a.len();
    (0..m).map(|k| a[(k + m - j % m) % m].clone()).collect()
}

pub fn aug(a: &[BigInt]) -> BigInt {
    a.iter().sum()
}

pub fn norm(m: usize) -> Coeffs {
    vec![BigInt::one(); m]
}

pub fn unit_vec(m: usize, k: usize) -> Coeffs {
    let mut v = vec![BigInt::zero(); m];
    v[k % m] = BigInt::one();
    v
}

pub fn is_zero(a: &[BigInt]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Row echelon form over `Z` by repeated Euclidean row operations.
pub struct Echelon {
    rows: Vec<(usize, Coeffs)>,
}

impl Echelon {
    pub fn new(gens: &[Coeffs]) -> Self {
        let mut pool: Vec<Coeffs> = gens.iter().filter(|g| !is_zero(g)).cloned().collect();
        let dim = gens.first().map_or(0, Vec::len);
        let mut rows = Vec::new();
        for col in 0..dim {
            loop {
                let mut with: Vec<usize> = (0..pool.len()).filter(|&i| !pool[i][col].is_zero()).collect();
                if with.len() <= 1 {
                    break;
                }
                with.sort_by_key(|&i| pool[i][col].abs());
                let p = with[0];
                let pivot = pool[p].clone();
                for &i in &with[1..] {
                    let q = pool[i][col].div_floor(&pivot[col]);
                    pool[i] = pool[i].iter().zip(&pivot).map(|(a, b)| a - &q * b).collect();
                }
            }
            if let Some(i) = (0..pool.len()).find(|&i| !pool[i][col].is_zero()) {
                rows.push((col, pool.swap_remove(i)));
            }
            pool.retain(|r| !is_zero(r));
        }
        Self { rows }
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        let mut v = v.to_vec();
        for (col, row) in &self.rows {
            if v[*col].is_zero() {
                continue;
            }
            if !(&v[*col] % &row[*col]).is_zero() {
                return false;
            }
            let q = &v[*col] / &row[*col];
            v = v.iter().zip(row).map(|(a, b)| a - &q * b).collect();
        }
        is_zero(&v)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// `Z`-spanning set of the ideal generated by `gens`.
pub fn ideal_span(gens: &[Coeffs]) -> Vec<Coeffs> {
    let m = gens[0].len();
    gens.iter().flat_map(|g| (0..m).map(move |j| shift(g, j))).collect()
}

pub fn ideal_contains(gens: &[Coeffs], x: &[BigInt]) -> bool {
    Echelon::new(&ideal_span(gens)).contains(x)
}

pub fn same_ideal(a: &[Coeffs], b: &[Coeffs]) -> bool {
    let ea = Echelon::new(&ideal_span(a));
    let eb = Echelon::new(&ideal_span(b));
    ideal_span(a).iter().all(|v| eb.contains(v)) && ideal_span(b).iter().all(|v| ea.contains(v))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Param {
    /// `⟨1, x + x̄⟩`
    Tilde,
    /// `⟨x + x̄⟩`
    Plus,
    /// `⟨x − x̄⟩`
    Minus,
}

pub fn param_span(m: usize, p: Param) -> Vec<Coeffs> {
    let mut gens = Vec::new();
    if p == Param::Tilde {
        gens.push(unit_vec(m, 0));
    }
    for k in 0..m {
        let e = unit_vec(m, k);
        let b = bar(&e);
        gens.push(if p == Param::Minus { sub(&e, &b) } else { add(&e, &b) });
    }
    gens
}

pub fn same_class(m: usize, p: Param, x: &[BigInt], y: &[BigInt]) -> bool {
    Echelon::new(&param_span(m, p)).contains(&sub(x, y))
}

/// Determinant over `Q` by Gaussian elimination.
pub fn rational_det(mat: &[Vec<BigInt>]) -> BigInt {
    let n = mat.len();
    let mut a: Vec<Vec<BigRational>> =
        mat.iter().map(|r| r.iter().map(|c| BigRational::from_integer(c.clone())).collect()).collect();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return BigInt::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= a[c][c].clone();
        for r in c + 1..n {
            let f = &a[r][c] / &a[c][c];
            for k in c..n {
                let t = &f * &a[c][k];
                a[r][k] -= t;
            }
        }
    }
    assert!(det.is_integer());
    det.to_integer()
}

/// Matrix of `y ↦ x·y` in the basis `1, g, …`.
pub fn mult_matrix(x: &[BigInt]) -> Vec<Vec<BigInt>> {
    let m = x.len();
    let cols: Vec<Coeffs> = (0..m).map(|j| shift(x, j)).collect();
    (0..m).map(|i| (0..m).map(|j| cols[j][i].clone()).collect()).collect()
}

pub fn is_unit(x: &[BigInt]) -> bool {
    rational_det(&mult_matrix(x)).abs().is_one()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn parity(p: &[usize]) -> bool {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 1
}

/// Leibniz expansion over `Z[Z/m]`.
pub fn leibniz_det(rows: &[Vec<Coeffs>]) -> Coeffs {
    let n = rows.len();
    let m = rows[0][0].len();
    let mut total = vec![BigInt::zero(); m];
    for p in permutations(n) {
        let mut term = unit_vec(m, 0);
        for (i, &j) in p.iter().enumerate() {
            term = mul(&term, &rows[i][j]);
        }
        total = if parity(&p) { sub(&total, &term) } else { add(&total, &term) };
    }
    total
}

pub fn matrix_coeffs(mat: &RingMatrix) -> Vec<Vec<Coeffs>> {
    mat.rows().iter().map(|r| r.iter().map(coeffs).collect()).collect()
}

pub fn vector_coeffs(v: &RingVector) -> Vec<Coeffs> {
    v.coords().iter().map(coeffs).collect()
}

/// `λ(x, y) = Σ aᵢ d̄ᵢ + ε bᵢ c̄ᵢ`.
pub fn lambda(sign: i64, x: &[Coeffs], y: &[Coeffs]) -> Coeffs {
    let r = x.len() / 2;
    let m = x[0].len();
    let mut out = vec![BigInt::zero(); m];
    for i in 0..r {
        out = add(&out, &mul(&x[i], &bar(&y[r + i])));
        let fe = mul(&x[r + i], &bar(&y[i]));
        out = if sign > 0 { add(&out, &fe) } else { sub(&out, &fe) };
    }
    out
}

/// `Σ aᵢ b̄ᵢ`.
pub fn mu_lift(x: &[Coeffs]) -> Coeffs {
    let r = x.len() / 2;
    let m = x[0].len();
    (0..r).fold(vec![BigInt::zero(); m], |acc, i| add(&acc, &mul(&x[i], &bar(&x[r + i]))))
}

/// Independent check that `U` is a Lagrangian complement of `S` in
/// `H^r_ε` with parameter `p`.
pub fn is_complement(sign: i64, p: Param, s: &[Vec<Coeffs>], u: &[Vec<Coeffs>]) -> Result<(), String> {
    let n = s.len() + u.len();
    if n != s[0].len() || s.len() != u.len() {
        return Err("wrong counts".into());
    }
    let m = s[0][0].len();
    for (i, x) in u.iter().enumerate() {
        for (j, y) in u.iter().enumerate() {
            if !is_zero(&lambda(sign, x, y)) {
                return Err(format!("λ(u{i}, u{j}) ≠ 0"));
            }
        }
        if !same_class(m, p, &mu_lift(x), &vec![BigInt::zero(); m]) {
            return Err(format!("μ(u{i}) ≠ 0"));
        }
    }
    let cols: Vec<&Vec<Coeffs>> = s.iter().chain(u).collect();
    let rows: Vec<Vec<Coeffs>> = (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect();
    let det = leibniz_det(&rows);
    if !is_unit(&det) {
        return Err("determinant is not a unit".into());
    }
    Ok(())
}

pub fn binomial_mod2(n: u32, k: u32) -> bool {
    // Lucas: C(n, k) is odd iff k's bits are a subset of n's
    k <= n && (n & k) == k
}

/// `Sqᵏ(xᵃyᵇ)` as `(x, y)` exponents, or `None` when zero.
/// Polynomial case: `C(a, k) x^{a+k}`. Truncated case (`a ≤ 1`):
/// `C(b, k/2) x^a y^{b+k/2}` for even `k`, zero for odd `k`.
pub fn sq_monomial(truncated: bool, a: u32, b: u32, k: u32) -> Option<(u32, u32)> {
    if !truncated {
        return binomial_mod2(a, k).then_some((a + k, 0));
    }
    if a >= 2 || k % 2 == 1 {
        return None;
    }
    binomial_mod2(b, k / 2).then_some((a, b + k / 2))
}
