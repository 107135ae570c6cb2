//! Integer lattices in `Zⁿ` via row-style Hermite normal form.
//!
//! A lattice is given by a list of generating rows. [`Hnf::new`] computes the
//! echelon form with positive pivots and entries above each pivot reduced
//! into `[0, pivot)`, together with the unimodular transform that expresses
//! every echelon row (and every relation among the generators) in terms of
//! the original generators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Hermite normal form of a generating set, with transform and relation lattice.
#[derive(Clone, Debug)]
pub struct Hnf {
    dim: usize,
    num_gens: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    /// `transform[i]` expresses `rows[i]` as a combination of the generators.
    transform: Vec<Vec<BigInt>>,
    /// Basis of the integer relations among the generators.
    kernel: Vec<Vec<BigInt>>,
}

fn axpy(target: &mut [BigInt], q: &BigInt, src: &[BigInt]) {
    // target -= q * src
    for (t, s) in target.iter_mut().zip(src) {
        if !s.is_zero() {
            *t -= q * s;
        }
    }
}

impl Hnf {
    /// Computes the Hermite normal form of the lattice spanned by `gens`, each
    /// a vector of length `dim`.
    pub fn new(gens: &[Vec<BigInt>], dim: usize) -> Self {
        let n = gens.len();
        let mut a: Vec<Vec<BigInt>> = gens.to_vec();
        for g in &a {
            assert_eq!(g.len(), dim, "generator of wrong length");
        }
        let mut u: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..dim {
            if prow == n {
                break;
            }
            loop {
                // smallest nonzero entry at or below prow
                let best = (prow..n)
                    .filter(|&r| !a[r][col].is_zero())
                    .min_by(|&x, &y| a[x][col].abs().cmp(&a[y][col].abs()));
                let Some(best) = best else { break };
                a.swap(prow, best);
                u.swap(prow, best);
                let mut done = true;
                for r in prow + 1..n {
                    if a[r][col].is_zero() {
                        continue;
                    }
                    let q = a[r][col].div_floor(&a[prow][col]);
                    let (top, bottom) = a.split_at_mut(r);
                    axpy(&mut bottom[0], &q, &top[prow]);
                    let (top, bottom) = u.split_at_mut(r);
                    axpy(&mut bottom[0], &q, &top[prow]);
                    if !a[r][col].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if prow < n && !a[prow][col].is_zero() {
                if a[prow][col].is_negative() {
                    for x in a[prow].iter_mut().chain(u[prow].iter_mut()) {
                        *x = -&*x;
                    }
                }
                for r in 0..prow {
                    let q = a[r][col].div_floor(&a[prow][col]);
                    if q.is_zero() {
                        continue;
                    }
                    let (top, bottom) = a.split_at_mut(prow);
                    axpy(&mut top[r], &q, &bottom[0]);
                    let (top, bottom) = u.split_at_mut(prow);
                    axpy(&mut top[r], &q, &bottom[0]);
                }
                pivots.push(col);
                prow += 1;
            }
        }
        let kernel = u.split_off(prow);
        a.truncate(prow);
        Hnf { dim, num_gens: n, rows: a, pivots, transform: u, kernel }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// The echelon basis rows.
    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis of the relation lattice `{c : Σ cᵢ genᵢ = 0}`.
    pub fn kernel(&self) -> &[Vec<BigInt>] {
        &self.kernel
    }

    /// Reduces `v` modulo the lattice in pivot order. Returns the canonical
    /// remainder and the multipliers used on each echelon row.
    pub fn reduce(&self, v: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
        assert_eq!(v.len(), self.dim);
        let mut r = v.to_vec();
        let mut mult = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let q = r[p].div_floor(&row[p]);
            if !q.is_zero() {
                axpy(&mut r, &q, row);
            }
            mult.push(q);
        }
        (r, mult)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).0.iter().all(Zero::is_zero)
    }

    /// Some integer combination `c` of the generators with `Σ cᵢ genᵢ = v`.
    pub fn solve(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let (rem, mult) = self.reduce(v);
        if !rem.iter().all(Zero::is_zero) {
            return None;
        }
        let mut c = vec![BigInt::zero(); self.num_gens];
        for (q, t) in mult.iter().zip(&self.transform) {
            for (ci, ti) in c.iter_mut().zip(t) {
                *ci += q * ti;
            }
        }
        Some(c)
    }

    /// Whether two generating sets span the same lattice.
    pub fn same_lattice(&self, other: &Hnf) -> bool {
        self.dim == other.dim && self.rows == other.rows
    }

    /// Whether every basis row of `self` lies in `other`.
    pub fn is_sublattice_of(&self, other: &Hnf) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }
}
