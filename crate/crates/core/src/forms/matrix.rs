//! Vectors and square matrices over `Λ`, plus a division-free determinant.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::FormError;
use crate::ring::GroupRingElement;

/// Coordinates of a module element in a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<GroupRingElement>", into = "Vec<GroupRingElement>")]
pub struct RingVector {
    m: usize,
    coords: Vec<GroupRingElement>,
}

impl TryFrom<Vec<GroupRingElement>> for RingVector {
    type Error = FormError;
    fn try_from(coords: Vec<GroupRingElement>) -> Result<Self, FormError> {
        Self::new(coords)
    }
}

impl From<RingVector> for Vec<GroupRingElement> {
    fn from(v: RingVector) -> Self {
        v.coords
    }
}

impl RingVector {
    pub fn new(coords: Vec<GroupRingElement>) -> Result<Self, FormError> {
        let Some(first) = coords.first() else {
            return Err(FormError::DimensionMismatch { expected: 1, got: 0 });
        };
        let m = first.modulus();
        if let Some(bad) = coords.iter().find(|c| c.modulus() != m) {
            return Err(FormError::ModulusMismatch { left: m, right: bad.modulus() });
        }
        Ok(Self { m, coords })
    }

    pub fn zero(m: usize, len: usize) -> Self {
        Self { m, coords: vec![GroupRingElement::zero(m); len] }
    }

    /// The standard basis vector with a `1` at `index`.
    pub fn unit(m: usize, len: usize, index: usize) -> Self {
        let mut v = Self::zero(m, len);
        v.coords[index] = GroupRingElement::one(m);
        v
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[GroupRingElement] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &GroupRingElement {
        &self.coords[i]
    }

    pub fn set(&mut self, i: usize, x: GroupRingElement) {
        assert_eq!(x.modulus(), self.m);
        self.coords[i] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(GroupRingElement::is_zero)
    }

    fn check(&self, other: &Self) -> Result<(), FormError> {
        if self.m != other.m {
            return Err(FormError::ModulusMismatch { left: self.m, right: other.m });
        }
        if self.len() != other.len() {
            return Err(FormError::DimensionMismatch { expected: self.len(), got: other.len() });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, FormError> {
        self.check(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(Self { m: self.m, coords })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, FormError> {
        self.check(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Ok(Self { m: self.m, coords })
    }

    /// Left scalar multiple `c·x`.
    pub fn scale(&self, c: &GroupRingElement) -> Self {
        Self { m: self.m, coords: self.coords.iter().map(|x| c * x).collect() }
    }
}

/// Square matrix over `Λ`. Column `j` holds the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<GroupRingElement>>", into = "Vec<Vec<GroupRingElement>>")]
pub struct RingMatrix {
    m: usize,
    rows: Vec<Vec<GroupRingElement>>,
}

impl TryFrom<Vec<Vec<GroupRingElement>>> for RingMatrix {
    type Error = FormError;
    fn try_from(rows: Vec<Vec<GroupRingElement>>) -> Result<Self, FormError> {
        Self::from_rows(rows)
    }
}

impl From<RingMatrix> for Vec<Vec<GroupRingElement>> {
    fn from(mat: RingMatrix) -> Self {
        mat.rows
    }
}

impl RingMatrix {
    pub fn from_rows(rows: Vec<Vec<GroupRingElement>>) -> Result<Self, FormError> {
        let n = rows.len();
        let Some(m) = rows.first().and_then(|r| r.first()).map(GroupRingElement::modulus) else {
            return Err(FormError::DimensionMismatch { expected: 1, got: 0 });
        };
        for row in &rows {
            if row.len() != n {
                return Err(FormError::DimensionMismatch { expected: n, got: row.len() });
            }
            if let Some(bad) = row.iter().find(|x| x.modulus() != m) {
                return Err(FormError::ModulusMismatch { left: m, right: bad.modulus() });
            }
        }
        Ok(Self { m, rows })
    }

    pub fn from_i64_rows(m: usize, rows: &[&[&[i64]]]) -> Result<Self, FormError> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|c| GroupRingElement::from_i64s(m, c)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(rows)
    }

    pub fn from_columns(cols: &[RingVector]) -> Result<Self, FormError> {
        let n = cols.len();
        for c in cols {
            if c.len() != n {
                return Err(FormError::DimensionMismatch { expected: n, got: c.len() });
            }
        }
        let rows = (0..n).map(|i| cols.iter().map(|c| c.coord(i).clone()).collect()).collect();
        Self::from_rows(rows)
    }

    pub fn identity(m: usize, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { GroupRingElement::one(m) } else { GroupRingElement::zero(m) })
                    .collect()
            })
            .collect();
        Self { m, rows }
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &GroupRingElement {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: GroupRingElement) {
        assert_eq!(x.modulus(), self.m);
        self.rows[i][j] = x;
    }

    pub fn rows(&self) -> &[Vec<GroupRingElement>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> RingVector {
        RingVector { m: self.m, coords: self.rows.iter().map(|r| r[j].clone()).collect() }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.m, self.size())
    }

    pub fn transpose(&self) -> Self {
        let n = self.size();
        let rows = (0..n).map(|i| (0..n).map(|j| self.rows[j][i].clone()).collect()).collect();
        Self { m: self.m, rows }
    }

    /// Entrywise involution.
    pub fn conjugate(&self) -> Self {
        let rows = self.rows.iter().map(|r| r.iter().map(GroupRingElement::involution).collect()).collect();
        Self { m: self.m, rows }
    }

    /// Conjugate transpose `M†`.
    pub fn dagger(&self) -> Self {
        self.transpose().conjugate()
    }

    fn check(&self, other: &Self) -> Result<(), FormError> {
        if self.m != other.m {
            return Err(FormError::ModulusMismatch { left: self.m, right: other.m });
        }
        if self.size() != other.size() {
            return Err(FormError::DimensionMismatch { expected: self.size(), got: other.size() });
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, FormError> {
        self.check(other)?;
        let n = self.size();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(GroupRingElement::zero(self.m), |acc, k| {
                            &acc + &(&self.rows[i][k] * &other.rows[k][j])
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(Self { m: self.m, rows })
    }

    pub fn apply(&self, v: &RingVector) -> Result<RingVector, FormError> {
        if v.modulus() != self.m {
            return Err(FormError::ModulusMismatch { left: self.m, right: v.modulus() });
        }
        if v.len() != self.size() {
            return Err(FormError::DimensionMismatch { expected: self.size(), got: v.len() });
        }
        let coords = self
            .rows
            .iter()
            .map(|r| {
                r.iter().zip(v.coords()).fold(GroupRingElement::zero(self.m), |acc, (a, x)| &acc + &(a * x))
            })
            .collect();
        Ok(RingVector { m: self.m, coords })
    }

    /// Places `block` into rows and columns `indices`, identity elsewhere.
    pub fn embed(&self, n: usize, indices: &[usize]) -> Result<Self, FormError> {
        if indices.len() != self.size() {
            return Err(FormError::DimensionMismatch { expected: self.size(), got: indices.len() });
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= n) {
            return Err(FormError::BadIndex { index: bad, size: n });
        }
        let mut out = Self::identity(self.m, n);
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                out.rows[i][j] = self.rows[a][b].clone();
            }
        }
        Ok(out)
    }
}

/// Determinant over the commutative ring `Λ` by cofactor expansion along
/// rows, memoized on the set of columns still available. Uses only ring
/// addition and multiplication.
pub fn ring_det(mat: &RingMatrix) -> GroupRingElement {
    let n = mat.size();
    assert!(n < usize::BITS as usize, "matrix too large");
    let mut memo: HashMap<usize, GroupRingElement> = HashMap::new();
    det_rec(mat, 0, (1usize << n) - 1, &mut memo)
}

fn det_rec(
    mat: &RingMatrix,
    row: usize,
    cols: usize,
    memo: &mut HashMap<usize, GroupRingElement>,
) -> GroupRingElement {
    let m = mat.modulus();
    if cols == 0 {
        return GroupRingElement::one(m);
    }
    if let Some(d) = memo.get(&cols) {
        return d.clone();
    }
    let mut acc = GroupRingElement::zero(m);
    let mut sign_negative = false;
    for j in 0..mat.size() {
        if cols & (1 << j) == 0 {
            continue;
        }
        let entry = mat.get(row, j);
        if !entry.is_zero() {
            let minor = det_rec(mat, row + 1, cols & !(1 << j), memo);
            let term = entry * &minor;
            acc = if sign_negative { &acc - &term } else { &acc + &term };
        }
        sign_negative = !sign_negative;
    }
    memo.insert(cols, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(m: usize, c: &[i64]) -> GroupRingElement {
        GroupRingElement::from_i64s(m, c).unwrap()
    }

    #[test]
    fn identity_and_products() {
        let m = 3;
        let a = RingMatrix::from_i64_rows(m, &[&[&[1, 1, 0], &[0, 0, 1]], &[&[2, 0, 0], &[1, 0, -1]]]).unwrap();
        let id = RingMatrix::identity(m, 2);
        assert_eq!(a.try_mul(&id).unwrap(), a);
        assert_eq!(id.try_mul(&a).unwrap(), a);
        assert!(ring_det(&id).is_one());
    }

    #[test]
    fn det_of_two_by_two() {
        let m = 4;
        let a = el(m, &[1, 2, 0, 0]);
        let b = el(m, &[0, 1, 0, 0]);
        let c = el(m, &[0, 0, 3, 0]);
        let d = el(m, &[1, 0, 0, 1]);
        let mat = RingMatrix::from_rows(vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]]).unwrap();
        assert_eq!(ring_det(&mat), &(&a * &d) - &(&b * &c));
    }

    #[test]
    fn det_swaps_sign_on_row_exchange() {
        let m = 2;
        let mat = RingMatrix::from_i64_rows(
            m,
            &[&[&[0, 0], &[1, 0], &[0, 0]], &[&[1, 0], &[0, 0], &[0, 0]], &[&[0, 0], &[0, 0], &[0, 1]]],
        )
        .unwrap();
        assert_eq!(ring_det(&mat), el(m, &[0, -1]));
    }

    #[test]
    fn apply_uses_columns_as_images() {
        let m = 2;
        let mat = RingMatrix::from_i64_rows(m, &[&[&[1, 0], &[0, 1]], &[&[0, 0], &[1, 0]]]).unwrap();
        let e1 = RingVector::unit(m, 2, 1);
        assert_eq!(mat.apply(&e1).unwrap(), mat.column(1));
    }

    #[test]
    fn vector_json_is_a_list_of_elements() {
        let v = RingVector::unit(3, 2, 0);
        let j = serde_json::to_value(&v).unwrap();
        assert_eq!(j[0]["coeffs"], serde_json::json!([1, 0, 0]));
        let back: RingVector = serde_json::from_value(j).unwrap();
        assert_eq!(back, v);
        let mixed = serde_json::json!([{"m": 2, "coeffs": [1, 0]}, {"m": 3, "coeffs": [1, 0, 0]}]);
        assert!(serde_json::from_value::<RingVector>(mixed).is_err());
    }
}
