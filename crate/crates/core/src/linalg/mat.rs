//! Dense matrices over one of the two coefficient fields.
//!
//! `Mat<T>` is the generic workhorse; `Matrix` is the tagged public wrapper
//! enforcing the single-field invariant on mixed input.

use num::rational::BigRational;
use num::traits::Zero;

use super::field::{FieldKind, FieldValue, FpElt, Scalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Mat<T> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<T>,
}

pub type QMat = Mat<BigRational>;
pub type FMat = Mat<FpElt>;

impl<T: Scalar> Mat<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zero(rows: usize, cols: usize, model: &T) -> Self {
        Mat {
            rows,
            cols,
            data: vec![model.zero_like(); rows * cols],
        }
    }

    pub fn identity(n: usize, model: &T) -> Self {
        let mut m = Self::zero(n, n, model);
        for i in 0..n {
            *m.at_mut(i, i) = model.one_like();
        }
        m
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut T {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        if self.data.is_empty() {
            return Mat {
                rows: self.cols,
                cols: self.rows,
                data: Vec::new(),
            };
        }
        let model = self.model();
        let mut out = Self::zero(self.cols, self.rows, &model);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    /// A sample element used to mint zeros/ones of the right field.
    pub fn model(&self) -> T {
        self.data
            .first()
            .cloned()
            .expect("matrix must be nonempty to carry a field")
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        if self.rows == 0 || other.cols == 0 {
            return Mat {
                rows: self.rows,
                cols: other.cols,
                data: Vec::new(),
            };
        }
        if self.data.is_empty() || other.data.is_empty() {
            // inner dimension zero: the zero matrix of the right shape
            let model = self
                .data
                .first()
                .or(other.data.first())
                .cloned()
                .expect("a model element exists when both shapes are nonzero");
            return Self::zero(self.rows, other.cols, &model);
        }
        let model = self.model();
        let zero = model.zero_like();
        let mut out = Self::zero(self.rows, other.cols, &model);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j).clone();
                    *out.at_mut(i, j) = cur.add(&a.mul(b));
                }
            }
        }
        let _ = zero;
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a = a.add(b);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a = a.sub(b);
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.mul(c);
        }
        out
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let model = self.model();
        let mut out = vec![model.zero_like(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() || v[j].is_zero() {
                    continue;
                }
                out[i] = out[i].add(&a.mul(&v[j]));
            }
        }
        out
    }

    pub fn trace(&self) -> T {
        assert_eq!(self.rows, self.cols);
        let model = self.model();
        let mut t = model.zero_like();
        for i in 0..self.rows {
            t = t.add(self.at(i, i));
        }
        t
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert_eq!(self.rows, self.cols);
        let model = self.model();
        let mut acc = Self::identity(self.rows, &model);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl QMat {
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| super::field::big_rational_from(x)).collect())
                .collect(),
        )
    }

    /// Entrywise reduction mod ell. Fails if any denominator hits ell.
    pub fn reduce_mod(&self, ell: u64) -> Result<FMat> {
        let mut data = Vec::with_capacity(self.data.len());
        for q in &self.data {
            data.push(super::field::rational_mod(q, ell)?);
        }
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|q| q.is_integer())
    }
}

impl FMat {
    pub fn from_u64_rows(ell: u64, rows: &[Vec<u64>]) -> Self {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| FpElt { value: x % ell, ell }).collect())
                .collect(),
        )
    }

    pub fn ell(&self) -> u64 {
        self.model().ell
    }
}

/// Public tagged matrix, per the library's two-field contract.
#[derive(Debug, Clone, PartialEq)]
pub enum Matrix {
    Rational(QMat),
    Fp(FMat),
}

impl Matrix {
    /// Build from a dense row-major entry list. All entries must share one
    /// field; mixed fields are rejected as malformed input.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<FieldValue>) -> Result<Matrix> {
        if entries.len() != rows * cols {
            return Err(Error::Malformed(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if entries.is_empty() {
            return Err(Error::Malformed("empty matrix carries no field".into()));
        }
        let kind = entries[0].kind();
        if entries.iter().any(|e| e.kind() != kind) {
            return Err(Error::Malformed("mixed-field entries".into()));
        }
        Ok(match kind {
            FieldKind::Rational => {
                let data = entries
                    .into_iter()
                    .map(|e| match e {
                        FieldValue::Rational(q) => q,
                        _ => unreachable!(),
                    })
                    .collect();
                Matrix::Rational(Mat { rows, cols, data })
            }
            FieldKind::Fp(ell) => {
                let data = entries
                    .into_iter()
                    .map(|e| match e {
                        FieldValue::Fp { value, .. } => FpElt { value, ell },
                        _ => unreachable!(),
                    })
                    .collect();
                Matrix::Fp(Mat { rows, cols, data })
            }
        })
    }

    pub fn kind(&self) -> FieldKind {
        match self {
            Matrix::Rational(_) => FieldKind::Rational,
            Matrix::Fp(m) => FieldKind::Fp(m.ell()),
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        match self {
            Matrix::Rational(m) => (m.rows, m.cols),
            Matrix::Fp(m) => (m.rows, m.cols),
        }
    }
}

/// Dot product of coordinate slices.
pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    assert_eq!(a.len(), b.len());
    let mut acc = a[0].zero_like();
    for (x, y) in a.iter().zip(b.iter()) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc.add(&x.mul(y));
        }
    }
    acc
}

pub fn q_zero() -> BigRational {
    BigRational::zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::big_rational_from as br;

    #[test]
    fn product_and_trace() {
        let a = QMat::from_i64_rows(&[vec![1, 2], vec![3, 4]]);
        let b = QMat::from_i64_rows(&[vec![0, 1], vec![1, 0]]);
        let ab = a.mul(&b);
        assert_eq!(ab, QMat::from_i64_rows(&[vec![2, 1], vec![4, 3]]));
        assert_eq!(a.trace(), br(5));
    }

    #[test]
    fn mixed_field_rejected() {
        let entries = vec![
            FieldValue::from_int(1, FieldKind::Rational),
            FieldValue::from_int(1, FieldKind::Fp(3)),
        ];
        assert!(Matrix::from_entries(1, 2, entries).is_err());
    }

    #[test]
    fn fp_pow() {
        let m = FMat::from_u64_rows(5, &[vec![0, 1], vec![4, 0]]);
        // m^2 = -I mod 5, so m^4 = I
        let id = FMat::identity(2, &FpElt { value: 0, ell: 5 });
        assert_eq!(m.pow(4), id);
    }
}
