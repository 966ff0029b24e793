//! Dense row-major matrices over an exact [`Field`].
//!
//! Elements carry no field context, so every arithmetic method takes the field
//! explicitly.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref<E> {
    pub matrix: Matrix<E>,
    pub pivots: Vec<usize>,
}

impl<E> Rref<E> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl<E: Clone> Matrix<E> {
    pub fn new(rows: usize, cols: usize, data: Vec<E>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from rows; `cols` is needed to describe `0 × cols` matrices.
    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[E] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: E) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[E]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        self.row_iter().map(|r| r.to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<E> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn map<F, T>(&self, f: F) -> Matrix<T>
    where
        F: FnMut(&E) -> T,
    {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<F, T>(&self, mut f: F) -> Result<Matrix<T>>
    where
        F: FnMut(usize, usize, &E) -> Result<T>,
    {
        let mut data = Vec::with_capacity(self.data.len());
        for (idx, e) in self.data.iter().enumerate() {
            // Non-empty data implies `cols > 0`.
            data.push(f(idx / self.cols, idx % self.cols, e)?);
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Block-diagonal sum `diag(self, other)`.
    pub fn block_diag(&self, other: &Self, zero: E) -> Self {
        let rows = self.rows + other.rows;
        let cols = self.cols + other.cols;
        let mut out = Matrix::filled(rows, cols, zero);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.set(self.rows + r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<E: Clone + PartialEq> Matrix<E> {
    pub fn zeros<K: Field<Elem = E>>(field: &K, rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, field.zero())
    }

    pub fn identity<K: Field<Elem = E>>(field: &K, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_i64<K: Field<Elem = E>>(
        field: &K,
        rows: usize,
        cols: usize,
        entries: &[i64],
    ) -> Result<Self> {
        Matrix::new(
            rows,
            cols,
            entries.iter().map(|&x| field.from_i64(x)).collect(),
        )
    }

    pub fn is_zero<K: Field<Elem = E>>(&self, field: &K) -> bool {
        self.data.iter().all(|x| field.is_zero(x))
    }

    pub fn mul<K: Field<Elem = E>>(&self, field: &K, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(field, self.rows, other.cols);
        for r in 0..self.rows {
            for s in 0..self.cols {
                let a = self.get(r, s);
                if field.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let acc = field.add(out.get(r, c), &field.mul(a, other.get(s, c)));
                    out.set(r, c, acc);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec<K: Field<Elem = E>>(&self, field: &K, v: &[E]) -> Result<Vec<E>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self
            .row_iter()
            .map(|row| {
                row.iter().zip(v).fold(field.zero(), |acc, (a, b)| {
                    field.add(&acc, &field.mul(a, b))
                })
            })
            .collect())
    }

    /// Gauss–Jordan elimination. The result is the unique reduced row echelon form
    /// of the row space, with zero rows kept at the bottom.
    pub fn rref<K: Field<Elem = E>>(&self, field: &K) -> Rref<E> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for col in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(pivot_row) = (lead..m.rows).find(|&r| !field.is_zero(m.get(r, col))) else {
                continue;
            };
            m.swap_rows(lead, pivot_row);
            let inv = field.inv(m.get(lead, col)).expect("pivot is nonzero");
            for c in col..m.cols {
                let v = field.mul(m.get(lead, c), &inv);
                m.set(lead, c, v);
            }
            for r in 0..m.rows {
                if r == lead {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if field.is_zero(&factor) {
                    continue;
                }
                for c in col..m.cols {
                    let v = field.sub(m.get(r, c), &field.mul(&factor, m.get(lead, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            lead += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank<K: Field<Elem = E>>(&self, field: &K) -> usize {
        self.rref(field).rank()
    }

    /// Rows form a basis of `{v : self · v = 0}`, one row per free column, in
    /// increasing order of the free column.
    pub fn kernel_basis<K: Field<Elem = E>>(&self, field: &K) -> Self {
        let Rref { matrix, pivots } = self.rref(field);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(field, free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, field.one());
            for (r, &p) in pivots.iter().enumerate() {
                out.set(k, p, field.neg(matrix.get(r, f)));
            }
        }
        out
    }

    pub fn determinant<K: Field<Elem = E>>(&self, field: &K) -> Result<E> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let mut m = self.clone();
        let mut det = field.one();
        for col in 0..m.cols {
            let Some(p) = (col..m.rows).find(|&r| !field.is_zero(m.get(r, col))) else {
                return Ok(field.zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = field.neg(&det);
            }
            let pivot = m.get(col, col).clone();
            det = field.mul(&det, &pivot);
            let inv = field.inv(&pivot).expect("pivot is nonzero");
            for r in col + 1..m.rows {
                let factor = field.mul(m.get(r, col), &inv);
                if field.is_zero(&factor) {
                    continue;
                }
                for c in col..m.cols {
                    let v = field.sub(m.get(r, c), &field.mul(&factor, m.get(col, c)));
                    m.set(r, c, v);
                }
            }
        }
        Ok(det)
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse<K: Field<Elem = E>>(&self, field: &K) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, field.one());
        }
        let Rref { matrix, pivots } = aug.rref(field);
        if pivots.len() < n || pivots.last().is_some_and(|&p| p >= n) {
            return None;
        }
        let mut out = Matrix::zeros(field, n, n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, matrix.get(r, n + c).clone());
            }
        }
        Some(out)
    }
}
