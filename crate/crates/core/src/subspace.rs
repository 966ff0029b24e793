//! Subspaces in canonical (RREF) coordinates and their enumeration over `F_q`.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::matrix::Matrix;

/// A subspace of `K^ambient_dim`, stored as its reduced row echelon basis.
///
/// The RREF basis is the unique representative of the row space, so derived
/// equality is equality of subspaces. The derived order compares pivot sets first and
/// then the entries row by row, which is the order of [`enumerate_subspaces`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubspaceBasis<E> {
    ambient_dim: usize,
    pivots: Vec<usize>,
    basis: Matrix<E>,
}

impl<E: Clone + PartialEq> SubspaceBasis<E> {
    /// The row space of `rows`.
    pub fn span<K: Field<Elem = E>>(field: &K, rows: &Matrix<E>) -> Self {
        let ambient_dim = rows.cols();
        let rref = rows.rref(field);
        let rank = rref.rank();
        let data = rref.matrix.data()[..rank * ambient_dim].to_vec();
        SubspaceBasis {
            ambient_dim,
            pivots: rref.pivots,
            basis: Matrix::new(rank, ambient_dim, data).expect("truncated rref"),
        }
    }

    pub fn span_vectors<K: Field<Elem = E>>(
        field: &K,
        ambient_dim: usize,
        vectors: Vec<Vec<E>>,
    ) -> Result<Self> {
        Ok(Self::span(field, &Matrix::from_rows(ambient_dim, vectors)?))
    }

    pub fn zero(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            pivots: Vec::new(),
            basis: Matrix::new(0, ambient_dim, Vec::new()).expect("empty matrix"),
        }
    }

    pub fn full<K: Field<Elem = E>>(field: &K, ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            pivots: (0..ambient_dim).collect(),
            basis: Matrix::identity(field, ambient_dim),
        }
    }

    /// Accepts `basis` only if it already is a full-rank RREF matrix.
    pub fn from_canonical<K: Field<Elem = E>>(field: &K, basis: Matrix<E>) -> Result<Self> {
        let rref = basis.rref(field);
        if rref.rank() != basis.rows() || rref.matrix != basis {
            return Err(Error::InvalidInput(
                "basis is not in reduced row echelon form".into(),
            ));
        }
        Ok(SubspaceBasis {
            ambient_dim: basis.cols(),
            pivots: rref.pivots,
            basis,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Matrix<E> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns not used as pivots; the unit vectors there complete the basis.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient_dim)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Subtracts the basis component of `v`, leaving zeros in every pivot column.
    pub fn residual<K: Field<Elem = E>>(&self, field: &K, v: &[E]) -> Result<Vec<E>> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        let mut w = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let coeff = w[p].clone();
            if field.is_zero(&coeff) {
                continue;
            }
            for (c, x) in self.basis.row(r).iter().enumerate() {
                w[c] = field.sub(&w[c], &field.mul(&coeff, x));
            }
        }
        Ok(w)
    }

    /// Coordinates of `v` in the basis; only meaningful when `v` lies in the space.
    pub fn coordinates(&self, v: &[E]) -> Vec<E> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    pub fn contains_vector<K: Field<Elem = E>>(&self, field: &K, v: &[E]) -> Result<bool> {
        Ok(self.residual(field, v)?.iter().all(|x| field.is_zero(x)))
    }

    /// Whether `other ⊆ self`.
    pub fn contains<K: Field<Elem = E>>(&self, field: &K, other: &Self) -> Result<bool> {
        if other.ambient_dim != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        if other.dim() > self.dim() {
            return Ok(false);
        }
        for row in other.basis.row_iter() {
            if !self.contains_vector(field, row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The image of this subspace under `map` (a `target × ambient` matrix).
    pub fn image<K: Field<Elem = E>>(&self, field: &K, map: &Matrix<E>) -> Result<Self> {
        let images = self
            .basis
            .row_iter()
            .map(|row| map.mul_vec(field, row))
            .collect::<Result<Vec<_>>>()?;
        Self::span_vectors(field, map.rows(), images)
    }
}

/// Lexicographically ordered `size`-subsets of `0..n`.
pub(crate) fn combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if size > n {
        return out;
    }
    let mut current: Vec<usize> = (0..size).collect();
    loop {
        out.push(current.clone());
        let Some(i) = (0..size).rev().find(|&i| current[i] < n - size + i) else {
            break;
        };
        current[i] += 1;
        for j in i + 1..size {
            current[j] = current[j - 1] + 1;
        }
    }
    out
}

/// Every `dim`-dimensional subspace of `F_q^ambient_dim`, each exactly once.
///
/// Subspaces are grouped by pivot set (Schubert cell) in lexicographic order; within a
/// cell the free entries run through `F_q` like an odometer, row-major with the last
/// free entry turning fastest. The output is therefore sorted by the order of
/// [`SubspaceBasis`].
pub fn enumerate_subspaces(
    ambient_dim: usize,
    dim: usize,
    field: &PrimeField,
) -> Result<Vec<SubspaceBasis<u32>>> {
    if dim > ambient_dim {
        return Err(Error::InvalidInput(alloc::format!(
            "subspace dimension {dim} exceeds ambient dimension {ambient_dim}"
        )));
    }
    let q = field.modulus();
    let mut out = Vec::new();
    for pivots in combinations(ambient_dim, dim) {
        out.extend(schubert_cell(ambient_dim, &pivots, q));
    }
    Ok(out)
}

/// The subspaces whose RREF has the given pivot columns.
pub fn schubert_cell(ambient_dim: usize, pivots: &[usize], q: u32) -> Vec<SubspaceBasis<u32>> {
    let free: Vec<(usize, usize)> = pivots
        .iter()
        .enumerate()
        .flat_map(|(r, &p)| {
            (p + 1..ambient_dim)
                .filter(|c| !pivots.contains(c))
                .map(move |c| (r, c))
        })
        .collect();
    let mut template = Matrix::filled(pivots.len(), ambient_dim, 0u32);
    for (r, &p) in pivots.iter().enumerate() {
        template.set(r, p, 1);
    }
    let mut digits = alloc::vec![0u32; free.len()];
    let mut out = Vec::new();
    loop {
        let mut basis = template.clone();
        for (&(r, c), &d) in free.iter().zip(&digits) {
            basis.set(r, c, d);
        }
        out.push(SubspaceBasis {
            ambient_dim,
            pivots: pivots.to_vec(),
            basis,
        });
        let Some(i) = (0..digits.len()).rev().find(|&i| digits[i] + 1 < q) else {
            break;
        };
        digits[i] += 1;
        for d in &mut digits[i + 1..] {
            *d = 0;
        }
    }
    out
}

/// The number of `e`-dimensional subspaces of `F_q^d`.
pub fn gaussian_binomial(d: usize, e: usize, q: u32) -> BigUint {
    if e > d {
        return BigUint::default();
    }
    let q = BigUint::from(q);
    let one = BigUint::one();
    // After step i the accumulator equals [d choose i+1]_q, so each division is exact.
    (0..e).fold(BigUint::one(), |acc, i| {
        let num: BigUint = Pow::pow(&q, (d - i) as u32) - &one;
        let den: BigUint = Pow::pow(&q, (i + 1) as u32) - &one;
        acc * num / den
    })
}
