//! Euler matrix, Coxeter transformation, null root and defect.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::Rationals;
use crate::matrix::Matrix;
use crate::quiver::{DimVector, Quiver};

/// Square integer matrix acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn new(n: usize, data: Vec<i64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: data.len(),
            });
        }
        Ok(IntMatrix { n, data })
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMatrix { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.n + c]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.data
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[i64]>::to_vec)
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        IntMatrix {
            n,
            data: (0..n * n).map(|k| self.get(k % n, k / n)).collect(),
        }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c) * v[c]).sum())
            .collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut data = vec![0; n * n];
        for r in 0..n {
            for c in 0..n {
                data[r * n + c] = (0..n).map(|k| self.get(r, k) * other.get(k, c)).sum();
            }
        }
        IntMatrix { n, data }
    }

    fn to_rational(&self) -> Matrix<BigRational> {
        Matrix::from_i64(&Rationals, self.n, self.n, &self.data).expect("square data")
    }

    fn from_rational(m: &Matrix<BigRational>) -> Result<Self> {
        let data = m
            .data()
            .iter()
            .map(|x| {
                if !x.is_integer() {
                    return Err(Error::Invariant(
                        "non-integral entry in an integer matrix".into(),
                    ));
                }
                x.to_integer()
                    .to_i64()
                    .ok_or_else(|| Error::Invariant("integer matrix entry overflows i64".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        IntMatrix::new(m.rows(), data)
    }
}

/// Integer invariants of a quiver: `E = I − A`, `Φ = −E⁻¹Eᵀ`, `Φ⁻¹`, and the null root
/// when the quiver is affine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerData {
    pub euler_matrix: IntMatrix,
    pub coxeter_matrix: IntMatrix,
    pub coxeter_inverse: IntMatrix,
    pub null_root: Option<DimVector>,
    pub is_affine: bool,
}

impl EulerData {
    pub fn compute(quiver: &Quiver) -> Result<Self> {
        let n = quiver.vertex_count();
        let counts = quiver.arrow_counts();
        let mut e = IntMatrix::identity(n);
        for (i, row) in counts.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                e.data[i * n + j] -= c;
            }
        }
        let k = Rationals;
        let e_q = e.to_rational();
        let et_q = e.transpose().to_rational();
        let e_inv = e_q
            .inverse(&k)
            .ok_or_else(|| Error::Invariant("Euler matrix is singular".into()))?;
        let et_inv = et_q
            .inverse(&k)
            .ok_or_else(|| Error::Invariant("Euler matrix is singular".into()))?;
        let neg = |m: Matrix<BigRational>| m.map(|x| -x);
        let coxeter = IntMatrix::from_rational(&neg(e_inv.mul(&k, &et_q)?))?;
        let coxeter_inverse = IntMatrix::from_rational(&neg(et_inv.mul(&k, &e_q)?))?;
        if coxeter.mul(&coxeter_inverse) != IntMatrix::identity(n) {
            return Err(Error::Invariant(
                "Coxeter matrix times its inverse is not the identity".into(),
            ));
        }
        let null_root = affine_null_root(&e)?;
        if let Some(delta) = &null_root {
            let d = delta.to_i64();
            if coxeter.apply(&d) != d {
                return Err(Error::Invariant(
                    "null root is not fixed by the Coxeter transformation".into(),
                ));
            }
        }
        Ok(EulerData {
            euler_matrix: e,
            coxeter_matrix: coxeter,
            coxeter_inverse,
            is_affine: null_root.is_some(),
            null_root,
        })
    }

    /// `xᵀ E y`.
    pub fn form(&self, x: &[i64], y: &[i64]) -> i64 {
        let ey = self.euler_matrix.apply(y);
        x.iter().zip(&ey).map(|(a, b)| a * b).sum()
    }
}

/// The symmetrised form `B = E + Eᵀ` must be positive semidefinite with a
/// one-dimensional kernel spanned by a strictly positive vector.
fn affine_null_root(e: &IntMatrix) -> Result<Option<DimVector>> {
    let n = e.size();
    if n == 0 {
        return Ok(None);
    }
    let b = IntMatrix {
        n,
        data: (0..n * n)
            .map(|k| e.data[k] + e.transpose().data[k])
            .collect(),
    };
    let k = Rationals;
    // Exponential in n; fine at the sizes handled here.
    for mask in 1u32..(1u32 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let b = &b;
        let minor: Vec<i64> = idx
            .iter()
            .flat_map(|&r| idx.iter().map(move |&c| b.get(r, c)))
            .collect();
        let det = Matrix::from_i64(&k, idx.len(), idx.len(), &minor)?.determinant(&k)?;
        if det.is_negative() {
            return Ok(None);
        }
    }
    let kernel = b.to_rational().kernel_basis(&k);
    if kernel.rows() != 1 {
        return Ok(None);
    }
    let row = kernel.row(0);
    let lcm = row
        .iter()
        .fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = row
        .iter()
        .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    for x in &mut ints {
        *x /= &gcd;
    }
    if ints.iter().all(|x| x.is_negative()) {
        for x in &mut ints {
            *x = -x.clone();
        }
    }
    if !ints.iter().all(|x| x.is_positive()) {
        return Ok(None);
    }
    let root = ints
        .iter()
        .map(|x| {
            x.to_usize()
                .ok_or_else(|| Error::Invariant("null root entry too large".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Some(DimVector(root)))
}

/// The defect `∂(d) = ⟨δ, d⟩`: negative on preprojectives, zero on regulars, positive on
/// preinjectives.
pub fn defect(ed: &EulerData, d: &[i64]) -> Result<i64> {
    let delta = ed.null_root.as_ref().ok_or(Error::NotAffine)?;
    if d.len() != delta.len() {
        return Err(Error::DimensionMismatch {
            expected: delta.len(),
            found: d.len(),
        });
    }
    Ok(ed.form(&delta.to_i64(), d))
}

/// `Φ^power · d`; negative powers use `Φ⁻¹`.
pub fn coxeter_apply(ed: &EulerData, d: &[i64], power: i32) -> Vec<i64> {
    let m = if power >= 0 {
        &ed.coxeter_matrix
    } else {
        &ed.coxeter_inverse
    };
    (0..power.unsigned_abs()).fold(d.to_vec(), |v, _| m.apply(&v))
}
