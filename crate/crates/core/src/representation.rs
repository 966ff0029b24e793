//! Representations of a quiver over an exact field, and `Hom`/`Ext¹` dimensions.
//!
//! Path algebras of acyclic quivers are hereditary, so for representations `M`, `N`
//! the complex
//!
//! ```text
//! 0 → Hom(M, N) → ⊕ᵢ Hom(Mᵢ, Nᵢ) --Δ--> ⊕_{a: i→j} Hom(Mᵢ, Nⱼ) → Ext¹(M, N) → 0
//! ```
//!
//! with `Δ(f)_a = f_j·M_a − N_a·f_i` is exact; both dimensions come from the rank of `Δ`.

use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Rationals};
use crate::matrix::Matrix;
use crate::quiver::{euler_form, DimVector, Quiver};
use crate::subspace::SubspaceBasis;

#[derive(Debug, Clone, PartialEq)]
pub struct Representation<K: Field> {
    quiver: Arc<Quiver>,
    field: K,
    dims: DimVector,
    maps: Vec<Matrix<K::Elem>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HomExt {
    pub hom_dim: usize,
    pub ext_dim: usize,
}

impl<K: Field> Representation<K> {
    /// `maps[a]` is the matrix of arrow `a: i → j`, of shape `dims[j] × dims[i]`.
    pub fn new(
        quiver: Arc<Quiver>,
        field: K,
        dims: DimVector,
        maps: Vec<Matrix<K::Elem>>,
    ) -> Result<Self> {
        if dims.len() != quiver.vertex_count() {
            return Err(Error::DimensionMismatch {
                expected: quiver.vertex_count(),
                found: dims.len(),
            });
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::DimensionMismatch {
                expected: quiver.arrows().len(),
                found: maps.len(),
            });
        }
        for (arrow, m) in quiver.arrows().iter().zip(&maps) {
            let expected = (dims[arrow.target], dims[arrow.source]);
            if m.shape() != expected {
                return Err(Error::ShapeMismatch {
                    arrow: arrow.id.clone(),
                    expected_rows: expected.0,
                    expected_cols: expected.1,
                    rows: m.rows(),
                    cols: m.cols(),
                });
            }
            if !m.data().iter().all(|x| field.is_canonical(x)) {
                return Err(Error::InvalidInput(alloc::format!(
                    "arrow {}: entry outside the field",
                    arrow.id
                )));
            }
        }
        Ok(Representation {
            quiver,
            field,
            dims,
            maps,
        })
    }

    pub fn zero(quiver: Arc<Quiver>, field: K) -> Self {
        let n = quiver.vertex_count();
        let maps = quiver
            .arrows()
            .iter()
            .map(|_| Matrix::zeros(&field, 0, 0))
            .collect();
        Representation {
            quiver,
            field,
            dims: DimVector::zero(n),
            maps,
        }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix<K::Elem>] {
        &self.maps
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.quiver != other.quiver {
            return Err(Error::QuiverMismatch);
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    fn check_spaces(&self, spaces: &[SubspaceBasis<K::Elem>]) -> Result<()> {
        if spaces.len() != self.dims.len() {
            return Err(Error::DimensionMismatch {
                expected: self.dims.len(),
                found: spaces.len(),
            });
        }
        for (i, s) in spaces.iter().enumerate() {
            if s.ambient_dim() != self.dims[i] {
                return Err(Error::DimensionMismatch {
                    expected: self.dims[i],
                    found: s.ambient_dim(),
                });
            }
        }
        Ok(())
    }

    /// Whether `M_a(spaces[i]) ⊆ spaces[j]` for every arrow `a: i → j`.
    pub fn is_subrep(&self, spaces: &[SubspaceBasis<K::Elem>]) -> Result<bool> {
        self.check_spaces(spaces)?;
        for (arrow, m) in self.quiver.arrows().iter().zip(&self.maps) {
            let target = &spaces[arrow.target];
            for v in spaces[arrow.source].basis().row_iter() {
                if !target.contains_vector(&self.field, &m.mul_vec(&self.field, v)?)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The subrepresentation on `spaces` and the quotient by it.
    ///
    /// The sub uses the RREF bases. The quotient uses the images of the unit vectors
    /// at the non-pivot columns, which complete each RREF basis to a basis of the
    /// ambient space.
    pub fn sub_quotient(&self, spaces: &[SubspaceBasis<K::Elem>]) -> Result<(Self, Self)> {
        if !self.is_subrep(spaces)? {
            return Err(Error::NotSubrepresentation);
        }
        let k = &self.field;
        let sub_dims = DimVector(spaces.iter().map(SubspaceBasis::dim).collect());
        let quot_dims = self
            .dims
            .checked_sub(&sub_dims)
            .expect("subspace dims bounded by ambient");
        let mut sub_maps = Vec::with_capacity(self.maps.len());
        let mut quot_maps = Vec::with_capacity(self.maps.len());
        for (arrow, m) in self.quiver.arrows().iter().zip(&self.maps) {
            let (src, tgt) = (&spaces[arrow.source], &spaces[arrow.target]);
            let mut sub = Matrix::zeros(k, tgt.dim(), src.dim());
            for (c, v) in src.basis().row_iter().enumerate() {
                let image = m.mul_vec(k, v)?;
                for (r, x) in tgt.coordinates(&image).into_iter().enumerate() {
                    sub.set(r, c, x);
                }
            }
            let src_free = src.non_pivots();
            let tgt_free = tgt.non_pivots();
            let mut quot = Matrix::zeros(k, tgt_free.len(), src_free.len());
            for (c, &col) in src_free.iter().enumerate() {
                let rest = tgt.residual(k, &m.column(col))?;
                for (r, &row) in tgt_free.iter().enumerate() {
                    quot.set(r, c, rest[row].clone());
                }
            }
            sub_maps.push(sub);
            quot_maps.push(quot);
        }
        let sub = Representation {
            quiver: self.quiver.clone(),
            field: self.field.clone(),
            dims: sub_dims,
            maps: sub_maps,
        };
        let quot = Representation {
            quiver: self.quiver.clone(),
            field: self.field.clone(),
            dims: quot_dims,
            maps: quot_maps,
        };
        Ok((sub, quot))
    }

    /// Conjugates by a change of basis `g_i` at every vertex: `M_a ↦ g_j M_a g_i⁻¹`.
    pub fn change_basis(&self, bases: &[Matrix<K::Elem>]) -> Result<Self> {
        let k = &self.field;
        let inverses = bases
            .iter()
            .map(|g| {
                g.inverse(k)
                    .ok_or_else(|| Error::InvalidInput("singular change of basis".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let maps = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(a, m)| bases[a.target].mul(k, m)?.mul(k, &inverses[a.source]))
            .collect::<Result<Vec<_>>>()?;
        Representation::new(
            self.quiver.clone(),
            self.field.clone(),
            self.dims.clone(),
            maps,
        )
    }
}

/// Block-diagonal direct sum.
pub fn direct_sum<K: Field>(
    m: &Representation<K>,
    n: &Representation<K>,
) -> Result<Representation<K>> {
    m.check_compatible(n)?;
    let maps = m
        .maps
        .iter()
        .zip(&n.maps)
        .map(|(a, b)| a.block_diag(b, m.field.zero()))
        .collect();
    Representation::new(m.quiver.clone(), m.field.clone(), m.dims.add(&n.dims), maps)
}

/// `dim Hom(m, n)` and `dim Ext¹(m, n)`.
pub fn hom_ext<K: Field>(m: &Representation<K>, n: &Representation<K>) -> Result<HomExt> {
    m.check_compatible(n)?;
    let k = &m.field;
    let quiver = &m.quiver;
    let vertices = quiver.vertex_count();
    // f_i is an n_i × m_i block; entry (r, c) sits at offset[i] + r·m_i + c.
    let mut offset = Vec::with_capacity(vertices + 1);
    offset.push(0);
    for i in 0..vertices {
        offset.push(offset[i] + n.dims[i] * m.dims[i]);
    }
    let domain = offset[vertices];
    let codomain: usize = quiver
        .arrows()
        .iter()
        .map(|a| n.dims[a.target] * m.dims[a.source])
        .sum();
    let mut delta = Matrix::zeros(k, codomain, domain);
    let mut row0 = 0;
    for (idx, a) in quiver.arrows().iter().enumerate() {
        let (i, j) = (a.source, a.target);
        let (mi, mj, ni) = (m.dims[i], m.dims[j], n.dims[i]);
        let nj = n.dims[j];
        let (ma, na) = (&m.maps[idx], &n.maps[idx]);
        for r in 0..nj {
            for c in 0..mi {
                let row = row0 + r * mi + c;
                // (f_j · M_a)[r][c] = Σ_s f_j[r][s] · M_a[s][c]
                for s in 0..mj {
                    let col = offset[j] + r * mj + s;
                    let v = k.add(delta.get(row, col), ma.get(s, c));
                    delta.set(row, col, v);
                }
                // −(N_a · f_i)[r][c] = −Σ_s N_a[r][s] · f_i[s][c]
                for s in 0..ni {
                    let col = offset[i] + s * mi + c;
                    let v = k.sub(delta.get(row, col), na.get(r, s));
                    delta.set(row, col, v);
                }
            }
        }
        row0 += nj * mi;
    }
    let rank = delta.rank(k);
    let result = HomExt {
        hom_dim: domain - rank,
        ext_dim: codomain - rank,
    };
    let euler = euler_form(quiver, &m.dims, &n.dims)?;
    if result.hom_dim as i64 - result.ext_dim as i64 != euler {
        return Err(Error::Invariant(alloc::format!(
            "hom {} − ext {} ≠ Euler form {euler}",
            result.hom_dim,
            result.ext_dim
        )));
    }
    Ok(result)
}

/// `Ext¹(m, m) = 0`.
pub fn is_rigid<K: Field>(m: &Representation<K>) -> Result<bool> {
    Ok(hom_ext(m, m)?.ext_dim == 0)
}

impl Representation<Rationals> {
    /// Entrywise reduction modulo `p`.
    pub fn reduce_mod_p(&self, p: u32) -> Result<Representation<PrimeField>> {
        let field = PrimeField::new(p)?;
        let prime = BigInt::from(p);
        let maps = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(arrow, m)| {
                m.try_map(|row, col, x: &BigRational| {
                    if x.denom().is_multiple_of(&prime) {
                        return Err(Error::BadDenominator {
                            arrow: arrow.id.to_string(),
                            row,
                            col,
                            p,
                        });
                    }
                    let num = field.reduce_int(x.numer());
                    let den = field.reduce_int(x.denom());
                    Ok(field.mul(&num, &field.inv(&den).expect("denominator prime to p")))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Representation::new(self.quiver.clone(), field, self.dims.clone(), maps)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use alloc::vec;

    pub(crate) fn jordan<K: Field>(k: &K, n: usize) -> Matrix<K::Elem> {
        let mut m = Matrix::zeros(k, n, n);
        for i in 0..n.saturating_sub(1) {
            m.set(i, i + 1, k.one());
        }
        m
    }

    pub(crate) fn kronecker_reg<K: Field>(k: &K, n: usize) -> Representation<K> {
        let q = Arc::new(Quiver::from_edges(2, &[(1, 2), (1, 2)]).unwrap());
        Representation::new(
            q,
            k.clone(),
            DimVector(vec![n, n]),
            vec![Matrix::identity(k, n), jordan(k, n)],
        )
        .unwrap()
    }

    pub(crate) fn kronecker_preproj<K: Field>(k: &K) -> Representation<K> {
        let q = Arc::new(Quiver::from_edges(2, &[(1, 2), (1, 2)]).unwrap());
        let a = Matrix::from_i64(k, 2, 1, &[1, 0]).unwrap();
        let b = Matrix::from_i64(k, 2, 1, &[0, 1]).unwrap();
        Representation::new(q, k.clone(), DimVector(vec![1, 2]), vec![a, b]).unwrap()
    }

    /// Ã₂,₁ with maps I, J_n(0), I on (n, n, n).
    pub(crate) fn a21_square<K: Field>(k: &K, n: usize) -> Representation<K> {
        let q = Arc::new(Quiver::from_edges(3, &[(1, 2), (2, 3), (1, 3)]).unwrap());
        Representation::new(
            q,
            k.clone(),
            DimVector(vec![n, n, n]),
            vec![Matrix::identity(k, n), jordan(k, n), Matrix::identity(k, n)],
        )
        .unwrap()
    }

    fn simple<K: Field>(k: &K, vertex: usize) -> Representation<K> {
        let q = Arc::new(Quiver::from_edges(2, &[(1, 2), (1, 2)]).unwrap());
        let mut dims = vec![0, 0];
        dims[vertex] = 1;
        let maps = vec![
            Matrix::zeros(k, dims[1], dims[0]),
            Matrix::zeros(k, dims[1], dims[0]),
        ];
        Representation::new(q, k.clone(), DimVector(dims), maps).unwrap()
    }

    #[test]
    fn simple_endomorphisms() {
        for v in 0..2 {
            let s = simple(&Rationals, v);
            assert_eq!(
                hom_ext(&s, &s).unwrap(),
                HomExt {
                    hom_dim: 1,
                    ext_dim: 0
                }
            );
        }
        // Ext¹(S₁, S₂) is spanned by the two arrows.
        let (s1, s2) = (simple(&Rationals, 0), simple(&Rationals, 1));
        assert_eq!(
            hom_ext(&s1, &s2).unwrap(),
            HomExt {
                hom_dim: 0,
                ext_dim: 2
            }
        );
    }

    #[test]
    fn kronecker_regular_self_ext() {
        let m = kronecker_reg(&Rationals, 2);
        assert_eq!(
            hom_ext(&m, &m).unwrap(),
            HomExt {
                hom_dim: 2,
                ext_dim: 2
            }
        );
        assert!(!is_rigid(&m).unwrap());
    }

    #[test]
    fn kronecker_preprojective_is_rigid() {
        let p = kronecker_preproj(&Rationals);
        assert_eq!(
            hom_ext(&p, &p).unwrap(),
            HomExt {
                hom_dim: 1,
                ext_dim: 0
            }
        );
        assert!(is_rigid(&p).unwrap());
        let zero = Representation::zero(p.quiver().clone(), Rationals);
        assert!(is_rigid(&zero).unwrap());
    }

    #[test]
    fn subrep_checks() {
        let k = PrimeField::new(2).unwrap();
        let m = a21_square(&k, 3);
        let full: Vec<_> = (0..3).map(|_| SubspaceBasis::full(&k, 3)).collect();
        let zero: Vec<_> = (0..3).map(|_| SubspaceBasis::zero(3)).collect();
        assert!(m.is_subrep(&full).unwrap());
        assert!(m.is_subrep(&zero).unwrap());
        let ker = SubspaceBasis::span(&k, &jordan(&k, 3).kernel_basis(&k));
        let spaces = vec![SubspaceBasis::zero(3), ker.clone(), SubspaceBasis::zero(3)];
        assert!(m.is_subrep(&spaces).unwrap());
        let bad = vec![ker.clone(), SubspaceBasis::zero(3), SubspaceBasis::zero(3)];
        assert!(!m.is_subrep(&bad).unwrap());
        assert!(m.is_subrep(&spaces[..2]).is_err());
    }

    #[test]
    fn sub_quotient_extremes() {
        let k = PrimeField::new(3).unwrap();
        let m = kronecker_reg(&k, 2);
        let full: Vec<_> = (0..2).map(|_| SubspaceBasis::full(&k, 2)).collect();
        let zero: Vec<_> = (0..2).map(|_| SubspaceBasis::zero(2)).collect();
        let (sub, quot) = m.sub_quotient(&full).unwrap();
        assert_eq!(sub, m);
        assert_eq!(quot.dims(), &DimVector(vec![0, 0]));
        let (sub, quot) = m.sub_quotient(&zero).unwrap();
        assert_eq!(quot, m);
        assert_eq!(sub.dims(), &DimVector(vec![0, 0]));
    }

    #[test]
    fn kronecker_eigenline_sub_and_quotient() {
        let k = Rationals;
        let m = kronecker_reg(&k, 2);
        let line = SubspaceBasis::span_vectors(&k, 2, vec![vec![k.one(), k.zero()]]).unwrap();
        let (sub, quot) = m.sub_quotient(&[line.clone(), line]).unwrap();
        let one = Matrix::from_i64(&k, 1, 1, &[1]).unwrap();
        let zero = Matrix::from_i64(&k, 1, 1, &[0]).unwrap();
        assert_eq!(sub.maps(), &[one.clone(), zero.clone()]);
        assert_eq!(quot.maps(), &[one, zero]);
        assert_eq!(
            hom_ext(&sub, &quot).unwrap(),
            HomExt {
                hom_dim: 1,
                ext_dim: 1
            }
        );
    }

    #[test]
    fn sub_quotient_rejects_non_subrep() {
        let k = Rationals;
        let m = kronecker_reg(&k, 2);
        let wrong = SubspaceBasis::span_vectors(&k, 2, vec![vec![k.zero(), k.one()]]).unwrap();
        assert_eq!(
            m.sub_quotient(&[wrong.clone(), wrong]).unwrap_err(),
            Error::NotSubrepresentation
        );
    }

    #[test]
    fn reduction_mod_p() {
        let q = Arc::new(Quiver::from_edges(2, &[(1, 2)]).unwrap());
        let frac = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        let m = Representation::new(
            q.clone(),
            Rationals,
            DimVector(vec![1, 2]),
            vec![Matrix::new(2, 1, vec![frac(1, 2), frac(-3, 1)]).unwrap()],
        )
        .unwrap();
        let r = m.reduce_mod_p(3).unwrap();
        assert_eq!(r.maps()[0].data(), &[2, 0]);
        let r = m.reduce_mod_p(2);
        assert!(matches!(
            r,
            Err(Error::BadDenominator {
                row: 0,
                col: 0,
                p: 2,
                ..
            })
        ));
        let third = Representation::new(
            q,
            Rationals,
            DimVector(vec![1, 1]),
            vec![Matrix::new(1, 1, vec![frac(1, 3)]).unwrap()],
        )
        .unwrap();
        assert!(matches!(
            third.reduce_mod_p(3),
            Err(Error::BadDenominator { .. })
        ));
        assert!(matches!(third.reduce_mod_p(4), Err(Error::NotPrime(4))));
        assert_eq!(third.reduce_mod_p(2).unwrap().maps()[0].data(), &[1]);
    }

    #[test]
    fn direct_sums() {
        let k = Rationals;
        let p = kronecker_preproj(&k);
        let r = kronecker_reg(&k, 1);
        let zero = Representation::zero(p.quiver().clone(), k);
        assert_eq!(direct_sum(&p, &zero).unwrap(), p);
        let s = direct_sum(&p, &r).unwrap();
        assert_eq!(s.dims(), &DimVector(vec![2, 3]));
        for target in [&p, &r, &s] {
            let lhs = hom_ext(&s, target).unwrap();
            let (a, b) = (hom_ext(&p, target).unwrap(), hom_ext(&r, target).unwrap());
            assert_eq!(lhs.hom_dim, a.hom_dim + b.hom_dim);
            assert_eq!(lhs.ext_dim, a.ext_dim + b.ext_dim);
        }
    }

    #[test]
    fn mismatches_are_errors() {
        let a = kronecker_reg(&Rationals, 1);
        let b = a21_square(&Rationals, 1);
        assert_eq!(hom_ext(&a, &b), Err(Error::QuiverMismatch));
        let bad = Representation::new(
            a.quiver().clone(),
            Rationals,
            DimVector(vec![1, 2]),
            a.maps().to_vec(),
        );
        assert!(matches!(bad, Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn base_change_invariance() {
        let k = PrimeField::new(3).unwrap();
        let m = a21_square(&k, 2);
        let g = Matrix::from_i64(&k, 2, 2, &[1, 2, 0, 1]).unwrap();
        let h = Matrix::from_i64(&k, 2, 2, &[2, 1, 1, 1]).unwrap();
        let moved = m.change_basis(&[g.clone(), h, g]).unwrap();
        assert_ne!(moved, m);
        assert_eq!(hom_ext(&m, &m).unwrap(), hom_ext(&moved, &moved).unwrap());
        assert_eq!(hom_ext(&m, &moved).unwrap(), hom_ext(&m, &m).unwrap());
    }
}
