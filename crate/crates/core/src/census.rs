//! Enumeration of `Gr_e(M)(F_q)` and per-point homological data.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::quiver::{euler_form, DimVector};
use crate::representation::{hom_ext, Representation};
use crate::subspace::{enumerate_subspaces, SubspaceBasis};

/// A point `N` of a quiver Grassmannian: one canonical subspace per vertex.
///
/// Points order lexicographically by their vertex subspaces (in vertex order).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubrepPoint<E> {
    pub spaces: Vec<SubspaceBasis<E>>,
}

impl<E: Clone + PartialEq> SubrepPoint<E> {
    pub fn new(spaces: Vec<SubspaceBasis<E>>) -> Self {
        SubrepPoint { spaces }
    }

    pub fn dim_vector(&self) -> DimVector {
        DimVector(self.spaces.iter().map(SubspaceBasis::dim).collect())
    }

    /// `other ⊆ self` at every vertex.
    pub fn contains<K: Field<Elem = E>>(&self, field: &K, other: &Self) -> Result<bool> {
        if self.spaces.len() != other.spaces.len() {
            return Err(Error::DimensionMismatch {
                expected: self.spaces.len(),
                found: other.spaces.len(),
            });
        }
        for (a, b) in self.spaces.iter().zip(&other.spaces) {
            if !a.contains(field, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Homological data of `N ⊆ M`: `hom_dim = dim Hom(N, M/N)` and
/// `ext_dim = dim Ext¹(N, M/N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry<E> {
    pub point: SubrepPoint<E>,
    pub hom_dim: usize,
    pub ext_dim: usize,
    /// `(R₀^{(k+1)} ⊆ N, N ⊆ R₀^{(lp−1)})`, filled in by the tube analysis.
    pub comb_flags: Option<(bool, bool)>,
}

impl<E> CensusEntry<E> {
    pub fn homologically_transverse(&self) -> bool {
        self.ext_dim == 0
    }
}

/// Tangent-space dimension of `Gr_e(M)` at the entry's point, `dim Hom(N, M/N)`.
pub fn tangent_dim<E>(entry: &CensusEntry<E>) -> usize {
    entry.hom_dim
}

/// All entries of one dimension vector `e`, in canonical point order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusBlock<E> {
    pub e: DimVector,
    /// `⟨e, d − e⟩`.
    pub expected_dim: i64,
    pub entries: Vec<CensusEntry<E>>,
}

impl<E> CensusBlock<E> {
    pub fn total_points(&self) -> usize {
        self.entries.len()
    }

    pub fn transverse_points(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| e.homologically_transverse())
            .count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport<E> {
    pub modulus: u32,
    pub dims: DimVector,
    pub blocks: Vec<CensusBlock<E>>,
}

impl<E> CensusReport<E> {
    pub fn block(&self, e: &DimVector) -> Option<&CensusBlock<E>> {
        self.blocks.iter().find(|b| &b.e == e)
    }

    pub fn block_mut(&mut self, e: &DimVector) -> Option<&mut CensusBlock<E>> {
        self.blocks.iter_mut().find(|b| &b.e == e)
    }

    pub fn total_points(&self) -> usize {
        self.blocks.iter().map(CensusBlock::total_points).sum()
    }

    pub fn transverse_points(&self) -> usize {
        self.blocks.iter().map(CensusBlock::transverse_points).sum()
    }

    /// Whether every `e ≤ dims` has a block.
    pub fn is_complete(&self) -> bool {
        self.dims
            .sub_vectors()
            .iter()
            .all(|e| self.block(e).is_some())
    }

    pub fn entries(&self) -> impl Iterator<Item = &CensusEntry<E>> {
        self.blocks.iter().flat_map(|b| b.entries.iter())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DimSelection {
    All,
    One(DimVector),
}

impl DimSelection {
    pub fn vectors(&self, dims: &DimVector) -> Result<Vec<DimVector>> {
        match self {
            DimSelection::All => Ok(dims.sub_vectors()),
            DimSelection::One(e) => {
                check_range(dims, e)?;
                Ok(alloc::vec![e.clone()])
            }
        }
    }
}

fn check_range(dims: &DimVector, e: &DimVector) -> Result<()> {
    if !e.le(dims) {
        return Err(Error::InvalidInput(alloc::format!(
            "dimension vector {e} is not bounded by {dims}"
        )));
    }
    Ok(())
}

/// Every subrepresentation of `m` with dimension vector `e`, each exactly once, in
/// canonical order.
///
/// Vertices are visited in topological order. At vertex `j` the candidate subspaces
/// are those containing the images `M_a(V_i)` of the already chosen sources, which is
/// the whole subrepresentation condition for the arrows into `j`.
pub fn enumerate_subreps(
    m: &Representation<PrimeField>,
    e: &DimVector,
) -> Result<Vec<SubrepPoint<u32>>> {
    check_range(m.dims(), e)?;
    let k = m.field();
    let quiver = m.quiver();
    let order = quiver.topological_order();
    let mut candidates: Vec<Vec<SubspaceBasis<u32>>> = Vec::with_capacity(order.len());
    for v in 0..quiver.vertex_count() {
        candidates.push(enumerate_subspaces(m.dims()[v], e[v], k)?);
    }
    let incoming: Vec<Vec<usize>> = (0..quiver.vertex_count())
        .map(|v| {
            quiver
                .arrows()
                .iter()
                .enumerate()
                .filter(|(_, a)| a.target == v)
                .map(|(idx, _)| idx)
                .collect()
        })
        .collect();

    let mut chosen: Vec<Option<SubspaceBasis<u32>>> = alloc::vec![None; quiver.vertex_count()];
    let mut out = Vec::new();
    extend(m, order, 0, &candidates, &incoming, &mut chosen, &mut out)?;
    out.sort();
    Ok(out)
}

fn extend(
    m: &Representation<PrimeField>,
    order: &[usize],
    depth: usize,
    candidates: &[Vec<SubspaceBasis<u32>>],
    incoming: &[Vec<usize>],
    chosen: &mut Vec<Option<SubspaceBasis<u32>>>,
    out: &mut Vec<SubrepPoint<u32>>,
) -> Result<()> {
    let Some(&v) = order.get(depth) else {
        let spaces = chosen
            .iter()
            .map(|s| s.clone().expect("every vertex chosen"))
            .collect();
        out.push(SubrepPoint::new(spaces));
        return Ok(());
    };
    let k = m.field();
    let arrows = m.quiver().arrows();
    let mut images = Vec::new();
    for &idx in &incoming[v] {
        let source = chosen[arrows[idx].source]
            .as_ref()
            .expect("sources precede targets");
        for row in source.basis().row_iter() {
            images.push(m.maps()[idx].mul_vec(k, row)?);
        }
    }
    let required = SubspaceBasis::span_vectors(k, m.dims()[v], images)?;
    if required.dim() > candidates[v].first().map_or(0, SubspaceBasis::dim) {
        return Ok(());
    }
    for cand in &candidates[v] {
        if !cand.contains(k, &required)? {
            continue;
        }
        chosen[v] = Some(cand.clone());
        extend(m, order, depth + 1, candidates, incoming, chosen, out)?;
    }
    chosen[v] = None;
    Ok(())
}

/// Census of one dimension vector.
pub fn census_block(m: &Representation<PrimeField>, e: &DimVector) -> Result<CensusBlock<u32>> {
    let d = m.dims();
    let rest = d
        .checked_sub(e)
        .ok_or_else(|| Error::InvalidInput(alloc::format!("{e} exceeds {d}")))?;
    let expected_dim = euler_form(m.quiver(), e, &rest)?;
    let mut entries = Vec::new();
    for point in enumerate_subreps(m, e)? {
        let (sub, quot) = m.sub_quotient(&point.spaces)?;
        let he = hom_ext(&sub, &quot)?;
        if (he.hom_dim as i64) < expected_dim {
            return Err(Error::Invariant(alloc::format!(
                "tangent dimension {} below ⟨e, d−e⟩ = {expected_dim}",
                he.hom_dim
            )));
        }
        entries.push(CensusEntry {
            point,
            hom_dim: he.hom_dim,
            ext_dim: he.ext_dim,
            comb_flags: None,
        });
    }
    Ok(CensusBlock {
        e: e.clone(),
        expected_dim,
        entries,
    })
}

/// Census over the selected dimension vectors, blocks in lexicographic order of `e`.
pub fn census(
    m: &Representation<PrimeField>,
    selection: &DimSelection,
) -> Result<CensusReport<u32>> {
    let blocks = selection
        .vectors(m.dims())?
        .iter()
        .map(|e| census_block(m, e))
        .collect::<Result<Vec<_>>>()?;
    Ok(CensusReport {
        modulus: m.field().modulus(),
        dims: m.dims().clone(),
        blocks,
    })
}

/// The homologically transverse points of `Gr_e`: those with `Ext¹(N, M/N) = 0`.
pub fn transverse_homological<'a, E>(
    report: &'a CensusReport<E>,
    e: &DimVector,
) -> Vec<&'a SubrepPoint<E>> {
    report
        .block(e)
        .map(|b| {
            b.entries
                .iter()
                .filter(|x| x.homologically_transverse())
                .map(|x| &x.point)
                .collect()
        })
        .unwrap_or_default()
}

/// Point counts per dimension vector.
pub fn point_counts<E>(report: &CensusReport<E>) -> BTreeMap<DimVector, usize> {
    report
        .blocks
        .iter()
        .map(|b| (b.e.clone(), b.total_points()))
        .collect()
}
