//! Tube coordinates of a regular indecomposable representation and the two
//! descriptions of its transverse quiver Grassmannian.
//!
//! For `M ≅ R₀^{(lp+k)}` in a tube of rank `p`, the combinatorial locus removes from
//! `Gr(M)` the points `N` with `R₀^{(k+1)} ⊆ N ⊆ R₀^{(lp−1)}`; the homological locus keeps
//! the points with `Ext¹(N, M/N) = 0`. [`compare_loci`] computes both over a finite
//! field and lists every point on which they disagree.
//!
//! Nothing here decomposes modules. A submodule of a regular indecomposable is regular
//! exactly when its defect vanishes, the quasi-socle is the smallest nonzero such
//! submodule, and the ray submodules are the unique points of the matching dimension
//! vectors. Each of these steps fails loudly when its uniqueness assumption breaks, so a
//! successful run also certifies that the input behaves like an indecomposable.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::census::{census, CensusReport, DimSelection, SubrepPoint};
use crate::error::{Error, Result};
use crate::euler::{coxeter_apply, defect, EulerData};
use crate::field::{PrimeField, Rationals};
use crate::quiver::DimVector;
use crate::representation::{is_rigid, Representation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TubeData {
    /// `dim R₀`.
    pub quasi_socle_dim: DimVector,
    /// Rank `p` of the tube.
    pub tube_rank: usize,
    /// `lp + k`.
    pub quasi_length: usize,
    pub l: usize,
    pub k: usize,
    /// `ray_dims[t] = dim R₀^{(t)} = Σ_{j<t} Φ^{−j}(dim R₀)` for `0 ≤ t ≤ quasi_length`.
    pub ray_dims: Vec<DimVector>,
}

impl TubeData {
    /// Index `k + 1` of the lower ray submodule.
    pub fn lower_index(&self) -> usize {
        self.k + 1
    }

    /// Index `lp − 1` of the upper ray submodule.
    pub fn upper_index(&self) -> usize {
        self.l * self.tube_rank - 1
    }

    /// `lp − 1 < k + 1`: the excluded window is empty.
    pub fn vacuous_window(&self) -> bool {
        self.upper_index() < self.lower_index()
    }
}

/// The smallest nonzero submodule of defect zero, read off a complete census.
pub fn quasi_socle(
    field: &PrimeField,
    ed: &EulerData,
    report: &CensusReport<u32>,
) -> Result<SubrepPoint<u32>> {
    if !report.is_complete() {
        return Err(Error::IncompleteCensus);
    }
    let mut candidates = Vec::new();
    for block in &report.blocks {
        if block.e.is_zero() || defect(ed, &block.e.to_i64())? != 0 {
            continue;
        }
        candidates.extend(block.entries.iter().map(|x| &x.point));
    }
    if candidates.is_empty() {
        return Err(Error::NotRegular);
    }
    let mut minimum = None;
    let mut minimal_count = 0;
    for c in &candidates {
        let mut is_minimal = true;
        let mut below_all = true;
        for other in &candidates {
            let inside = other.contains(field, c)?;
            below_all &= inside;
            if !core::ptr::eq(*c, *other) && c.contains(field, other)? {
                is_minimal = false;
            }
        }
        if is_minimal {
            minimal_count += 1;
        }
        if below_all {
            minimum = Some(*c);
        }
    }
    match minimum {
        Some(point) => Ok(point.clone()),
        None => Err(Error::AmbiguousQuasiSocle {
            candidates: minimal_count,
        }),
    }
}

/// Period, quasi-length and ray dimension vectors of `M` on the ray starting at `R₀`.
pub fn tube_coordinates(ed: &EulerData, dim_m: &DimVector, dim_r0: &DimVector) -> Result<TubeData> {
    let r0 = dim_r0.to_i64();
    if dim_r0.is_zero() || dim_r0.len() != dim_m.len() {
        return Err(Error::InvalidInput(
            "quasi-socle dimension vector must be nonzero".into(),
        ));
    }
    if defect(ed, &r0)? != 0 {
        return Err(Error::InvalidInput("quasi-socle must have defect 0".into()));
    }
    let n = dim_r0.len();
    let period_bound = 2 * n + 2;
    let tube_rank = (1..=period_bound)
        .find(|&p| coxeter_apply(ed, &r0, p as i32) == r0)
        .ok_or(Error::NoPeriod)?;

    let target = dim_m.to_i64();
    let mut ray_dims = alloc::vec![DimVector::zero(n)];
    let mut partial = alloc::vec![0i64; n];
    let mut term = r0.clone();
    let mut quasi_length = None;
    for t in 1..=dim_m.total() {
        for (s, x) in partial.iter_mut().zip(&term) {
            *s += x;
        }
        let dims = DimVector::from_i64(&partial).ok_or(Error::NotOnRay)?;
        ray_dims.push(dims);
        if partial == target {
            quasi_length = Some(t);
            break;
        }
        if !ray_dims[t].le(dim_m) {
            break;
        }
        term = coxeter_apply(ed, &term, -1);
    }
    let quasi_length = quasi_length.ok_or(Error::NotOnRay)?;
    for d in &ray_dims {
        if defect(ed, &d.to_i64())? != 0 {
            return Err(Error::Invariant(
                "ray dimension vector with nonzero defect".into(),
            ));
        }
    }
    let (l, k) = (quasi_length / tube_rank, quasi_length % tube_rank);
    if l == 0 {
        return Err(Error::RigidRegular);
    }
    Ok(TubeData {
        quasi_socle_dim: dim_r0.clone(),
        tube_rank,
        quasi_length,
        l,
        k,
        ray_dims,
    })
}

/// The unique point of dimension vector `dim R₀^{(t)}`.
pub fn canonical_ray_submodule(
    report: &CensusReport<u32>,
    tube: &TubeData,
    t: usize,
) -> Result<SubrepPoint<u32>> {
    let e = tube.ray_dims.get(t).ok_or_else(|| {
        Error::InvalidInput(alloc::format!(
            "ray index {t} beyond quasi-length {}",
            tube.quasi_length
        ))
    })?;
    let block = report.block(e).ok_or(Error::IncompleteCensus)?;
    match block.entries.as_slice() {
        [only] => Ok(only.point.clone()),
        other => Err(Error::RayAmbiguity {
            t,
            count: other.len(),
        }),
    }
}

/// The combinatorial transverse locus, per dimension vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialLocus {
    pub rigid: bool,
    pub tube: Option<TubeData>,
    /// `R₀^{(k+1)}` and `R₀^{(lp−1)}`, absent for rigid input.
    pub lower: Option<SubrepPoint<u32>>,
    pub upper: Option<SubrepPoint<u32>>,
    pub transverse: BTreeMap<DimVector, Vec<SubrepPoint<u32>>>,
}

/// Computes the combinatorial locus and records the containment flags
/// `(R₀^{(k+1)} ⊆ N, N ⊆ R₀^{(lp−1)})` on every census entry.
pub fn transverse_combinatorial(
    m: &Representation<PrimeField>,
    report: &mut CensusReport<u32>,
) -> Result<CombinatorialLocus> {
    if !report.is_complete() {
        return Err(Error::IncompleteCensus);
    }
    if is_rigid(m)? {
        let transverse = report
            .blocks
            .iter()
            .map(|b| {
                (
                    b.e.clone(),
                    b.entries.iter().map(|x| x.point.clone()).collect(),
                )
            })
            .collect();
        return Ok(CombinatorialLocus {
            rigid: true,
            tube: None,
            lower: None,
            upper: None,
            transverse,
        });
    }
    let field = m.field();
    let ed = EulerData::compute(m.quiver())?;
    if !ed.is_affine {
        return Err(Error::NotAffine);
    }
    let socle = quasi_socle(field, &ed, report)?;
    let tube = tube_coordinates(&ed, m.dims(), &socle.dim_vector())?;
    if canonical_ray_submodule(report, &tube, 1)? != socle {
        return Err(Error::Invariant(
            "quasi-socle differs from the first ray submodule".into(),
        ));
    }
    let mut previous: Option<SubrepPoint<u32>> = None;
    for t in 0..=tube.quasi_length {
        let current = canonical_ray_submodule(report, &tube, t)?;
        if let Some(prev) = &previous {
            if !current.contains(field, prev)? {
                return Err(Error::Invariant(alloc::format!(
                    "ray submodules {} and {t} are not nested",
                    t - 1
                )));
            }
        }
        previous = Some(current);
    }
    let lower = canonical_ray_submodule(report, &tube, tube.lower_index())?;
    let upper = canonical_ray_submodule(report, &tube, tube.upper_index())?;

    let mut transverse = BTreeMap::new();
    for block in &mut report.blocks {
        let mut kept = Vec::new();
        for entry in &mut block.entries {
            let contains_lower = entry.point.contains(field, &lower)?;
            let inside_upper = upper.contains(field, &entry.point)?;
            entry.comb_flags = Some((contains_lower, inside_upper));
            if !(contains_lower && inside_upper) {
                kept.push(entry.point.clone());
            }
        }
        transverse.insert(block.e.clone(), kept);
    }
    Ok(CombinatorialLocus {
        rigid: false,
        tube: Some(tube),
        lower: Some(lower),
        upper: Some(upper),
        transverse,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionComparison {
    pub e: DimVector,
    pub combinatorial: Vec<SubrepPoint<u32>>,
    pub homological: Vec<SubrepPoint<u32>>,
}

impl DimensionComparison {
    pub fn equal(&self) -> bool {
        self.combinatorial == self.homological
    }
}

/// A point in exactly one of the two loci.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub q: u32,
    pub e: DimVector,
    pub point: SubrepPoint<u32>,
    pub ext_dim: usize,
    pub comb_flags: Option<(bool, bool)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QComparison {
    pub q: u32,
    pub locus: CombinatorialLocus,
    pub per_dimension: Vec<DimensionComparison>,
    pub counterexamples: Vec<Counterexample>,
}

impl QComparison {
    pub fn equal(&self) -> bool {
        self.per_dimension.iter().all(DimensionComparison::equal)
    }
}

/// Compares both loci on a complete census of `m`.
pub fn compare_loci(
    m: &Representation<PrimeField>,
    report: &mut CensusReport<u32>,
) -> Result<QComparison> {
    let locus = transverse_combinatorial(m, report)?;
    let q = m.field().modulus();
    let mut per_dimension = Vec::new();
    let mut counterexamples = Vec::new();
    for block in &report.blocks {
        let combinatorial = locus.transverse.get(&block.e).cloned().unwrap_or_default();
        let homological: Vec<_> = block
            .entries
            .iter()
            .filter(|x| x.homologically_transverse())
            .map(|x| x.point.clone())
            .collect();
        for entry in &block.entries {
            let in_comb = combinatorial.binary_search(&entry.point).is_ok();
            if in_comb != entry.homologically_transverse() {
                counterexamples.push(Counterexample {
                    q,
                    e: block.e.clone(),
                    point: entry.point.clone(),
                    ext_dim: entry.ext_dim,
                    comb_flags: entry.comb_flags,
                });
            }
        }
        per_dimension.push(DimensionComparison {
            e: block.e.clone(),
            combinatorial,
            homological,
        });
    }
    Ok(QComparison {
        q,
        locus,
        per_dimension,
        counterexamples,
    })
}

/// Per-prime outcomes of the locus comparison. A failure at one prime does not stop
/// the others.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransverseComparison {
    pub runs: Vec<(u32, Result<QComparison>)>,
}

impl TransverseComparison {
    pub fn verdict(&self) -> bool {
        !self.runs.is_empty()
            && self
                .runs
                .iter()
                .all(|(_, r)| r.as_ref().is_ok_and(QComparison::equal))
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &Counterexample> {
        self.runs
            .iter()
            .filter_map(|(_, r)| r.as_ref().ok())
            .flat_map(|c| c.counterexamples.iter())
    }

    pub fn errors(&self) -> impl Iterator<Item = (u32, &Error)> {
        self.runs
            .iter()
            .filter_map(|(q, r)| r.as_ref().err().map(|e| (*q, e)))
    }
}

/// Runs the comparison at one prime.
pub fn check_at_prime(m: &Representation<Rationals>, p: u32) -> Result<QComparison> {
    let reduced = m.reduce_mod_p(p)?;
    let mut report = census(&reduced, &DimSelection::All)?;
    compare_loci(&reduced, &mut report)
}

/// Checks, for every prime and every dimension vector, that the combinatorial and
/// homological transverse loci coincide.
pub fn theorem_check(m: &Representation<Rationals>, primes: &[u32]) -> TransverseComparison {
    TransverseComparison {
        runs: primes.iter().map(|&p| (p, check_at_prime(m, p))).collect(),
    }
}
