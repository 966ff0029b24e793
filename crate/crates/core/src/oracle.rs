//! Brute-force enumeration of subrepresentations, for checking [`enumerate_subreps`].
//!
//! Shares nothing with the Schubert-cell enumeration or the pruned search: subspaces are
//! produced as spans of arbitrary vector lists, canonicalised and deduplicated, and the
//! full product over the vertices is filtered by the subrepresentation test.
//!
//! [`enumerate_subreps`]: crate::census::enumerate_subreps

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::census::SubrepPoint;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::quiver::DimVector;
use crate::representation::Representation;
use crate::subspace::SubspaceBasis;

pub const MAX_TOTAL_DIM: usize = 8;
pub const MAX_Q: u32 = 3;

pub fn brute_force_subreps(
    m: &Representation<PrimeField>,
    e: &DimVector,
) -> Result<Vec<SubrepPoint<u32>>> {
    let q = m.field().modulus();
    if m.dims().total() > MAX_TOTAL_DIM || q > MAX_Q {
        return Err(Error::SizeGuard);
    }
    if !e.le(m.dims()) {
        return Err(Error::InvalidInput("dimension vector out of range".into()));
    }
    let per_vertex: Vec<Vec<SubspaceBasis<u32>>> = (0..e.len())
        .map(|v| spans_of_dim(m.field(), m.dims()[v], e[v]))
        .collect();

    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; e.len()];
    if per_vertex.iter().any(Vec::is_empty) {
        return Ok(Vec::new());
    }
    loop {
        let spaces: Vec<_> = idx
            .iter()
            .zip(&per_vertex)
            .map(|(&i, s)| s[i].clone())
            .collect();
        if m.is_subrep(&spaces)? {
            out.insert(SubrepPoint::new(spaces));
        }
        let Some(pos) = (0..idx.len()).find(|&p| idx[p] + 1 < per_vertex[p].len()) else {
            break;
        };
        idx[pos] += 1;
        for x in &mut idx[..pos] {
            *x = 0;
        }
    }
    Ok(out.into_iter().collect())
}

/// All `dim`-dimensional subspaces, grown one spanning vector at a time from every
/// smaller span and deduplicated after canonicalisation.
fn spans_of_dim(field: &PrimeField, ambient: usize, dim: usize) -> Vec<SubspaceBasis<u32>> {
    let q = field.modulus() as usize;
    let vectors: Vec<Vec<u32>> = (0..q.pow(ambient as u32))
        .map(|mut code| {
            let mut row = vec![0u32; ambient];
            for x in row.iter_mut() {
                *x = (code % q) as u32;
                code /= q;
            }
            row
        })
        .collect();
    let mut layer: BTreeSet<SubspaceBasis<u32>> = BTreeSet::new();
    layer.insert(SubspaceBasis::zero(ambient));
    for _ in 0..dim {
        let mut next = BTreeSet::new();
        for span in &layer {
            for v in &vectors {
                let mut rows = span.basis().to_rows();
                rows.push(v.clone());
                let grown = SubspaceBasis::span_vectors(field, ambient, rows)
                    .expect("rows have ambient length");
                if grown.dim() == span.dim() + 1 {
                    next.insert(grown);
                }
            }
        }
        layer = next;
    }
    layer.into_iter().collect()
}
