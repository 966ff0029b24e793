//! Exact kernels for quiver Grassmannians of representations of acyclic quivers.
//!
//! The crate is `no_std` (it needs `alloc`) and does no IO. It provides
//!
//! * exact field arithmetic over ℚ and prime fields, row reduction, kernels and
//!   canonical enumeration of subspaces of `F_q^d` ([`field`], [`matrix`], [`subspace`]);
//! * quivers, dimension vectors, the Euler form, the Coxeter transformation and the
//!   affine-type test ([`quiver`], [`euler`]);
//! * representations with `Hom`/`Ext¹` dimensions computed from the hereditary two-term
//!   complex ([`representation`]);
//! * enumeration of `Gr_e(M)(F_q)` with per-point homological data, counting
//!   polynomials and Euler characteristics ([`census`], [`counting`]);
//! * tube coordinates of a regular indecomposable and the comparison between the
//!   combinatorial transverse locus and `{N : Ext¹(N, M/N) = 0}` ([`tube`]).
//!
//! Matrices act on column vectors. A map for the arrow `a: i → j` is stored as a
//! `dims[j] × dims[i]` matrix, and `⟨d, e⟩ = dᵀ E e` with `E = I − A`.

#![no_std]

extern crate alloc;

pub mod census;
pub mod counting;
pub mod error;
pub mod euler;
pub mod field;
pub mod matrix;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
pub mod quiver;
pub mod representation;
pub mod subspace;
pub mod tube;

pub use census::{
    census, census_block, enumerate_subreps, tangent_dim, transverse_homological, CensusBlock,
    CensusEntry, CensusReport, DimSelection, SubrepPoint,
};
pub use counting::{counting_polynomial, point_count, CountingPolynomial, Polynomial};
pub use error::{Error, Result};
pub use euler::{coxeter_apply, defect, EulerData, IntMatrix};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use matrix::{Matrix, Rref};
pub use quiver::{euler_form, Arrow, DimVector, Quiver};
pub use representation::{direct_sum, hom_ext, is_rigid, HomExt, Representation};
pub use subspace::{enumerate_subspaces, gaussian_binomial, SubspaceBasis};
pub use tube::{
    canonical_ray_submodule, compare_loci, quasi_socle, theorem_check, transverse_combinatorial,
    tube_coordinates, CombinatorialLocus, Counterexample, DimensionComparison, QComparison,
    TransverseComparison, TubeData,
};
