use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("quiver has a directed cycle through vertex {0}")]
    Cyclic(String),
    #[error(
        "arrow {arrow}: expected a {expected_rows}x{expected_cols} matrix, found {rows}x{cols}"
    )]
    ShapeMismatch {
        arrow: String,
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },
    #[error("representations live over different quivers")]
    QuiverMismatch,
    #[error("representations live over different fields")]
    FieldMismatch,
    #[error("arrow {arrow}, entry ({row}, {col}): denominator divisible by {p}")]
    BadDenominator {
        arrow: String,
        row: usize,
        col: usize,
        p: u32,
    },
    #[error("quiver is not of affine type")]
    NotAffine,
    #[error("not a subrepresentation")]
    NotSubrepresentation,
    #[error("no nonzero submodule of defect 0: representation is not regular")]
    NotRegular,
    #[error("ambiguous quasi-socle: {candidates} minimal defect-0 candidates")]
    AmbiguousQuasiSocle { candidates: usize },
    #[error("dimension vector is not on the ray of the quasi-socle")]
    NotOnRay,
    #[error("no period of the quasi-socle dimension vector under the Coxeter transformation")]
    NoPeriod,
    #[error("rigid regular representation: combinatorial locus is all of Gr")]
    RigidRegular,
    #[error("ray ambiguity at quasi-length {t}: {count} points")]
    RayAmbiguity { t: usize, count: usize },
    #[error("census does not cover every dimension vector")]
    IncompleteCensus,
    #[error("count not polynomial on sampled range (raw counts {counts:?})")]
    NotPolynomial { counts: Vec<(u32, u64)> },
    #[error("need at least {needed} primes, got {got}")]
    TooFewSamples { needed: usize, got: usize },
    #[error("input exceeds the brute-force size guard")]
    SizeGuard,
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Failures of a computed invariant rather than of the caller's input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::AmbiguousQuasiSocle { .. }
                | Error::NotOnRay
                | Error::NoPeriod
                | Error::RayAmbiguity { .. }
                | Error::IncompleteCensus
                | Error::Invariant(_)
                | Error::NotRegular
                | Error::RigidRegular
        )
    }
}
