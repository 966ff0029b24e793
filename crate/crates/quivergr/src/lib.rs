//! File formats, built-in fixtures, reports and the command line for `quivergr-core`.

pub mod builtin;
pub mod format;
pub mod report;
pub mod run;

use quivergr_core::{census_block, CensusReport, DimSelection, PrimeField, Representation};
use rayon::prelude::*;

pub use builtin::{builtin_representation, emit_builtin};
pub use format::{parse_input, parse_str, InputDocument};
pub use run::{run, Command, Options, Outcome, OutputFormat, Source};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("input: {0}")]
    Input(String),
    #[error("internal: {0}")]
    Internal(String),
}

impl From<quivergr_core::Error> for CliError {
    fn from(e: quivergr_core::Error) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl CliError {
    pub fn exit_status(&self) -> ExitStatus {
        match self {
            CliError::Usage(_) | CliError::Input(_) => ExitStatus::InputError,
            CliError::Internal(_) => ExitStatus::Internal,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExitStatus {
    Success = 0,
    Counterexample = 1,
    InputError = 2,
    Internal = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

/// [`quivergr_core::census`] with the dimension vectors spread over the rayon pool.
/// Blocks come back in the same order as the sequential census.
pub fn census_parallel(
    m: &Representation<PrimeField>,
    selection: &DimSelection,
) -> quivergr_core::Result<CensusReport<u32>> {
    let blocks = selection
        .vectors(m.dims())?
        .par_iter()
        .map(|e| census_block(m, e))
        .collect::<quivergr_core::Result<Vec<_>>>()?;
    Ok(CensusReport {
        modulus: m.field().modulus(),
        dims: m.dims().clone(),
        blocks,
    })
}
