//! Command dispatch.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::Instant;

use quivergr_core::{
    compare_loci, counting_polynomial, transverse_combinatorial, DimSelection, DimVector, Error,
    PrimeField, Rationals, Representation,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::builtin::emit_builtin;
use crate::format::parse_input;
use crate::{census_parallel, report, CliError, ExitStatus};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Census,
    Transverse,
    Tube,
    Check,
    Chi,
    Example,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Census => "census",
            Command::Transverse => "transverse",
            Command::Tube => "tube",
            Command::Check => "check",
            Command::Chi => "chi",
            Command::Example => "example",
        }
    }

    pub fn default_primes(self) -> &'static [u32] {
        match self {
            Command::Chi => &[2, 3, 5],
            _ => &[2, 3],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    File(PathBuf),
    Builtin(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Table,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub command: Command,
    pub source: Option<Source>,
    /// `None` selects the command's default primes.
    pub primes: Option<Vec<u32>>,
    /// `None` selects every dimension vector.
    pub e: Option<Vec<usize>>,
    pub format: OutputFormat,
    pub timing: bool,
}

impl Options {
    pub fn new(command: Command, source: Source) -> Self {
        Options {
            command,
            source: Some(source),
            primes: None,
            e: None,
            format: OutputFormat::Json,
            timing: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    /// What goes to standard output.
    pub output: String,
    pub status: ExitStatus,
}

pub fn run(opts: &Options) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let source = opts
        .source
        .as_ref()
        .ok_or_else(|| CliError::Usage("one of --input or --builtin is required".into()))?;
    let doc = match source {
        Source::File(path) => parse_input(path)?.0,
        Source::Builtin(name) => emit_builtin(name)?,
    };
    if opts.command == Command::Example {
        let mut output = serde_json::to_string_pretty(&doc).expect("documents serialize");
        output.push('\n');
        return Ok(Outcome {
            output,
            status: ExitStatus::Success,
        });
    }
    let m = doc.to_representation()?;
    let primes = validate_primes(opts.command, opts.primes.as_deref())?;
    let selection = match &opts.e {
        None => DimSelection::All,
        Some(e) => {
            if e.len() != m.dims().len() {
                return Err(CliError::Usage(format!(
                    "--e has {} entries but the quiver has {} vertices",
                    e.len(),
                    m.dims().len()
                )));
            }
            let e = DimVector(e.clone());
            if !e.le(m.dims()) {
                return Err(CliError::Input(format!(
                    "dimension vector {e} is not bounded by {}",
                    m.dims()
                )));
            }
            DimSelection::One(e)
        }
    };

    let (results, status) = match opts.command {
        Command::Census => per_field(&m, &primes, |r| {
            census_parallel(r, &selection).map(|c| report::census(&c))
        })?,
        Command::Transverse => per_field(&m, &primes, |r| {
            census_parallel(r, &selection).map(|c| report::transverse(&c))
        })?,
        Command::Tube => tube(&m, &primes),
        Command::Check => check(&m, &primes, &selection),
        Command::Chi => chi(&m, &primes, &selection)?,
        Command::Example => unreachable!("handled above"),
    };

    let mut value = json!({
        "tool": report::tool(),
        "input": report::input(&doc),
        "command": opts.command.name(),
        "parameters": {
            "q": primes,
            "e": match &selection {
                DimSelection::All => json!("all"),
                DimSelection::One(e) => report::dim_vector(e),
            },
        },
        "results": results,
    });
    if opts.timing {
        value["timing"] = json!({ "elapsed_ms": started.elapsed().as_millis() as u64 });
    }
    let output = match opts.format {
        OutputFormat::Json => report::to_json(&value),
        OutputFormat::Table => report::to_table(&value),
    };
    Ok(Outcome { output, status })
}

fn validate_primes(command: Command, given: Option<&[u32]>) -> Result<Vec<u32>, CliError> {
    let primes = given.unwrap_or(command.default_primes()).to_vec();
    if primes.is_empty() {
        return Err(CliError::Usage("--q needs at least one prime".into()));
    }
    let mut seen = BTreeSet::new();
    for &p in &primes {
        PrimeField::new(p).map_err(|e| CliError::Usage(format!("--q: {e}")))?;
        if !seen.insert(p) {
            return Err(CliError::Usage(format!("--q: {p} is listed twice")));
        }
    }
    if command == Command::Chi && primes.len() < 3 {
        return Err(CliError::Usage(format!(
            "chi needs at least 3 primes (2 to interpolate, 1 to check), got {}",
            primes.len()
        )));
    }
    Ok(primes)
}

/// Runs `f` on the reduction at every prime. Any failure aborts the command.
fn per_field<F>(
    m: &Representation<Rationals>,
    primes: &[u32],
    f: F,
) -> Result<(Value, ExitStatus), CliError>
where
    F: Fn(&Representation<PrimeField>) -> quivergr_core::Result<Value>,
{
    let fields = primes
        .iter()
        .map(|&p| f(&m.reduce_mod_p(p)?))
        .collect::<quivergr_core::Result<Vec<_>>>()?;
    Ok((json!({ "fields": fields }), ExitStatus::Success))
}

fn error_status(e: &Error) -> ExitStatus {
    CliError::from(e.clone()).exit_status()
}

fn tube(m: &Representation<Rationals>, primes: &[u32]) -> (Value, ExitStatus) {
    let mut status = ExitStatus::Success;
    let fields: Vec<Value> = primes
        .iter()
        .map(|&p| {
            let attempt = m.reduce_mod_p(p).and_then(|r| {
                let mut census = census_parallel(&r, &DimSelection::All)?;
                transverse_combinatorial(&r, &mut census)
            });
            match attempt {
                Ok(locus) => report::locus(p, &locus),
                Err(e) => {
                    status = status.max(error_status(&e));
                    report::error(p, &e)
                }
            }
        })
        .collect();
    (json!({ "fields": fields }), status)
}

fn check(
    m: &Representation<Rationals>,
    primes: &[u32],
    selection: &DimSelection,
) -> (Value, ExitStatus) {
    let keep = |e: &DimVector| match selection {
        DimSelection::All => true,
        DimSelection::One(x) => x == e,
    };
    let mut verdict = true;
    let mut status = ExitStatus::Success;
    let fields: Vec<Value> = primes
        .iter()
        .map(|&p| {
            let attempt = m.reduce_mod_p(p).and_then(|r| {
                let mut census = census_parallel(&r, &DimSelection::All)?;
                compare_loci(&r, &mut census)
            });
            match attempt {
                Ok(cmp) => {
                    let (value, equal) = report::comparison(&cmp, keep);
                    verdict &= equal;
                    value
                }
                Err(e) => {
                    verdict = false;
                    status = status.max(error_status(&e));
                    report::error(p, &e)
                }
            }
        })
        .collect();
    if !verdict {
        status = status.max(ExitStatus::Counterexample);
    }
    (json!({ "fields": fields, "verdict": verdict }), status)
}

fn chi(
    m: &Representation<Rationals>,
    primes: &[u32],
    selection: &DimSelection,
) -> Result<(Value, ExitStatus), CliError> {
    let vectors = selection.vectors(m.dims())?;
    let polynomials = vectors
        .par_iter()
        .map(|e| match counting_polynomial(m, e, primes) {
            Ok(cp) => Ok(report::counting(e, &cp)),
            Err(Error::NotPolynomial { counts }) => Ok(report::not_polynomial(e, &counts)),
            Err(other) => Err(other),
        })
        .collect::<quivergr_core::Result<Vec<_>>>()?;
    Ok((json!({ "polynomials": polynomials }), ExitStatus::Success))
}
