use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quivergr::{run, Command, ExitStatus, Options, OutputFormat, Source};

/// Quiver Grassmannians over finite fields: censuses, transverse loci, tube data and
/// counting polynomials.
#[derive(Parser, Debug)]
#[command(name = "quivergr", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Every point of Gr_e(M)(F_q) with dim Hom(N, M/N) and dim Ext¹(N, M/N).
    Census(Flags),
    /// The points with Ext¹(N, M/N) = 0. Works for any acyclic quiver.
    Transverse(Flags),
    /// Tube coordinates and the two ray submodules bounding the excluded window.
    Tube(Flags),
    /// Compare the combinatorial and homological transverse loci point by point.
    Check(Flags),
    /// Counting polynomials and Euler characteristics (default primes 2,3,5).
    Chi(Flags),
    /// Print the input document of a built-in fixture.
    Example(Flags),
}

#[derive(Args, Debug)]
struct Flags {
    /// JSON input document.
    #[arg(long, conflicts_with = "builtin", value_name = "PATH")]
    input: Option<PathBuf>,
    /// Built-in fixture: a21-ex1, a21-ex3, a21-reg:<t>, kronecker-reg:<n>, kronecker-preproj:<n>.
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
    /// Comma-separated primes.
    #[arg(long = "q", value_delimiter = ',', value_name = "PRIMES")]
    q: Option<Vec<u32>>,
    /// A single dimension vector, comma-separated.
    #[arg(
        long,
        value_delimiter = ',',
        conflicts_with = "all_e",
        value_name = "VECTOR"
    )]
    e: Option<Vec<usize>>,
    /// Every dimension vector (the default).
    #[arg(long)]
    all_e: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Add wall-clock timing to the report. Reports are then no longer reproducible.
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Table,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(ExitStatus::InputError.code() as u8),
            };
        }
    };
    let (command, flags) = match cli.command {
        Cmd::Census(f) => (Command::Census, f),
        Cmd::Transverse(f) => (Command::Transverse, f),
        Cmd::Tube(f) => (Command::Tube, f),
        Cmd::Check(f) => (Command::Check, f),
        Cmd::Chi(f) => (Command::Chi, f),
        Cmd::Example(f) => (Command::Example, f),
    };
    let source = match (flags.input, flags.builtin) {
        (Some(path), _) => Some(Source::File(path)),
        (None, Some(name)) => Some(Source::Builtin(name)),
        (None, None) => None,
    };
    let opts = Options {
        command,
        source,
        primes: flags.q,
        e: flags.e,
        format: match flags.format {
            Format::Json => OutputFormat::Json,
            Format::Table => OutputFormat::Table,
        },
        timing: flags.timing,
    };
    let status = match run(&opts) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            match outcome.status {
                ExitStatus::Success => {}
                ExitStatus::Counterexample => eprintln!("quivergr: the two transverse loci differ"),
                ExitStatus::InputError | ExitStatus::Internal => {
                    eprintln!("quivergr: some primes failed, see the report")
                }
            }
            outcome.status
        }
        Err(e) => {
            eprintln!("quivergr: {e}");
            e.exit_status()
        }
    };
    ExitCode::from(status.code() as u8)
}
