mod commands;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use fanolab_core::format::FormatError;
use fanolab_core::laurent::LaurentError;
use fanolab_core::monodromy::MonodromyError;
use fanolab_core::mutation::{DEFAULT_MAX_DEPTH, DEFAULT_MAX_NODES};
use fanolab_core::periods::PeriodsError;
use serde_json::Value;

#[derive(Parser)]
#[command(name = "fanolab", version, about = "Exact computations on Fano polygons and their Laurent polynomials")]
struct Cli {
    /// Print a human-readable summary instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

/// A document argument: a file path, inline JSON, or `-` for stdin.
#[derive(Args, Clone)]
pub struct Input {
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a vertex list is a Fano polygon.
    Validate(Input),
    /// Heights, widths and normals of every edge.
    Edges(Input),
    /// Singularity content (k, basket).
    Content(Input),
    /// Anticanonical degree, computed three ways.
    Degree(Input),
    /// Mutate a polygon, or a Laurent polynomial with --laurent.
    Mutate {
        #[command(flatten)]
        input: Input,
        /// Weight vector u as "x,y".
        #[arg(long, allow_hyphen_values = true, requires = "factor")]
        u: Option<String>,
        /// Factor direction F as "x,y".
        #[arg(long = "factor", allow_hyphen_values = true, requires = "u")]
        factor: Option<String>,
        /// Mutate with respect to the edge with this index instead.
        #[arg(long, conflicts_with = "u")]
        edge: Option<usize>,
        /// Treat the input as a Laurent polynomial.
        #[arg(long)]
        laurent: bool,
    },
    /// Breadth-first mutation graph up to equivalence.
    Orbit {
        #[command(flatten)]
        input: Input,
        #[arg(long, env = "FANOLAB_MAX_NODES", default_value_t = DEFAULT_MAX_NODES)]
        max_nodes: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
    },
    /// Standard maximally mutable Laurent polynomial with free parameters.
    Mmlp {
        #[command(flatten)]
        input: Input,
        /// Mutation depth explored when collecting constraints.
        #[arg(long, default_value_t = fanolab_core::laurent::DEFAULT_CLOSURE_DEPTH)]
        depth: usize,
    },
    /// Sectional and mutable genus with the per-edge breakdown.
    Genus(Input),
    /// Monodromy matrix at t=0.
    Monodromy(Input),
    /// Singularity content read back from a monodromy matrix.
    Recover(Input),
    /// Cyclotomic factorisation of the characteristic polynomial.
    Eigenvalues(Input),
    /// Period sequence of a Laurent polynomial, or of the standard MMLP of a polygon.
    Period {
        #[command(flatten)]
        input: Input,
        /// Highest power of t.
        #[arg(long, short = 'n', default_value_t = 20)]
        terms: usize,
    },
    /// Apply an operator to a sequence.
    ApplyOp {
        operator: String,
        sequence: String,
    },
    /// Guess an operator annihilating a sequence.
    GuessOp {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 4)]
        max_order: usize,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
    },
    /// Predicted genus, ramification and degree of the period operator.
    Predict {
        #[command(flatten)]
        input: Input,
        /// Factor assignment document for the T-cones.
        #[arg(long)]
        assignment: Option<String>,
    },
    /// Canonical representative under GL(2,Z).
    NormalForm(Input),
}

/// Rendered result of a subcommand.
pub struct Output {
    pub json: Value,
    pub pretty: String,
}

/// Reads a document from a path, inline JSON or stdin.
pub fn read_document(arg: &str) -> Result<Value> {
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else if arg.trim_start().starts_with(['{', '[']) {
        arg.to_owned()
    } else {
        std::fs::read_to_string(PathBuf::from(arg)).with_context(|| format!("reading {arg}"))?
    };
    serde_json::from_str(&text).map_err(|e| FormatError::from(e).into())
}

fn run(cli: &Cli) -> Result<Output> {
    use commands as c;
    match &cli.command {
        Command::Validate(i) => c::validate(&i.input),
        Command::Edges(i) => c::edges(&i.input),
        Command::Content(i) => c::content(&i.input),
        Command::Degree(i) => c::degree(&i.input),
        Command::Mutate { input, u, factor, edge, laurent } => {
            c::mutate(&input.input, u.as_deref(), factor.as_deref(), *edge, *laurent)
        }
        Command::Orbit { input, max_nodes, max_depth } => c::orbit(&input.input, *max_nodes, *max_depth),
        Command::Mmlp { input, depth } => c::mmlp(&input.input, *depth),
        Command::Genus(i) => c::genus(&i.input),
        Command::Monodromy(i) => c::monodromy(&i.input),
        Command::Recover(i) => c::recover(&i.input),
        Command::Eigenvalues(i) => c::eigenvalues(&i.input),
        Command::Period { input, terms } => c::period(&input.input, *terms),
        Command::ApplyOp { operator, sequence } => c::apply_op(operator, sequence),
        Command::GuessOp { input, max_order, max_degree } => c::guess_op(&input.input, *max_order, *max_degree),
        Command::Predict { input, assignment } => c::predict(&input.input, assignment.as_deref()),
        Command::NormalForm(i) => c::normal_form(&i.input),
    }
}

/// Exit code for a failed run: 2 for bad input, 3 for unsupported cases,
/// 4 for internal inconsistencies.
fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<MonodromyError>() {
            return monodromy_code(e);
        }
        if let Some(e) = cause.downcast_ref::<PeriodsError>() {
            return match e {
                PeriodsError::OutOfScopeBasket { .. } | PeriodsError::NotFound { .. } => 3,
                PeriodsError::SequenceTooShort { .. } | PeriodsError::ZeroLeading => 2,
                PeriodsError::Laurent(e) => laurent_code(e),
                PeriodsError::Monodromy(e) => monodromy_code(e),
            };
        }
        if let Some(e) = cause.downcast_ref::<LaurentError>() {
            return laurent_code(e);
        }
        if let Some(FormatError::Laurent(e)) = cause.downcast_ref::<FormatError>() {
            return laurent_code(e);
        }
    }
    2
}

fn monodromy_code(e: &MonodromyError) -> u8 {
    match e {
        MonodromyError::NonIntegral(_) | MonodromyError::Hj(_) => 4,
        MonodromyError::UnsupportedCone { .. } | MonodromyError::UnrecognizedBlock(_) => 3,
    }
}

fn laurent_code(e: &LaurentError) -> u8 {
    match e {
        LaurentError::Inconsistent => 4,
        _ => 2,
    }
}

fn error_code(err: &anyhow::Error) -> String {
    let msg = err.chain().map(|c| c.to_string()).find(|m| {
        m.split(':').next().is_some_and(|head| !head.is_empty() && head.chars().all(|c| c.is_ascii_uppercase() || c == '_' || c.is_ascii_digit()))
    });
    msg.and_then(|m| m.split(':').next().map(str::to_owned)).unwrap_or_else(|| "ERROR".to_owned())
}

/// Writes one line to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(64),
            };
        }
    };
    let pretty = cli.pretty || cli.format == Some(Format::Pretty);
    match run(&cli) {
        Ok(out) => {
            let text = if pretty { out.pretty.trim_end().to_owned() } else { out.json.to_string() };
            emit(&text);
            ExitCode::SUCCESS
        }
        Err(err) => {
            let code = exit_code(&err);
            if pretty {
                eprintln!("error: {err:#}");
            } else {
                let doc = serde_json::json!({ "error": error_code(&err), "message": format!("{err:#}") });
                emit(&doc.to_string());
            }
            ExitCode::from(code)
        }
    }
}
