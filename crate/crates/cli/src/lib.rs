//! Command-line front end for `ordchain`.
//!
//! [`run`] takes the argument list and output streams and returns the exit
//! code: 0 on success, 1 for unreadable or invalid input, 2 for usage
//! errors, 3 when a check finds a violation.

mod commands;
mod input;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ordchain::encodings::Encoder;
use ordchain::reductions::Target;
use ordchain::{OrderKind, OrderOracle, Strictness, Tag};
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}:{line}: `{token}`: {reason}")]
    Parse {
        path: String,
        line: usize,
        token: String,
        reason: String,
    },
    #[error("{0}")]
    Invalid(String),
    #[error("cannot write output: {0}")]
    Output(#[from] io::Error),
}

macro_rules! invalid_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Invalid(e.to_string())
            }
        }
    )*};
}

invalid_from!(
    ordchain::chains::ChainError,
    ordchain::reductions::ReductionError,
    ordchain::dense::DenseError,
    ordchain::orders::OrderError,
    ordchain::encodings::EncodeError,
    ordchain::trees::TreeError,
    csv::Error
);

#[derive(Debug, Parser)]
#[command(name = "ordchain", version, about = "Chains, tree reductions and Cantor schemes over countable orders")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct OrderArgs {
    /// divides, delta, int, subset, subset-bit, rl, lex or rational
    #[arg(long)]
    pub order: OrderKind,
    /// Use the strict order instead of its reflexive closure.
    #[arg(long)]
    pub strict: bool,
    /// Element domain of `delta`: nat, int, rational, word or bits.
    #[arg(long)]
    pub domain: Option<Tag>,
}

impl OrderArgs {
    pub fn oracle(&self) -> Result<OrderOracle, CliError> {
        let strictness = if self.strict { Strictness::Strict } else { Strictness::NonStrict };
        match (self.order, self.domain) {
            (OrderKind::Delta, d) => Ok(OrderOracle::delta(d.unwrap_or(Tag::Nat), strictness)),
            (kind, Some(d)) if d != kind.default_domain() => Err(CliError::Invalid(format!(
                "--domain {d} does not apply to {kind}, which compares {} elements",
                kind.default_domain()
            ))),
            (kind, _) => Ok(OrderOracle::new(kind, strictness)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Fixture {
    /// 0, 1 and the endpoints of the middle-thirds gaps
    Endpoints,
    /// midpoints of the middle-thirds gaps
    Midpoints,
    /// dyadic rationals in (0, 1)
    Dyadic,
    /// images of the enumerated ω-words under phi_rational
    Phi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Extractor {
    P,
    Y,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NamedSet {
    Cantor3,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Longest chain, its witness and constant-subsequence statistics of a sequence file.
    Analyze {
        /// Whitespace-separated elements; `-` reads standard input.
        file: PathBuf,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Reduces a tree file to a sequence and compares chain lengths.
    Reduce {
        /// One ω-word per line; `e` is the root.
        file: PathBuf,
        #[arg(long)]
        target: Target,
        #[arg(long)]
        horizon: usize,
        /// Add missing prefixes instead of rejecting the tree.
        #[arg(long)]
        closure: bool,
        /// Write the image sequence here, one element per line.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Encodes naturals (double) or ω-words (binary, rational).
    Encode {
        #[arg(long)]
        map: Encoder,
        /// Also print the binary expansion of rational images.
        #[arg(long)]
        expansion: bool,
        #[arg(required = true)]
        values: Vec<String>,
    },
    /// Checks a reduction pipeline on random trees.
    Fuzz {
        /// subset, rl, rational, binary, or `STAGES@ORDER` such as `binary@subset-bit`.
        #[arg(long)]
        pipeline: String,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        horizon: usize,
        /// Write the CSV report here instead of standard output.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = 500)]
        node_cap: usize,
        #[arg(long, default_value_t = 12)]
        depth_cap: usize,
        #[arg(long, default_value_t = 1.5)]
        mean_offspring: f64,
        /// Children get distinct labels below this bound.
        #[arg(long, default_value_t = 3)]
        labels: u64,
    },
    /// Splitting-depth table of a list of rationals.
    Classify {
        file: PathBuf,
    },
    /// Builds a Cantor scheme and optionally extracts P or Y from a stream.
    Cantor {
        #[arg(long, value_enum, conflicts_with = "stages")]
        set: Option<NamedSet>,
        /// Stage file: one stage per line, intervals `lo hi` separated by `;`.
        #[arg(long)]
        stages: Option<PathBuf>,
        #[arg(long)]
        depth: usize,
        /// Enumeration of X: whitespace-separated rationals.
        #[arg(long, conflicts_with = "fixture")]
        stream: Option<PathBuf>,
        /// Bundled enumeration of X.
        #[arg(long, value_enum)]
        fixture: Option<Fixture>,
        #[arg(long, value_enum, ignore_case = true)]
        extract: Option<Extractor>,
        /// Number of stream elements to read.
        #[arg(short, default_value_t = 500)]
        n: usize,
        /// Sample this many pairs and look for a witness between each.
        #[arg(long, default_value_t = 0)]
        pairs: usize,
        /// Stream elements available to the density check (default 8n).
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Decides whether `prefix | cycle` has an infinite chain.
    DecideUp {
        /// e.g. "2 3 | 4 8"
        sequence: String,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Checks order axioms on a support file.
    CheckAxioms {
        file: PathBuf,
        #[command(flatten)]
        order: OrderArgs,
        /// Require totality even for orders not declared linear.
        #[arg(long)]
        total: bool,
    },
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return e.exit_code();
        }
    };
    match commands::dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}
