//! `hankel`: exact Hankel determinants and transforms from the command line.
//!
//! Exit codes: 0 on success, 1 for data-level failures (short sequence,
//! unreadable input, disagreement in `verify`/`bench`), 2 for usage errors.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hankel_core::{load_sequence, Error, SequenceDescriptor, SequenceSource};

use crate::output::OutputFormat;

#[derive(Debug, Parser)]
#[command(
    name = "hankel",
    version,
    about = "Exact Hankel determinants of shifted Catalan sequences"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain, global = true)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct SequenceArgs {
    /// `catalan` or an inline comma-separated list such as `1,1,2,5`
    #[arg(long, default_value = "catalan", conflicts_with = "seq_file")]
    seq: SequenceDescriptor,

    /// File with one decimal integer per line
    #[arg(long, value_name = "PATH")]
    seq_file: Option<PathBuf>,
}

impl SequenceArgs {
    fn load(&self) -> Result<SequenceSource, Error> {
        match &self.seq_file {
            Some(path) => load_sequence(&SequenceDescriptor::File(path.clone())),
            None => load_sequence(&self.seq),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Auto,
    Laplace,
    Bareiss,
    Cigler,
    ClosedForm,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Laplace => "laplace",
            Method::Bareiss => "bareiss",
            Method::Cigler => "cigler",
            Method::ClosedForm => "closed-form",
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print C_0 … C_{count-1}
    Catalan {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Evaluate det(a_{i+j+r}) for 0 ≤ i, j < n
    HankelDet {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        seq: SequenceArgs,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Hankel transform for n = 0 … max-n at a fixed shift
    Transform {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        max_n: usize,
        #[command(flatten)]
        seq: SequenceArgs,
    },
    /// Compare elimination, Cigler's reduction and the product formula on a grid
    Verify {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        max_r: usize,
        /// Run the elimination path on this sequence instead of the builtin Catalan numbers
        #[arg(long, value_name = "PATH")]
        seq_file: Option<PathBuf>,
    },
    /// Time Bareiss elimination against the product formula
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        r: Vec<usize>,
    },
}

/// What went wrong, mapped onto an exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Data(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::MethodUnavailable { .. }
            | Error::DimensionCapExceeded { .. }
            | Error::UnsupportedShift(_) => Failure::Usage(err.to_string()),
            _ => Failure::Data(err.to_string()),
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = cli.format;
    match cli.command {
        Command::Catalan { count } => commands::catalan(count as usize, format),
        Command::HankelDet { n, r, seq, method } => {
            commands::hankel_det(n, r, &seq.load()?, method, format)
        }
        Command::Transform { r, max_n, seq } => commands::transform(r, max_n, &seq.load()?, format),
        Command::Verify {
            max_n,
            max_r,
            seq_file,
        } => {
            let source = match seq_file {
                Some(path) => load_sequence(&SequenceDescriptor::File(path))?,
                None => SequenceSource::BuiltinCatalan,
            };
            commands::verify(max_n, max_r, &source, format)
        }
        Command::Bench { n, r } => commands::bench(&n, &r, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
