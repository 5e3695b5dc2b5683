//! `spinpacket`: validate Weil polynomials and report the unramified
//! Spin/GSpin packet data attached to them.
//!
//! Exit codes: 0 ok, 1 internal error, 2 invalid polynomial, 3 usage or
//! parse error, 4 corpus expectation mismatch.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{error::ErrorKind, Args, Parser, Subcommand};
use num_bigint::BigInt;

#[derive(Parser)]
#[command(
    name = "spinpacket",
    version,
    about = "Weil polynomials and unramified Spin/GSpin L-packets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that (P, q) is a Weil q-polynomial.
    ///
    /// Checks the prime power q, the degree, the functional equation and the
    /// root moduli exactly. Honda-Tate admissibility (whether the class is
    /// realised by an abelian variety) is not checked.
    Validate {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        json: bool,
    },
    /// Full packet report for one class, or for every record of a JSONL file.
    Analyze {
        #[command(flatten)]
        poly: OptPolyArgs,
        /// JSONL file of input records; output is one JSON line per record.
        #[arg(long, conflicts_with_all = ["q", "coeffs"])]
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-9, value_parser = parse_tol)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Base change to F_{q^r}.
    Basechange {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        #[arg(long)]
        json: bool,
    },
    /// Radical, center dimensions, evenness and twist.
    Invariants {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long)]
        json: bool,
    },
    /// Seeded stream of Weil polynomials as JSONL input records.
    Gen {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 1)]
        g: usize,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Analyze a corpus and compare against its expected fields.
    Corpus {
        /// JSONL corpus; the bundled example corpus when omitted.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-9, value_parser = parse_tol)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct PolyArgs {
    #[arg(long)]
    q: u64,
    /// Coefficients low to high, leading 1 included: `3,-1,1`.
    #[arg(long, required = true, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_int)]
    coeffs: Vec<BigInt>,
}

#[derive(Args)]
struct OptPolyArgs {
    #[arg(long, required_unless_present = "file", requires = "coeffs")]
    q: Option<u64>,
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        value_parser = parse_int,
        requires = "q"
    )]
    coeffs: Vec<BigInt>,
}

fn parse_int(s: &str) -> Result<BigInt, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("not an integer: {s:?}"))
}

fn parse_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t.is_finite() && t > 0.0 && t < 1.0 => Ok(t),
        _ => Err(format!("tolerance must be a number in (0, 1), got {s:?}")),
    }
}

/// A command outcome other than success, carrying its exit code.
#[derive(Debug)]
pub enum Failure {
    Internal(String),
    Invalid(String),
    Usage(String),
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Internal(_) => 1,
            Failure::Invalid(_) => 2,
            Failure::Usage(_) => 3,
            Failure::Mismatch(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Internal(m)
            | Failure::Invalid(m)
            | Failure::Usage(m)
            | Failure::Mismatch(m) => m,
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Validate { poly, json } => commands::validate(poly.q, &poly.coeffs, json),
        Command::Analyze {
            poly,
            file,
            tol,
            json,
        } => match file {
            Some(path) => commands::analyze_file(&path, tol, json),
            None => commands::analyze(poly.q.unwrap_or_default(), &poly.coeffs, tol, json),
        },
        Command::Basechange { poly, r, json } => {
            commands::basechange(poly.q, &poly.coeffs, r, json)
        }
        Command::Invariants { poly, json } => commands::invariants(poly.q, &poly.coeffs, json),
        Command::Gen { q, g, count, seed } => commands::gen(q, g, count, seed),
        Command::Corpus { file, tol, json } => commands::corpus(file.as_deref(), tol, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(3),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message().is_empty() {
                eprintln!("error: {}", f.message());
            }
            ExitCode::from(f.code())
        }
    }
}
