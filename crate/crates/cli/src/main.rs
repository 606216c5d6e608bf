//! `staircase`: enumeration, sampling, closed-form laws, verification
//! suites and convergence tables for staircase tableaux.
//!
//! Exit status: 0 on success, 1 when a verification finds a mismatch,
//! 2 on a usage or input error.

mod commands;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use staircase::diagonal::Stat;
use staircase::Rational;

#[derive(Parser, Debug)]
#[command(name = "staircase", version, about = "Exact computations on staircase tableaux")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write every tableau of size n in canonical text form.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Four-symbol tableaux instead of α/β only.
        #[arg(long)]
        full: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the number of tableaux of size n.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        full: bool,
    },
    /// Draw seeded exact samples.
    Sample(SampleArgs),
    /// Single-box laws.
    BoxDist {
        #[command(flatten)]
        measure: MeasureArgs,
        /// Row; with --j restricts output to one box.
        #[arg(long, requires = "j")]
        i: Option<usize>,
        #[arg(long, requires = "i")]
        j: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Factorial moments and PMF of a second-diagonal statistic.
    Diag {
        #[command(flatten)]
        measure: MeasureArgs,
        #[arg(long, value_parser = parse_stat)]
        stat: Stat,
        /// Highest factorial moment reported (default: the last non-zero one).
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Closed-form factorial moments next to the enumeration moments.
    Moments {
        #[command(flatten)]
        measure: MeasureArgs,
        #[arg(long, value_parser = parse_stat)]
        stat: Stat,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Total-variation distance to the Poisson limit over a range of n.
    Tv {
        #[arg(long, value_parser = parse_stat)]
        stat: Stat,
        #[arg(long, default_value = "1", value_parser = parse_rational)]
        a: Rational,
        #[arg(long, default_value = "1", value_parser = parse_rational)]
        b: Rational,
        /// Inclusive range `lo:hi`.
        #[arg(long, value_parser = parse_range)]
        n_range: (usize, usize),
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Run verification suites against the enumeration oracle.
    Verify {
        /// A suite name, `diagonals`, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Compare the chain's stationary law with the tableaux formula.
    AsepVerify {
        #[arg(long)]
        n: usize,
        /// `alpha,beta,gamma,delta,u,q`.
        #[arg(long)]
        rates: String,
        #[arg(long, value_enum, default_value = "alpha-delta")]
        convention: Convention,
    },
    /// Law of the symbol count on diagonal d (exact when enumerable).
    ExploreDiagonal {
        #[command(flatten)]
        measure: MeasureArgs,
        /// Diagonal index, boxes with i + j = d.
        #[arg(long)]
        d: usize,
        /// Force sampling with this many draws.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Args, Debug, Clone)]
pub struct MeasureArgs {
    #[arg(long)]
    pub n: usize,
    /// a = 1/α as `p/q`; 0 means α = ∞.
    #[arg(long, default_value = "1", value_parser = parse_rational)]
    pub a: Rational,
    /// b = 1/β as `p/q`; 0 means β = ∞.
    #[arg(long, default_value = "1", value_parser = parse_rational)]
    pub b: Rational,
}

#[derive(Args, Debug, Clone)]
pub struct SampleArgs {
    #[command(flatten)]
    pub measure: MeasureArgs,
    /// Turns on four-symbol sampling with this γ rate.
    #[arg(long, value_parser = parse_rational)]
    pub gamma: Option<Rational>,
    /// Turns on four-symbol sampling with this δ rate.
    #[arg(long, value_parser = parse_rational)]
    pub delta: Option<Rational>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub count: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    AlphaDelta,
    AlphaGamma,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    staircase::rational::parse(s).map_err(|e| format!("{e}; expected an integer or p/q"))
}

fn parse_stat(s: &str) -> Result<Stat, String> {
    s.parse()
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let bad = || format!("invalid range {s:?}; expected lo:hi with lo <= hi");
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// What a command produced.
pub struct Outcome {
    pub text: String,
    /// Where `text` goes; standard output when `None`.
    pub out: Option<PathBuf>,
    /// False when a verification found a mismatch.
    pub ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(outcome) => {
            let written = match &outcome.out {
                Some(path) => fs::write(path, &outcome.text).map_err(anyhow::Error::from),
                None => std::io::stdout().write_all(outcome.text.as_bytes()).map_err(anyhow::Error::from),
            };
            if let Err(e) = written {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
