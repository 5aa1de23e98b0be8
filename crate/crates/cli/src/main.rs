//! `quasiper`: exact quasi-polynomial computations from the command line.
//!
//! Exit codes are a stable contract: 0 success, 1 usage error, 2 budget
//! exceeded, 3 internal cross-check failure.

mod commands;
mod render;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use std::path::PathBuf;

use quasiper_core::Error;

#[derive(Parser)]
#[command(
    name = "quasiper",
    version,
    about = "Quasi-polynomials, minimum periods, and cyclotomic generating functions, all in exact rational arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ehrhart quasi-polynomial of the axis simplex given by a tuple of
    /// positive integers, with its period profile and j-indices
    Ehrhart {
        /// Comma-separated positive integers p_0,...,p_d
        #[arg(long)]
        p: String,
        /// Also print values L(0..=KMAX) cross-checked against the counting
        /// oracle
        #[arg(long)]
        kmax: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Count lattice points: a simplex tuple or a polytope JSON file
    Count {
        /// Comma-separated simplex tuple
        #[arg(long)]
        p: Option<String>,
        /// Path to a polytope JSON file {"A": .., "b": .., "vertices": .., "box": ..}
        #[arg(long)]
        polytope: Option<PathBuf>,
        /// Dilation factor
        #[arg(long)]
        k: u64,
        #[arg(long)]
        json: bool,
    },
    /// Convolve two quasi-polynomials (simplex tuples or JSON files)
    Convolve {
        /// Simplex tuple for the first factor
        #[arg(long)]
        a: Option<String>,
        /// Simplex tuple for the second factor
        #[arg(long)]
        b: Option<String>,
        /// Quasi-polynomial JSON file for the first factor
        #[arg(long)]
        qp_a: Option<PathBuf>,
        /// Quasi-polynomial JSON file for the second factor
        #[arg(long)]
        qp_b: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Convolution period bounds; with --construct also run the sharpness
    /// construction and report equality
    Zaslavsky {
        /// Comma-separated minimum periods alpha_0,...,alpha_d
        #[arg(long)]
        alpha: String,
        /// Comma-separated minimum periods beta_0,...,beta_e
        #[arg(long)]
        beta: String,
        /// Build the two simplices and compare actual periods to the bounds
        #[arg(long)]
        construct: bool,
        /// With --construct: only require alpha and beta to be chains
        /// separately (weaker hypothesis, report-only, nothing asserted)
        #[arg(long)]
        experimental: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check the minimum-period prediction for 1/prod(1 - x^{a_i}); --scan
    /// enumerates exponent multisets and streams one JSON line per instance
    Conjecture {
        /// Comma-separated exponents
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        scan: bool,
        /// Multiset size for --scan
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Largest exponent for --scan
        #[arg(long, default_value_t = 6)]
        max_a: u64,
        /// Sample the enumeration with this seed instead of running all of it
        #[arg(long)]
        seed: Option<u64>,
        /// Sample size used together with --seed
        #[arg(long, default_value_t = 50)]
        limit: usize,
        /// Restrict to distinct divisibility chains; mismatches then fail
        #[arg(long)]
        chains_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// Generating-function conversions and pole orders
    Gf {
        /// Comma-separated rational numerator coefficients, lowest degree first
        #[arg(long)]
        num: Option<String>,
        /// Denominator prod(1 - x^{a_i}) given by its exponents a_1,...,a_m
        #[arg(long)]
        den_exponents: Option<String>,
        /// Denominator as raw comma-separated coefficients, lowest degree first
        #[arg(long)]
        den_poly: Option<String>,
        /// Convert a quasi-polynomial JSON file to its generating function
        #[arg(long)]
        from_qp: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::BudgetExceeded { .. } => 2,
        Error::Internal(_) => 3,
        _ => 1,
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{err}");
                std::process::exit(0);
            }
            eprint!("{err}");
            std::process::exit(1);
        }
    };
    match commands::run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(exit_code_for(&err));
        }
    }
}
