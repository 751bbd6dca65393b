//! `qhe` — quantum Carnot/Otto heat-engine reports, figure sweeps, and the
//! oracle validation suite.

mod report;
mod single;
mod sweep;
mod validate;

use clap::{Parser, Subcommand};
use std::process::ExitCode;

const LONG_ABOUT: &str = "\
Computes heat, work, and efficiency of quantum Carnot and Otto cycles for a
particle in an infinite square well, with optional minimal-length (GUP)
corrections to the spectrum.

Units: natural units throughout, hbar = 1 and k = 1, so beta = 1/T exactly
and every flag value and output column is a dimensionless number.

Numbers are printed with 9 significant digits: plain decimal notation while
the decimal exponent lies in [-4, 8], scientific d.dddddddde±x otherwise,
and zero as 0.00000000. CSV uses ',' separators and LF line endings; JSON
is an array of row objects with the same column names. Identical
invocations produce byte-identical output.

Exit codes: 0 success; 1 validation-suite failure; 2 invalid flags or an
inconsistent cycle specification; 3 GUP regime violation (delta = 4*m*
beta_G*gamma above the --delta-max threshold at a visited state).";

#[derive(Parser)]
#[command(name = "qhe", version, about = "Quantum heat-engine cycles with GUP corrections", long_about = LONG_ABOUT)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report one quantum Carnot cycle (heats per leg, work, efficiency)
    Carnot(single::CarnotArgs),
    /// Report one quantum Otto cycle (heats per leg, work, efficiency)
    Otto(single::OttoArgs),
    /// Sweep a figure function over a grid and emit CSV/JSON rows
    Sweep(sweep::SweepArgs),
    /// Run every oracle-vs-closed-form check and report pass/fail
    Validate(validate::ValidateArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Carnot(args) => single::run_carnot(&args),
        Command::Otto(args) => single::run_otto(&args),
        Command::Sweep(args) => sweep::run(&args),
        Command::Validate(args) => return validate::run(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                qhe_core::Error::Regime { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
