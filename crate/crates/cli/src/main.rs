//! Command-line runner: evaluates phases, evolved states, measures,
//! complementarity checks and figure sweeps, writing CSV or JSON-lines
//! artifacts.

mod config;
mod run;

use std::process::ExitCode;

use clap::Parser;

use config::CliArgs;
use run::{execute, Outcome};

/// Exit codes, one per failure class.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const VERIFICATION_FAILURE: u8 = 1;
    pub const CONFIG_ERROR: u8 = 2;
    pub const NUMERICAL_FAILURE: u8 = 3;
    pub const IO_FAILURE: u8 = 4;
}

fn main() -> ExitCode {
    let args = CliArgs::parse();
    match config::build_config(&args).and_then(execute) {
        Ok(Outcome::Success) => ExitCode::from(exit::SUCCESS),
        Ok(Outcome::VerificationFailed) => {
            eprintln!("verification failed: a saturated-expected relation missed tolerance");
            ExitCode::from(exit::VERIFICATION_FAILURE)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
