//! Standard-library companion to `maxent-core`: file ingestion, CSV / JSON
//! report emission, run manifests, parallel sampling and the `maxent`
//! command line.

pub mod cli;
mod commands;
mod error;
pub mod input;
pub mod output;
pub mod parallel;

use std::ffi::OsString;

use clap::Parser;

pub use error::{CliError, ExitStatus};

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match cli::Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitStatus::Usage as u8
            } else {
                ExitStatus::Success as u8
            };
        }
    };
    match commands::dispatch(&cli) {
        Ok(status) => status as u8,
        Err(e) => {
            eprintln!("maxent: {}", e.message);
            e.status as u8
        }
    }
}
