//! Command-line front end for `funident`: an expression language for GF(2)(t)
//! and JSON reports.

pub mod commands;
pub mod expr;
pub mod report;

use std::ffi::OsString;

use clap::Parser;

pub use commands::{Cli, CliError};

/// Parses `args` (program name first), runs the command, returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match commands::dispatch(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
