//! Command-line front end for `scalar-ac`. [`run`] is the whole program;
//! the binary only forwards `std::env::args` and the standard streams.

pub mod args;
mod commands;
pub mod error;
pub mod table;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

use args::{Cli, Command};
use error::{CliError, EXIT_OK, EXIT_USAGE};

/// Runs one invocation and returns its exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let result: Result<i32, CliError> = match &cli.command {
        Command::Mdm(a) => commands::mdm(a, out),
        Command::Yukawa(a) => commands::yukawa(a, out),
        Command::Phase(a) => commands::phase(a, out),
        Command::Fringe(a) => commands::fringe(a, out),
        Command::IrScan(a) => commands::ir_scan_cmd(a, out),
        Command::CheckReduction(a) => commands::check_reduction(a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.code
        }
    }
}
