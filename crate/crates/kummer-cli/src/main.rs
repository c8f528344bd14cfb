//! `kummer`: exact-arithmetic checks, certified classification, and
//! degeneration reports for Kummer spaces in symbol algebras of prime
//! degree. See `--help` for the subcommand list and the project README
//! for file formats and exit codes.

mod commands;
mod element_file;
mod report;

use std::process::ExitCode;

fn main() -> ExitCode {
    commands::run()
}
