use std::process::ExitCode;

use clap::Parser;
use dsr_cli::Cli;

fn main() -> ExitCode {
    // clap exits with 2 on usage errors, matching the contract.
    dsr_cli::run(Cli::parse())
}
