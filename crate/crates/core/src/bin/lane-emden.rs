use std::io;
use std::process::ExitCode;

use clap::Parser;
use lane_emden::cli::{run, Cli};

/// Exit status for command-line usage errors, kept apart from the solver codes 2-4.
const USAGE_ERROR: u8 = 64;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE_ERROR } else { 0 });
        }
    };
    match run(&cli, &mut io::stdout().lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.failure_record());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
