mod args;
mod commands;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// Exit 1 is reserved for formula/oracle disagreement, 2 for bad input.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Mismatch(String),
    /// Downstream reader went away, e.g. `| head`.
    Closed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = match &cli.command {
        Command::Disc(a) => commands::disc(a, &mut out),
        Command::Compare(a) => commands::compare(a, &mut out),
        Command::Fuzz(a) => commands::fuzz(a, &mut out),
        Command::Bench(a) => commands::bench(a, &mut out),
    };
    let _ = out.flush();
    match result {
        Ok(()) | Err(CliError::Closed) => ExitCode::SUCCESS,
        Err(CliError::Mismatch(msg)) => {
            eprintln!("mismatch: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
