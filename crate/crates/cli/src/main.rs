mod args;
mod commands;
mod config;
mod failure;
mod verify;

use std::process::ExitCode;

use clap::{CommandFactory, FromArgMatches};

use args::{Cli, Command};
use failure::Failure;

fn run() -> Result<u8, Failure> {
    let argv = config::expand(std::env::args().collect())?;
    let matches = Cli::command()
        .mut_subcommands(|s| s.args_override_self(true))
        .try_get_matches_from(argv)
        .unwrap_or_else(|e| e.exit());
    let cli = Cli::from_arg_matches(&matches).unwrap_or_else(|e| e.exit());
    match &cli.command {
        Command::Build(a) => commands::build(a),
        Command::Spectrum(a) => commands::spectrum(a),
        Command::Check(a) => commands::check(a),
        Command::Verify(a) => verify::verify(a),
        Command::Simulate(a) => commands::simulate(a),
        Command::Sweep(a) => commands::sweep(a),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code)
        }
    }
}
