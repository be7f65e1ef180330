//! Thin command-line entry point; all logic lives in [`qhecke::cli`].

use clap::Parser;
use qhecke::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let outcome = run(&cli.command);
    print!("{}", outcome.report);
    std::process::exit(outcome.exit_code);
}
