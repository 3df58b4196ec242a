mod cli;
mod commands;
mod dsl;
mod error;
mod report;
mod workspace;

use std::io::Write;

use clap::Parser;

use cli::{Cli, Command, OracleOp};
use commands::Outcome;
use error::CliError;
use workspace::Workspace;

fn run(args: &Cli) -> Result<Outcome, CliError> {
    let docs: Vec<String> = args
        .files
        .iter()
        .map(std::fs::read_to_string)
        .collect::<Result<_, _>>()?;
    let ws = Workspace::from_documents(&docs)?;
    match &args.command {
        Command::Check { print } => commands::check(&ws, *print),
        Command::Construct { what } => commands::construct(&ws, what),
        Command::Descent { morphism, strict } => commands::descent(&ws, morphism, *strict),
        Command::Presheaf { op } => commands::presheaf(&ws, op),
        Command::Hunt {
            base,
            max_size,
            seed,
            budget,
            density,
            obstruct_bound,
        } => commands::hunt(
            &ws,
            base,
            *max_size,
            *seed,
            *budget,
            *density,
            *obstruct_bound,
        ),
        Command::Oracle { op } => match op {
            OracleOp::RegularEpi { morphism, category } => {
                commands::oracle_regular_epi(&ws, morphism, *category)
            }
            OracleOp::Stable { morphism, bound } => {
                commands::oracle_stable(&ws, morphism, *bound)
            }
            OracleOp::Verify { bound, what } => commands::oracle_verify(&ws, what, *bound),
        },
    }
}

fn main() {
    let args = Cli::parse();
    match run(&args) {
        Ok(outcome) => {
            // A downstream `head` may close stdout early; stop writing, don't panic.
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            for line in &outcome.lines {
                if writeln!(out, "{line}").is_err() {
                    break;
                }
            }
            drop(out);
            if let Some(path) = &args.json {
                if let Err(e) = outcome.report.write(path) {
                    eprintln!("error: {e}");
                    std::process::exit(2);
                }
            }
            std::process::exit(outcome.code);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
