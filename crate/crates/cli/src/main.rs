use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use dyckcells_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let body = if cli.json { report.to_json() + "\n" } else { report.to_text() };
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
    match report.first_failure() {
        None => ExitCode::SUCCESS,
        Some(c) => {
            eprintln!("verification failed: {}: {}", c.name, c.witness);
            ExitCode::from(1)
        }
    }
}
