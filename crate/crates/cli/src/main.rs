use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use spos_cli::args::Cli;
use spos_cli::{run, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = stdout
                .write_all(out.stdout.as_bytes())
                .and_then(|_| stdout.flush());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
