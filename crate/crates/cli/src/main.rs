use std::process::ExitCode;

use clap::Parser;
use kleene_cli::{exit_code, run, Args};

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            // usage errors are input errors; --help and --version succeed
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("kleene: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
