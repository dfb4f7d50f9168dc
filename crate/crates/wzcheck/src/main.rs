use std::process::ExitCode;

use clap::Parser;
use wzcheck::cli::{run, Cli};
use wzcheck::EXIT_USAGE;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            return ExitCode::from(code as u8);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("wzcheck: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
