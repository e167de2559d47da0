use std::process::ExitCode;

use clap::Parser;

use revdioph::cli::{self, Cli};

fn main() -> ExitCode {
    let args = match Cli::try_parse() {
        Ok(args) => args,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(cli::EXIT_VALIDATION)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    ExitCode::from(cli::main_with(args))
}
