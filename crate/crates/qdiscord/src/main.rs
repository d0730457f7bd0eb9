use std::process::ExitCode;

use clap::Parser;
use qdiscord::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // help and version exit 0, usage errors exit 2
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qdiscord: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
