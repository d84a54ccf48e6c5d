use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = sphgeo::Cli::parse();
    match sphgeo::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sphgeo: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
