use std::process::ExitCode;

use clap::Parser;
use intrinsic_curves::cli::{run, Cli};
use intrinsic_curves::render::pretty;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(out) => {
            if cli.pretty {
                print!("{}", pretty(&out.output));
            } else {
                println!("{}", out.output);
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
