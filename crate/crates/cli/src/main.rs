use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use stablemap_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.report.as_bytes());
            if cli.global.out.is_none() {
                let _ = stdout.write_all(out.document.as_bytes());
            }
            ExitCode::from(out.exit_code())
        }
        Err(e) => {
            eprintln!("stablemap: {e}");
            ExitCode::from(2)
        }
    }
}
