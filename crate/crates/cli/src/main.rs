use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use slope_calc_cli::{run, JobSpec};

fn main() -> ExitCode {
    let job = JobSpec::parse();
    let outcome = run(&job);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
