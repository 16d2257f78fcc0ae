mod args;
mod commands;
mod error;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::Ctx;
use error::CliError;

fn dispatch(cli: &Cli, out: &mut dyn Write) -> commands::Outcome {
    if !(cli.tol.is_finite() && cli.tol >= 0.0) {
        return Err(CliError::Usage(format!("--tol must be finite and non-negative, got {}", cli.tol)));
    }
    let ctx = Ctx { format: cli.format, seed: cli.seed, tol: cli.tol };
    match &cli.command {
        Command::Gamma => commands::gamma(ctx, out),
        Command::Verify(a) => commands::verify(ctx, a, out),
        Command::Solve(a) => commands::solve_cmd(ctx, a, out),
        Command::PlanewaveCheck(a) => commands::planewave(ctx, a, out),
        Command::SampleField(a) => commands::sample(ctx, a, out),
        Command::Lorentz(a) => commands::lorentz(ctx, a, out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match dispatch(&cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
