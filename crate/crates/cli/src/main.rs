use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use equires::session::{
    apply_env_override, diagnostic, exit_code, parse_input, run, Command, RunFlags, EXIT_VERIFICATION_FAILED,
    MAX_GENERATORS_ENV,
};
use equires::Error;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Cmd {
    /// Complete the generators to a Gröbner basis and print the log.
    Gb,
    /// Compute the first `--steps` steps of a free resolution.
    Resolve,
    /// Specialize the resolution at `--width`.
    Specialize,
    /// Minimize the width-`n` complex (`--equivariant` keeps a Sym(n)-action).
    Minimize,
    /// Report homology of the width-`n` complex up to `--max-degree`.
    Verify,
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Gb => Command::Gb,
            Cmd::Resolve => Command::Resolve,
            Cmd::Specialize => Command::Specialize,
            Cmd::Minimize => Command::Minimize,
            Cmd::Verify => Command::Verify,
        }
    }
}

/// Gröbner bases and free resolutions of OI-, FI-, Inc- and Sym-modules.
#[derive(Debug, Parser)]
#[command(name = "equires", version)]
struct Args {
    command: Cmd,
    /// Input document (JSON, schema version 1).
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    steps: Option<usize>,
    #[arg(long)]
    width: Option<usize>,
    #[arg(long = "max-degree")]
    max_degree: Option<i64>,
    #[arg(long)]
    prune: bool,
    #[arg(long)]
    equivariant: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn execute(args: &Args) -> Result<bool, Error> {
    let (mut doc, gens) = parse_input(&args.input)?;
    let env = std::env::var(MAX_GENERATORS_ENV).ok();
    apply_env_override(&mut doc.config, env.as_deref())?;
    let flags = RunFlags {
        steps: args.steps,
        width: args.width,
        max_degree: args.max_degree,
        prune: args.prune,
        equivariant: args.equivariant,
    };
    let outcome = run(args.command.into(), &doc, &gens, &flags)?;
    let text = outcome.to_json();
    match &args.output {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(outcome.verified)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(&args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("{}", serde_json::json!({"error": "verification", "message": "nonzero homology", "exit_code": EXIT_VERIFICATION_FAILED}));
            ExitCode::from(EXIT_VERIFICATION_FAILED as u8)
        }
        Err(e) => {
            eprintln!("{}", diagnostic(&e));
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
