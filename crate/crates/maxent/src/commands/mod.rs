mod benford;
mod dist;
mod enumerate;
mod fit;
mod gen;
mod sample;
mod zipf;

use crate::cli::{Cli, Command};
use crate::error::{CliError, ExitStatus};
use crate::output::Emitter;

pub(crate) fn dispatch(cli: &Cli) -> Result<ExitStatus, CliError> {
    match &cli.command {
        Command::Dist { kind } => dist::run(cli, kind),
        Command::Enumerate(args) => enumerate::run(cli, args),
        Command::Sample(args) => sample::run(cli, args),
        Command::Benford(args) => benford::run(cli, args),
        Command::Zipf(args) => zipf::run(cli, args),
        Command::Fit(args) => fit::run(cli, args),
        Command::Gen { kind } => gen::run(cli, kind),
    }
}

fn emitter(cli: &Cli) -> Result<Emitter, CliError> {
    Emitter::open(cli.format, cli.output.as_deref()).map_err(|e| {
        CliError::usage(format!(
            "cannot open output {}: {e}",
            cli.output
                .as_deref()
                .map_or("<stdout>".into(), |p| p.display().to_string())
        ))
    })
}

fn require_seed(cli: &Cli, command: &str) -> Result<u64, CliError> {
    cli.seed
        .ok_or_else(|| CliError::usage(format!("{command} needs --seed")))
}
