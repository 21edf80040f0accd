//! `covg`: command-line access to COMs, their loci and orbit-harmonics
//! Hilbert series.

mod args;
mod commands;
mod error;
mod input;
mod report;

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use args::{Cli, Command, Format};
use commands::Ctx;
use error::Result;
use report::{Outcome, RunConfig, RunReport};

fn dispatch(cli: &Cli) -> Result<(Outcome, Vec<report::InputRecord>)> {
    let ctx = Ctx { field: cli.field };
    match &cli.command {
        Command::Check { input } => commands::check(input),
        Command::Enumerate { input } => commands::enumerate(input),
        Command::Braid { n } => commands::braid(*n),
        Command::Fixture { name } => commands::fixture(name),
        Command::Circuits { input } => commands::circuits(input),
        Command::Nbc { input, order } => commands::nbc(input, order.as_deref()),
        Command::Flats { input } => commands::flats(input),
        Command::Basic { input, flat } => commands::basic(input, flat),
        Command::Hilbert {
            input,
            which,
            method,
            order,
        } => commands::hilbert(&ctx, input, *which, *method, order.as_deref()),
        Command::Verify { input, what, order } => commands::verify(&ctx, input, *what, order.as_deref()),
        Command::Loci { family, n, hilbert } => commands::loci(&ctx, *family, *n, *hilbert),
        Command::Character {
            input,
            group,
            which,
            verify_decomposition,
        } => commands::character(&ctx, input, group, *which, *verify_decomposition),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check { .. } => "check",
        Command::Enumerate { .. } => "enumerate",
        Command::Braid { .. } => "braid",
        Command::Fixture { .. } => "fixture",
        Command::Circuits { .. } => "circuits",
        Command::Nbc { .. } => "nbc",
        Command::Flats { .. } => "flats",
        Command::Basic { .. } => "basic",
        Command::Hilbert { .. } => "hilbert",
        Command::Verify { .. } => "verify",
        Command::Loci { .. } => "loci",
        Command::Character { .. } => "character",
    }
}

fn run(cli: &Cli) -> Result<bool> {
    let start = Instant::now();
    let (outcome, inputs) = dispatch(cli)?;
    let report = RunReport {
        command: command_name(&cli.command).to_string(),
        inputs,
        config: RunConfig {
            field: cli.field.to_string(),
        },
        results: outcome.results,
        assertions: outcome.assertions,
        elapsed_ms: cli.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let written = match cli.format {
        Format::Json => report::write_json(&report, outcome.stream.as_deref(), &mut out),
        Format::Table => report::write_tables(&report, &outcome.tables, &mut out),
    };
    // a closed pipe is not an error worth reporting
    if let Err(e) = written.and_then(|_| out.flush()) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("covg: {e}");
        }
    }
    Ok(report.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("covg: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("covg: {e}");
            ExitCode::from(2)
        }
    }
}
