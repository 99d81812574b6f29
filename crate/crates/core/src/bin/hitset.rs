use std::io::{ErrorKind, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hitting_sets::claims::Suite;
use hitting_sets::commands::{self, Format, HitParams, EXIT_OK, EXIT_THEOREM};
use hitting_sets::generators::{GenSpec, Kind};
use hitting_sets::rational::{self, Rational};
use hitting_sets::{Error, Limits, Method};

#[derive(Parser)]
#[command(name = "hitset", version, about = "Hitting sets for maximum independent sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Dimacs,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance and print its fingerprint.
    Gen {
        #[arg(long, value_parser = parse::<Kind>)]
        kind: Kind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_parser = parse_rational)]
        density: Option<Rational>,
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long)]
        base: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        side: Option<u64>,
        #[arg(long)]
        unit: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
        #[arg(long, short)]
        out: PathBuf,
    },
    /// Exact statistics of a graph or geometric instance.
    Solve {
        input: PathBuf,
        #[arg(long)]
        interval_model: bool,
    },
    /// Run one construction and check it against every maximum independent set.
    Hit {
        input: PathBuf,
        #[arg(long, value_parser = parse::<Method>)]
        method: Method,
        #[arg(long, default_value_t = 1)]
        s: usize,
        #[arg(long, value_parser = parse_rational)]
        a: Option<Rational>,
        #[arg(long, value_parser = parse_rational, default_value = "98/100")]
        b_ratio: Rational,
        #[arg(long, value_parser = parse_rational)]
        beta: Option<Rational>,
        /// Colour-class width of the circle layers.
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long)]
        interval_model: bool,
    },
    /// Run a seeded property suite and write one CSV row per seed.
    CheckClaims {
        #[arg(value_parser = parse::<Suite>)]
        suite: Suite,
        #[arg(long, default_value_t = 100)]
        seeds: u64,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Run a JSON list of generator specs and methods, writing a CSV table.
    Bench {
        specs: PathBuf,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<T, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse(s).map_err(|e| e.to_string())
}

/// Writes to stdout, treating a closed pipe as success.
fn stdout(text: &str) -> Result<(), Error> {
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => Ok(std::fs::write(path, text)?),
        None => stdout(text),
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    let limits = Limits::default();
    match cli.command {
        Command::Gen { kind, n, seed, density, sizes, base, k, side, unit, format, out } => {
            let spec = GenSpec { kind, n, seed, density, sizes, base, k, side, unit };
            let format = match format {
                OutFormat::Json => Format::Json,
                OutFormat::Dimacs => Format::Dimacs,
            };
            stdout(&format!("{}\n", commands::gen(&spec, format, &out)?))?;
            Ok(EXIT_OK)
        }
        Command::Solve { input, interval_model } => {
            let inst = commands::read_instance(&input)?;
            let report = commands::solve(&inst, interval_model, &limits);
            stdout(&(serde_json::to_string_pretty(&report)? + "\n"))?;
            Ok(EXIT_OK)
        }
        Command::Hit { input, method, s, a, b_ratio, beta, m, interval_model } => {
            let inst = commands::read_instance(&input)?;
            let params = HitParams { s, a, b_ratio, beta, m, interval_model };
            let outcome = commands::hit(&inst, method, &params, &limits)?;
            stdout(&(serde_json::to_string_pretty(&outcome.to_json())? + "\n"))?;
            Ok(if outcome.report.verified { EXIT_OK } else { EXIT_THEOREM })
        }
        Command::CheckClaims { suite, seeds, out } => {
            let (csv, failures) = commands::check_claims_csv(suite, seeds)?;
            emit(&csv, out.as_ref())?;
            if failures > 0 {
                eprintln!("{failures} of {seeds} seeds failed");
                return Ok(EXIT_THEOREM);
            }
            Ok(EXIT_OK)
        }
        Command::Bench { specs, out } => {
            let entries = commands::read_bench_entries(&specs)?;
            let rows = commands::bench(&entries, &limits);
            emit(&commands::bench_csv(&rows)?, out.as_ref())?;
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e) as u8)
        }
    }
}
