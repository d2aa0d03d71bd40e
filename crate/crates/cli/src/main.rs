//! `gcdn`: compute, verify and benchmark n-way GCDs.

mod commands;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gcdn_bench::{BenchConfig, Distribution};
use gcdn_core::{Algorithm, Natural};

use commands::{Failure, Format};
use input::{InputSpec, Source};

#[derive(Parser)]
#[command(name = "gcdn", version, about = "GCD of n non-negative integers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the GCD of the input numbers.
    Compute {
        #[arg(long, default_value = "gcd-n", value_parser = parse_alg)]
        alg: Algorithm,
        /// Print one JSON record per reduction step before the result.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Run every algorithm and both reference oracles and compare.
    Verify {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Run a seeded benchmark campaign and report operation counts.
    Bench(BenchArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Read numbers from FILE instead of the command line or stdin.
    #[arg(long, value_name = "FILE", conflicts_with = "numbers")]
    input: Option<PathBuf>,
    /// Treat unprefixed tokens as hexadecimal.
    #[arg(long)]
    hex: bool,
    /// Numbers (decimal, or hex with a 0x prefix). Read from stdin if absent.
    numbers: Vec<String>,
}

impl InputArgs {
    fn spec(self) -> InputSpec {
        let source = match (self.input, self.numbers.is_empty()) {
            (Some(path), _) => Source::File(path),
            (None, false) => Source::Args(self.numbers),
            (None, true) => Source::Stdin,
        };
        InputSpec {
            source,
            hex: self.hex,
        }
    }
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// List length.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    /// Bit size of generated values.
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    bits: u64,
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    /// uniform-random, common-factor, one-small-many-large, all-equal or adversarial-chain.
    #[arg(long, default_value = "uniform-random")]
    dist: String,
    /// Planted factor for the common-factor distribution.
    #[arg(long, default_value = "21", value_parser = parse_natural)]
    factor: Natural,
    /// Comma-separated algorithms to run.
    #[arg(long, value_delimiter = ',', value_parser = parse_alg,
          default_value = "gcd-n,binary-gcd-n,fold-euclid,fold-binary")]
    algs: Vec<Algorithm>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Spread trials over all cores.
    #[arg(long)]
    parallel: bool,
}

fn parse_alg(s: &str) -> Result<Algorithm, String> {
    s.parse()
        .map_err(|e: gcdn_core::UnknownAlgorithm| e.to_string())
}

fn parse_natural(s: &str) -> Result<Natural, String> {
    s.parse()
        .map_err(|e: gcdn_core::ParseNaturalError| e.to_string())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Compute { alg, trace, input } => {
            commands::compute(&mut out, alg, &input.spec(), trace)
        }
        Command::Verify { input } => commands::verify(&mut out, &input.spec()),
        Command::Bench(b) => {
            let distribution = Distribution::parse(&b.dist, b.factor).map_err(|e| Failure {
                code: commands::EXIT_USAGE,
                message: e.to_string(),
            })?;
            let cfg = BenchConfig {
                seed: b.seed,
                n: b.n as usize,
                bits: b.bits,
                distribution,
                trials: b.trials as usize,
                algorithms: b.algs,
                parallel: b.parallel,
            };
            commands::bench(&mut out, &cfg, b.format)
        }
    }?;
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::from(commands::EXIT_OK),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
