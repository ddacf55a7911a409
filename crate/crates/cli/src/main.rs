use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use eulerdata_cli::{render, run, Command, Format, RunConfig, SPAIR_LIMIT_ENV};

/// Global Euler obstructions, polar multiplicities and Euler
/// characteristics of affine varieties, computed exactly.
#[derive(Parser, Debug)]
#[command(name = "eulerdata", version)]
struct Args {
    command: Command,
    /// Variety file; `duality` also accepts a variety file followed by a fixture file.
    #[arg(required = true, num_args = 1..=2)]
    paths: Vec<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    trials: usize,
    #[arg(long, default_value_t = 997)]
    coeff_bound: u32,
    #[arg(long, default_value_t = 64)]
    milnor_cap: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, env = SPAIR_LIMIT_ENV, default_value_t = 200_000)]
    spair_limit: usize,
    /// Single point for `milnor`, as "r1,r2,...".
    #[arg(long)]
    point: Option<String>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let config = RunConfig {
        seed: args.seed,
        trials: args.trials,
        coeff_bound: args.coeff_bound,
        milnor_cap: args.milnor_cap,
        format: args.format,
        spair_limit: args.spair_limit,
    };
    let report = run(args.command, &args.paths, &config, args.point.as_deref());
    print!("{}", render(&report, config.format));
    ExitCode::from(report.exit_code() as u8)
}
