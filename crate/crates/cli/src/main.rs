use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use nikulin_core::exactfield::BaseField;
use nikulin_core::harness::{emit_report, run_suite, HarnessError, Suite, SuiteConfig};

/// Runs seeded verification suites and writes a JSON report.
#[derive(Parser, Debug)]
#[command(name = "verify", version)]
struct Args {
    /// Comma-separated suites, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 10)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Primes for smoothness certificates and F_p probes.
    #[arg(long, value_delimiter = ',', default_values_t = [10007u64, 10009])]
    primes: Vec<u64>,
    /// Run on this instance instead of sampling.
    #[arg(long)]
    instance: Option<PathBuf>,
    /// Write the report here; without it the report goes to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Coefficient bound for sampled instances.
    #[arg(long, default_value_t = 10)]
    bound: i64,
    /// Base field of sampled instances: `q` for the rationals or a prime.
    #[arg(long, default_value = "q", value_parser = parse_field)]
    field: BaseField,
}

fn parse_field(s: &str) -> Result<BaseField, String> {
    match s {
        "q" | "Q" => Ok(BaseField::Rationals),
        _ => s
            .parse::<u64>()
            .map(BaseField::Prime)
            .map_err(|_| format!("expected `q` or a prime, got `{s}`")),
    }
}

fn run(args: Args) -> Result<bool, HarnessError> {
    let config = SuiteConfig {
        suites: Suite::parse_list(&args.suite)?,
        samples: args.samples,
        seed: args.seed,
        primes: args.primes,
        instance_path: args.instance,
        out_path: args.out.clone(),
        bound: args.bound,
        field: args.field,
    };
    let report = run_suite(&config)?;
    match &args.out {
        Some(path) => emit_report(&report, path)?,
        None => println!("{}", report.to_json()),
    }
    let s = &report.summary;
    eprintln!("passed {}, failed {}, inconclusive {}", s.passed, s.failed, s.inconclusive);
    Ok(report.all_passed())
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
