//! Seeded orchestration of the verification suites and the JSON report.

mod config;
mod report;
mod suites;

pub use config::{Suite, SuiteConfig};
pub use report::{Check, Entry, Status, Summary, VerificationReport};

use std::path::Path;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::exactfield::{BaseField, FieldKind};
use crate::tau_geometry::{Sampler, TauInstance};
use suites::{Job, SuiteResult};

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("instance parse error at line {line}, column {column}, field `{field}`: {message}")]
    InstanceParse { line: usize, column: usize, field: String, message: String },
    #[error("io error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

/// The fixed mixing function for per-instance seeds.
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn instance_seed(seed: u64, index: usize) -> u64 {
    splitmix64(seed ^ index as u64)
}

fn io_err(path: &Path, source: std::io::Error) -> HarnessError {
    HarnessError::Io { path: path.display().to_string(), source }
}

pub fn parse_instance(text: &str) -> Result<TauInstance, HarnessError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let field = e.path().to_string();
        let inner = e.into_inner();
        HarnessError::InstanceParse { line: inner.line(), column: inner.column(), field, message: inner.to_string() }
    })
}

pub fn load_instance(path: impl AsRef<Path>) -> Result<TauInstance, HarnessError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    parse_instance(&text)
}

pub fn save_instance(inst: &TauInstance, path: impl AsRef<Path>) -> Result<(), HarnessError> {
    let path = path.as_ref();
    let text = serde_json::to_string_pretty(inst).expect("instance is serializable");
    std::fs::write(path, text + "\n").map_err(|e| io_err(path, e))
}

pub fn emit_report(report: &VerificationReport, path: impl AsRef<Path>) -> Result<(), HarnessError> {
    let path = path.as_ref();
    std::fs::write(path, report.to_json() + "\n").map_err(|e| io_err(path, e))
}

/// Runs every selected suite. Instances are sampled from `instance_seed(seed, i)`
/// (or loaded once from `instance_path`); entries come back in suite, then
/// instance order regardless of scheduling.
pub fn run_suite(config: &SuiteConfig) -> Result<VerificationReport, HarnessError> {
    config.validate()?;
    let loaded = config.instance_path.as_ref().map(load_instance).transpose()?;
    let count = if loaded.is_some() { 1 } else { config.samples };

    let needs_instances = config.suites.iter().any(|s| !s.is_structural() && *s != Suite::Lines);
    let instances: Vec<Result<TauInstance, String>> = match &loaded {
        Some(i) => vec![Ok(i.clone())],
        None if needs_instances => (0..count)
            .into_par_iter()
            .map(|i| {
                Sampler::new(config.bound)
                    .over(config.field)
                    .primes(&config.primes)
                    .sample(instance_seed(config.seed, i))
                    .map_err(|e| e.to_string())
            })
            .collect(),
        None => Vec::new(),
    };

    let jobs: Vec<(Suite, usize)> = config
        .suites
        .iter()
        .flat_map(|&s| (0..if s.is_structural() { 1 } else { count }).map(move |i| (s, i)))
        .collect();

    let entries: Vec<Entry> = jobs
        .par_iter()
        .map(|&(suite, index)| run_entry(config, suite, index, instances.get(index), loaded.is_some()))
        .collect();
    let summary = Summary::of(&entries);
    Ok(VerificationReport { config: config.clone(), entries, summary })
}

fn run_entry(
    config: &SuiteConfig,
    suite: Suite,
    index: usize,
    instance: Option<&Result<TauInstance, String>>,
    loaded: bool,
) -> Entry {
    let start = Instant::now();
    let seed = instance_seed(config.seed, index);
    let mut rng = ChaCha8Rng::seed_from_u64(splitmix64(seed ^ (suite as u64 + 1) << 56));
    let mut checks = Vec::new();
    let inst = match instance {
        Some(Ok(i)) => Some(i),
        Some(Err(e)) if !suite.is_structural() && suite != Suite::Lines => {
            return Entry { suite, instance_id: index, checks, elapsed_ms: 0, error: Some(e.clone()) };
        }
        _ => None,
    };
    let prime = match inst.map(TauInstance::field) {
        Some(Ok(FieldKind::Prime(p))) => p,
        _ => match config.field {
            BaseField::Prime(p) => p,
            BaseField::Rationals => config.primes[0],
        },
    };
    let job = Job { prime, bound: config.bound, primes: &config.primes, seed, loaded };
    let need = |i: Option<&TauInstance>| i.ok_or("no instance available").cloned();
    let result: SuiteResult = (|| {
        match suite {
            Suite::Series => suites::series(&need(inst)?, &mut checks),
            Suite::BaseLocus => suites::base_locus(&need(inst)?, &job, &mut rng, &mut checks),
            Suite::TwoPoints => suites::two_points(&need(inst)?, &job, &mut rng, &mut checks),
            Suite::Discriminant => suites::discriminant(&need(inst)?, &job, &mut rng, &mut checks),
            Suite::FiberAction => suites::fiber_action(&need(inst)?, &job, &mut rng, &mut checks),
            Suite::Lines => suites::lines(inst, &job, &mut rng, &mut checks),
            Suite::Cone => suites::cone(&need(inst)?, &job, &mut rng, &mut checks),
            Suite::Genus => suites::genus(&mut checks),
            Suite::Koszul => suites::koszul(&job, &mut rng, &mut checks),
            Suite::Split => suites::split(&mut checks),
            Suite::FixedPoints => suites::fixed_points(&need(inst)?, &mut checks),
            Suite::Quotient => suites::quotient(&need(inst)?, &job, &mut rng, &mut checks),
        }
    })();
    Entry {
        suite,
        instance_id: index,
        checks,
        elapsed_ms: start.elapsed().as_millis() as u64,
        error: result.err().map(|e| e.to_string()),
    }
}
