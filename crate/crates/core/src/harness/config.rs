use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::HarnessError;
use crate::exactfield::{check_admitted_prime, BaseField};
use crate::tau_geometry::DEFAULT_PRIMES;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Series,
    BaseLocus,
    TwoPoints,
    Discriminant,
    FiberAction,
    Lines,
    Cone,
    Genus,
    Koszul,
    Split,
    FixedPoints,
    Quotient,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Series,
        Suite::BaseLocus,
        Suite::TwoPoints,
        Suite::Discriminant,
        Suite::FiberAction,
        Suite::Lines,
        Suite::Cone,
        Suite::Genus,
        Suite::Koszul,
        Suite::Split,
        Suite::FixedPoints,
        Suite::Quotient,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Series => "series",
            Suite::BaseLocus => "base-locus",
            Suite::TwoPoints => "two-points",
            Suite::Discriminant => "discriminant",
            Suite::FiberAction => "fiber-action",
            Suite::Lines => "lines",
            Suite::Cone => "cone",
            Suite::Genus => "genus",
            Suite::Koszul => "koszul",
            Suite::Split => "split",
            Suite::FixedPoints => "fixed-points",
            Suite::Quotient => "quotient",
        }
    }

    /// Suites whose checks do not depend on an instance run once.
    pub fn is_structural(self) -> bool {
        matches!(self, Suite::Genus | Suite::Koszul | Suite::Split)
    }

    /// Parses a comma-separated list; `all` expands to every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>, HarnessError> {
        let mut out = Vec::new();
        for name in s.split(',').map(str::trim).filter(|n| !n.is_empty()) {
            if name == "all" {
                out.extend(Suite::ALL);
            } else {
                out.push(name.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| HarnessError::Config(format!("unknown suite \"{s}\"")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub suites: Vec<Suite>,
    pub samples: usize,
    pub seed: u64,
    /// Primes for the smoothness certificates and the F_p probes of instances over Q.
    pub primes: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance_path: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out_path: Option<PathBuf>,
    /// Coefficient bound for sampled instances.
    pub bound: i64,
    pub field: BaseField,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suites: Suite::ALL.to_vec(),
            samples: 10,
            seed: 0,
            primes: DEFAULT_PRIMES.to_vec(),
            instance_path: None,
            out_path: None,
            bound: 10,
            field: BaseField::Rationals,
        }
    }
}

impl SuiteConfig {
    pub fn new(suites: &[Suite], samples: usize, seed: u64) -> Self {
        SuiteConfig { suites: suites.to_vec(), samples, seed, ..Default::default() }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.suites.is_empty() {
            return Err(HarnessError::Config("no suites selected".into()));
        }
        if self.samples == 0 {
            return Err(HarnessError::Config("samples must be at least 1".into()));
        }
        if self.primes.is_empty() {
            return Err(HarnessError::Config("at least one prime is required".into()));
        }
        for &p in &self.primes {
            check_admitted_prime(p).map_err(|e| HarnessError::Config(e.to_string()))?;
        }
        if let BaseField::Prime(p) = self.field {
            check_admitted_prime(p).map_err(|e| HarnessError::Config(e.to_string()))?;
        }
        if self.bound < 2 {
            return Err(HarnessError::Config("coefficient bound must be at least 2".into()));
        }
        Ok(())
    }
}
