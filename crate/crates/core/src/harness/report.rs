use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::config::{Suite, SuiteConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Passed,
    Failed,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub computed: Value,
    pub status: Status,
    /// Where the expected value comes from.
    pub provenance: String,
}

impl Check {
    /// Passes iff `computed == expected`.
    pub fn eq<T: Serialize + PartialEq>(name: &str, expected: T, computed: T, provenance: &str) -> Self {
        let status = if expected == computed { Status::Passed } else { Status::Failed };
        Check::with_status(name, to_value(&expected), to_value(&computed), status, provenance)
    }

    /// A boolean property that should hold.
    pub fn holds(name: &str, computed: bool, provenance: &str) -> Self {
        Check::eq(name, true, computed, provenance)
    }

    pub fn with_status(name: &str, expected: Value, computed: Value, status: Status, provenance: &str) -> Self {
        Check { name: name.to_string(), expected, computed, status, provenance: provenance.to_string() }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).unwrap_or_else(|e| Value::String(format!("unserializable: {e}")))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub suite: Suite,
    pub instance_id: usize,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
    /// A module error that stopped this entry early; counts as one failure.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Entry {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.status != Status::Failed)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub inconclusive: usize,
}

impl Summary {
    pub fn of(entries: &[Entry]) -> Self {
        let mut s = Summary::default();
        for e in entries {
            if e.error.is_some() {
                s.failed += 1;
            }
            for c in &e.checks {
                match c.status {
                    Status::Passed => s.passed += 1,
                    Status::Failed => s.failed += 1,
                    Status::Inconclusive => s.inconclusive += 1,
                }
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub config: SuiteConfig,
    pub entries: Vec<Entry>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn entries_for(&self, suite: Suite) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(move |e| e.suite == suite)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }

    /// JSON with timings zeroed, for byte-level comparison of runs.
    pub fn canonical_json(&self) -> String {
        let mut r = self.clone();
        for e in &mut r.entries {
            e.elapsed_ms = 0;
        }
        r.to_json()
    }
}
