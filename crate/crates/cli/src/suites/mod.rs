//! Verification suites. Each suite checks one statement on a fixed desk-scale instance and
//! returns a record with a status and witness data.

mod common;
mod complements;
mod forms;
mod hyperplanes;
mod products;
mod registry;
mod statements;

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use segrelab_core::complement::ComplementError;
use segrelab_core::linalg::LinalgError;
use segrelab_core::pls::PlsError;
use segrelab_core::segre::SegreError;
use segrelab_core::spaces::SpaceError;

pub use registry::{find_suite, registry, Suite};
pub use statements::STATEMENTS;

/// Point cap used when neither the flag nor the environment sets one.
pub const DEFAULT_MAX_POINTS: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "SKIPPED")]
    Skipped,
    #[serde(rename = "SKIPPED-HYPOTHESIS")]
    SkippedHypothesis,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
            Status::SkippedHypothesis => "SKIPPED-HYPOTHESIS",
        }
    }
}

/// Run parameters shared by all suites.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ctx {
    pub seed: u64,
    /// Field order override for suites parameterised by a prime.
    pub p: Option<u32>,
    pub max_points: usize,
}

impl Default for Ctx {
    fn default() -> Self {
        Self { seed: 0, p: None, max_points: DEFAULT_MAX_POINTS }
    }
}

impl Ctx {
    pub fn prime(&self, default: u32) -> u32 {
        self.p.unwrap_or(default)
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    pub fn require_points(&self, what: &str, n: usize) -> Result<(), SuiteError> {
        if n > self.max_points {
            return Err(SuiteError::Cap(format!("{what} has {n} points, above the cap of {}", self.max_points)));
        }
        Ok(())
    }
}

/// Why a suite stopped before reaching a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SuiteError {
    /// The instance is outside the statement's hypotheses.
    Hypothesis(String),
    /// The instance exceeds a size cap.
    Cap(String),
    Internal(String),
}

impl From<ComplementError> for SuiteError {
    fn from(e: ComplementError) -> Self {
        match e {
            ComplementError::HypothesisFailed(m) => SuiteError::Hypothesis(m),
            ComplementError::Pls(p) => p.into(),
            ComplementError::Segre(s) => s.into(),
            other => SuiteError::Internal(other.to_string()),
        }
    }
}

impl From<PlsError> for SuiteError {
    fn from(e: PlsError) -> Self {
        match e {
            PlsError::CapExceeded { .. } => SuiteError::Cap(e.to_string()),
            other => SuiteError::Internal(other.to_string()),
        }
    }
}

impl From<SegreError> for SuiteError {
    fn from(e: SegreError) -> Self {
        match e {
            SegreError::LimitExceeded { .. } => SuiteError::Cap(e.to_string()),
            SegreError::Pls(p) => p.into(),
            other => SuiteError::Internal(other.to_string()),
        }
    }
}

impl From<SpaceError> for SuiteError {
    fn from(e: SpaceError) -> Self {
        SuiteError::Internal(e.to_string())
    }
}

impl From<LinalgError> for SuiteError {
    fn from(e: LinalgError) -> Self {
        SuiteError::Internal(e.to_string())
    }
}

/// Verdict of a suite body.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub status: Status,
    pub witness: Value,
    pub outside_hypothesis: bool,
}

/// Accumulates named checks. The first failure of each check is kept as its counterexample.
#[derive(Default)]
pub struct Checks {
    failures: Vec<Value>,
    notes: serde_json::Map<String, Value>,
    passed: usize,
}

impl Checks {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn expect(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> Value) {
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(json!({ "check": name, "counterexample": detail() }));
        }
    }

    pub fn expect_eq<T: PartialEq + Serialize>(&mut self, name: &str, actual: T, expected: T) {
        let ok = actual == expected;
        self.expect(name, ok, || json!({ "actual": actual, "expected": expected }));
    }

    pub fn note(&mut self, key: &str, value: impl Serialize) {
        self.notes.insert(key.to_string(), serde_json::to_value(value).expect("serialisable"));
    }

    pub fn failed(&self) -> bool {
        !self.failures.is_empty()
    }

    pub fn finish(self) -> Outcome {
        let status = if self.failures.is_empty() { Status::Pass } else { Status::Fail };
        let mut w = self.notes;
        w.insert("checks_passed".into(), json!(self.passed));
        if !self.failures.is_empty() {
            w.insert("failures".into(), Value::Array(self.failures));
        }
        Outcome { status, witness: Value::Object(w), outside_hypothesis: false }
    }

    /// Reports the computed result without asserting it: the instance lies outside the
    /// statement's hypotheses.
    pub fn finish_outside_hypothesis(self, reason: &str) -> Outcome {
        let observed = self.finish();
        let mut w = serde_json::Map::new();
        w.insert("reason".into(), json!(reason));
        w.insert("observed".into(), json!(observed.status.as_str()));
        w.insert("data".into(), observed.witness);
        Outcome { status: Status::SkippedHypothesis, witness: Value::Object(w), outside_hypothesis: true }
    }
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteRecord {
    pub suite: String,
    pub statement: String,
    pub instance: String,
    pub result: Status,
    pub outside_hypothesis: bool,
    pub witness: Value,
    pub wall_time_ms: u64,
}

pub fn run_suite(suite: &Suite, ctx: &Ctx) -> SuiteRecord {
    let start = Instant::now();
    let result = (suite.run)(ctx);
    let elapsed = start.elapsed().as_millis() as u64;
    let outcome = match result {
        Ok(o) => o,
        Err(SuiteError::Hypothesis(m)) => {
            Outcome { status: Status::SkippedHypothesis, witness: json!({ "reason": m }), outside_hypothesis: true }
        }
        Err(SuiteError::Cap(m)) => Outcome { status: Status::Skipped, witness: json!({ "reason": m }), outside_hypothesis: false },
        Err(SuiteError::Internal(m)) => Outcome { status: Status::Fail, witness: json!({ "error": m }), outside_hypothesis: false },
    };
    SuiteRecord {
        suite: suite.id.to_string(),
        statement: suite.statement.to_string(),
        instance: (suite.instance)(ctx),
        result: outcome.status,
        outside_hypothesis: outcome.outside_hypothesis,
        witness: outcome.witness,
        wall_time_ms: elapsed,
    }
}
