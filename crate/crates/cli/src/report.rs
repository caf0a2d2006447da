//! Report types shared by all subcommands.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Measured and recorded, never gating.
    Reported,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// What the check establishes; `"plumbing"` for harness sanity checks.
    pub anchor: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<f64>,
    pub tolerance: Option<f64>,
    pub measured: f64,
    pub status: Status,
}

impl Check {
    /// Passes when `measured ≤ tolerance`.
    pub fn bound(name: &str, anchor: &str, tolerance: f64, measured: f64) -> Self {
        let ok = measured <= tolerance;
        Self {
            name: name.into(),
            anchor: anchor.into(),
            target: None,
            tolerance: Some(tolerance),
            measured,
            status: if ok { Status::Pass } else { Status::Fail },
        }
    }

    /// Passes when `|measured − target| ≤ tolerance`.
    pub fn near(name: &str, anchor: &str, target: f64, tolerance: f64, measured: f64) -> Self {
        let ok = (measured - target).abs() <= tolerance;
        Self {
            name: name.into(),
            anchor: anchor.into(),
            target: Some(target),
            tolerance: Some(tolerance),
            measured,
            status: if ok { Status::Pass } else { Status::Fail },
        }
    }

    pub fn reported(name: &str, anchor: &str, measured: f64) -> Self {
        Self { name: name.into(), anchor: anchor.into(), target: None, tolerance: None, measured, status: Status::Reported }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    /// Re-evaluate against a new tolerance.
    pub fn with_tolerance(mut self, tol: f64) -> Self {
        if self.status == Status::Reported {
            return self;
        }
        self.tolerance = Some(tol);
        let ok = match self.target {
            Some(t) => (self.measured - t).abs() <= tol,
            None => self.measured <= tol,
        };
        self.status = if ok { Status::Pass } else { Status::Fail };
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub environment: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(suite: &str, environment: BTreeMap<String, Value>, checks: Vec<Check>) -> Self {
        let passed = !checks.iter().any(Check::failed);
        Self { suite: suite.into(), passed, environment, checks }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub tool: String,
    pub version: String,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

impl VerificationReport {
    pub fn new(seed: u64, generated_at: Option<u64>, suites: Vec<SuiteReport>) -> Self {
        Self {
            tool: "twospinor".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            seed,
            generated_at,
            passed: suites.iter().all(|s| s.passed),
            suites,
        }
    }
}

/// `[re, im]` pairs, the JSON form of complex numbers in every report.
pub fn complex(z: twospinor::Cx<f64>) -> [f64; 2] {
    [z.re, z.im]
}

pub fn complex_matrix(m: &nalgebra::DMatrix<twospinor::Cx<f64>>) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows()).map(|r| (0..m.ncols()).map(|c| complex(m[(r, c)])).collect()).collect()
}

pub fn env(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}
