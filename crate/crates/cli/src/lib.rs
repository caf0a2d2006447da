//! Verification harness and report writers behind the `twospinor` binary.

pub mod decompose_cmd;
pub mod report;
pub mod suites;
pub mod vertex_cmd;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use serde::Serialize;
use twospinor::fock::{run_scenario, Scenario, ScatterReport};

use report::{Check, SuiteReport, VerificationReport};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

/// `NAME=VALUE` tolerance overrides.
pub fn parse_overrides(args: &[String]) -> Result<BTreeMap<String, f64>, CliError> {
    let mut out = BTreeMap::new();
    for a in args {
        let (name, value) =
            a.split_once('=').ok_or_else(|| CliError::Usage(format!("--tol expects NAME=VALUE, got {a:?}")))?;
        let v: f64 = value.parse().map_err(|_| CliError::Usage(format!("bad tolerance {value:?} for {name}")))?;
        if !(v >= 0.0) {
            return Err(CliError::Usage(format!("tolerance for {name} must be non-negative")));
        }
        out.insert(name.to_string(), v);
    }
    Ok(out)
}

/// Apply overrides to a list of checks; every override must name a check.
pub fn apply_overrides<'a>(
    checks: impl IntoIterator<Item = &'a mut Check>,
    overrides: &BTreeMap<String, f64>,
) -> Result<(), CliError> {
    let mut used = std::collections::BTreeSet::new();
    for c in checks {
        if let Some(&tol) = overrides.get(&c.name) {
            *c = c.clone().with_tolerance(tol);
            used.insert(c.name.clone());
        }
    }
    if let Some(unknown) = overrides.keys().find(|k| !used.contains(*k)) {
        return Err(CliError::Usage(format!("--tol names unknown check {unknown:?}")));
    }
    Ok(())
}

pub fn verify(
    selector: &str,
    seed: u64,
    overrides: &BTreeMap<String, f64>,
    generated_at: Option<u64>,
) -> Result<VerificationReport, CliError> {
    let names = suites::select(selector).ok_or_else(|| {
        CliError::Usage(format!("unknown suite {selector:?}; expected one of {} or all", suites::SUITES.join("|")))
    })?;
    let mut reports: Vec<SuiteReport> =
        names.iter().map(|n| suites::run_suite(n, seed).expect("suite names come from SUITES")).collect();
    apply_overrides(reports.iter_mut().flat_map(|r| r.checks.iter_mut()), overrides)?;
    for r in &mut reports {
        r.passed = !r.checks.iter().any(Check::failed);
    }
    Ok(VerificationReport::new(seed, generated_at, reports))
}

#[derive(Clone, Debug, Serialize)]
pub struct ScatterOutput {
    #[serde(flatten)]
    pub report: ScatterReport,
    pub checks: Vec<Check>,
    pub passed: bool,
}

pub fn scatter(scenario: &Scenario, overrides: &BTreeMap<String, f64>) -> Result<ScatterOutput, CliError> {
    let report = run_scenario(scenario).map_err(|e| CliError::Input(e.to_string()))?;
    let mut checks = vec![
        Check::bound("fock.dropped_mass", "truncation loss above N_max", 1e-6, report.truncation.dropped_mass),
        Check::bound("fock.hermiticity", "<out|h|in> = conj <in|h|out>", 1e-12, report.hermiticity_residual),
    ];
    apply_overrides(checks.iter_mut(), overrides)?;
    let passed = !checks.iter().any(Check::failed);
    Ok(ScatterOutput { report, checks, passed })
}

/// The T-sweep as CSV.
pub fn sweep_csv(report: &ScatterReport) -> String {
    let mut s = String::from(
        "window,first_order_re,first_order_im,second_order_re,second_order_im,amplitude_re,amplitude_im,dropped_mass\n",
    );
    for a in &report.sweep {
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            a.window,
            a.first_order.re,
            a.first_order.im,
            a.second_order.re,
            a.second_order.im,
            a.amplitude.re,
            a.amplitude.im,
            a.dropped_mass
        ));
    }
    s
}

/// Envelope for the single-shot commands.
#[derive(Clone, Debug, Serialize)]
pub struct CommandReport<R: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
    #[serde(flatten)]
    pub body: R,
}

impl<R: Serialize> CommandReport<R> {
    pub fn new(command: &'static str, seed: Option<u64>, generated_at: Option<u64>, body: R) -> Self {
        Self { tool: "twospinor", version: env!("CARGO_PKG_VERSION"), command, seed, generated_at, body }
    }
}

pub fn read_input(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn parse_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    serde_json::from_str(&read_input(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Pretty JSON with a trailing newline, to `out` or stdout.
pub fn emit<R: Serialize>(value: &R, out: Option<&Path>) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| CliError::Input(e.to_string()))?;
    text.push('\n');
    match out {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir)?;
            }
            std::fs::write(p, text)?;
        }
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}
