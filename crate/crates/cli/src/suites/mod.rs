//! Verification suites, one per library area.

pub mod core;
pub mod dirac;
pub mod fock;
pub mod gauge;
pub mod higgs;
pub mod photon;
pub mod vertex;

use crate::report::SuiteReport;

pub const SUITES: [&str; 7] = ["core", "dirac", "photon", "vertex", "gauge", "higgs", "fock"];

/// Run one suite. Each suite draws from its own stream derived from `seed`.
pub fn run_suite(name: &str, seed: u64) -> Option<SuiteReport> {
    let offset = SUITES.iter().position(|&s| s == name)? as u64;
    let seed = seed.wrapping_mul(1000).wrapping_add(offset);
    Some(match name {
        "core" => core::run(seed),
        "dirac" => dirac::run(seed),
        "photon" => photon::run(seed),
        "vertex" => vertex::run(seed),
        "gauge" => gauge::run(seed),
        "higgs" => higgs::run(seed),
        _ => fock::run(seed),
    })
}

/// Suite names selected by a `--suite` argument.
pub fn select(selector: &str) -> Option<Vec<&'static str>> {
    if selector == "all" {
        return Some(SUITES.to_vec());
    }
    SUITES.iter().find(|&&s| s == selector).map(|&s| vec![s])
}
