//! JSON scenarios for the scattering engine and their reports.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::hamiltonian::QedModel;
use super::lattice::{MomentumLattice, Site};
use super::modes::SpeciesKind;
use super::scatter::{log_log_slope, ScatteringProblem, WindowAmplitude};
use super::state::FockConfig;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeSpec {
    pub spacing: f64,
    pub half_extent: f64,
}

/// One occupied mode; `momentum` is in lattice units.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModeSpec {
    pub species: SpeciesKind,
    pub momentum: Site,
    #[serde(default)]
    pub internal: usize,
}

fn one() -> f64 {
    1.0
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    pub fermion_mass: f64,
    #[serde(default)]
    pub vector_mass: f64,
    pub coupling: f64,
    #[serde(default = "one")]
    pub length_unit: f64,
    pub lattice: LatticeSpec,
    pub n_max: usize,
    /// Time windows `T` of the sweep; the amplitude is `⟨out|U(T/2, −T/2)|in⟩`.
    pub windows: Vec<f64>,
    pub in_state: Vec<ModeSpec>,
    pub out_state: Vec<ModeSpec>,
}

impl Scenario {
    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// The shipped Compton-like demo: `e⁻(0) γ(Δx̂) → e⁻(0) γ(Δx̂)` with the
    /// electron spin flipped, `Δ = 1`, `L = 2`, `N_max = 4`.
    pub fn demo() -> Self {
        Self {
            name: "compton-demo".into(),
            fermion_mass: 1.0,
            vector_mass: 0.0,
            coupling: 1e-4,
            length_unit: 1.0,
            lattice: LatticeSpec { spacing: 1.0, half_extent: 2.0 },
            n_max: 4,
            windows: vec![16.0, 32.0, 64.0, 128.0],
            in_state: vec![
                ModeSpec { species: SpeciesKind::Electron, momentum: [0, 0, 0], internal: 0 },
                ModeSpec { species: SpeciesKind::Vector, momentum: [1, 0, 0], internal: 0 },
            ],
            out_state: vec![
                ModeSpec { species: SpeciesKind::Electron, momentum: [0, 0, 0], internal: 1 },
                ModeSpec { species: SpeciesKind::Vector, momentum: [1, 0, 0], internal: 0 },
            ],
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidScenario(m.into()));
        if !(self.fermion_mass > 0.0) {
            return bad("fermion_mass must be positive");
        }
        if !(self.vector_mass >= 0.0) {
            return bad("vector_mass must be non-negative");
        }
        if !self.coupling.is_finite() || !(self.length_unit > 0.0) {
            return bad("coupling must be finite and length_unit positive");
        }
        if self.windows.is_empty() || self.windows.iter().any(|&t| !(t > 0.0)) {
            return bad("windows must be a non-empty list of positive times");
        }
        Ok(())
    }

    pub fn model(&self) -> Result<QedModel<f64>> {
        self.validate()?;
        let lattice = MomentumLattice::new(self.lattice.spacing, self.lattice.half_extent)?;
        QedModel::new(lattice, self.fermion_mass, self.vector_mass, self.coupling, self.length_unit, self.n_max)
    }
}

/// Occupation configuration of a list of modes.
pub fn config_of(model: &QedModel<f64>, modes: &[ModeSpec]) -> Result<FockConfig> {
    let mut idx = Vec::with_capacity(modes.len());
    for m in modes {
        let i = model.table.mode_at(m.species, m.momentum, m.internal).ok_or_else(|| {
            Error::InvalidScenario(format!(
                "{:?} mode at {:?} (internal {}) is not on the lattice",
                m.species, m.momentum, m.internal
            ))
        })?;
        idx.push(i);
    }
    FockConfig::from_modes(&idx, &model.table)
        .ok_or_else(|| Error::InvalidScenario("a fermionic mode is occupied twice".into()))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LatticeSummary {
    pub spacing: f64,
    pub half_extent: f64,
    pub nodes: usize,
    pub weight: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TruncationSummary {
    pub n_max: usize,
    pub intermediate_states: usize,
    pub dropped_states: usize,
    /// Largest dropped mass over the sweep.
    pub dropped_mass: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScatterReport {
    pub scenario: String,
    pub lattice: LatticeSummary,
    pub coupling: f64,
    pub energy_in: f64,
    pub energy_out: f64,
    pub energy_mismatch: f64,
    /// Energy-conserving channel (`|ΔE| < 1e-12`).
    pub resonant: bool,
    pub sweep: Vec<WindowAmplitude<f64>>,
    /// Log–log slope of `|amplitude − δ|` against the window.
    pub window_slope: Option<f64>,
    pub truncation: TruncationSummary,
    pub hermiticity_residual: f64,
}

pub fn run_scenario(s: &Scenario) -> Result<ScatterReport> {
    let model = s.model()?;
    let input = config_of(&model, &s.in_state)?;
    let output = config_of(&model, &s.out_state)?;
    let problem = ScatteringProblem::new(&model, &input, &output)?;
    let sweep: Vec<WindowAmplitude<f64>> = s.windows.iter().map(|&t| problem.amplitude(t)).collect();
    let delta = if input == output { 1.0 } else { 0.0 };
    let dev: Vec<f64> = sweep.iter().map(|a| (a.amplitude - delta).norm()).collect();
    let window_slope = if sweep.len() >= 2 && dev.iter().all(|&d| d > 0.0) {
        Some(log_log_slope(&s.windows, &dev))
    } else {
        None
    };
    let lat = model.lattice();
    let mismatch = problem.energy_out - problem.energy_in;
    Ok(ScatterReport {
        scenario: s.name.clone(),
        lattice: LatticeSummary { spacing: lat.spacing, half_extent: lat.half_extent, nodes: lat.len(), weight: lat.weight() },
        coupling: s.coupling,
        energy_in: problem.energy_in,
        energy_out: problem.energy_out,
        energy_mismatch: mismatch,
        resonant: mismatch.abs() < 1e-12,
        truncation: TruncationSummary {
            n_max: s.n_max,
            intermediate_states: problem.intermediate_states(),
            dropped_states: problem.dropped_states(),
            dropped_mass: sweep.iter().map(|a| a.dropped_mass).fold(0.0, f64::max),
        },
        sweep,
        window_slope,
        hermiticity_residual: problem.hermiticity_residual,
    })
}
