//! Finite-window scattering amplitudes `⟨out| U(T/2, −T/2) |in⟩` to second order.

use serde::{Deserialize, Serialize};

use super::evolve::{nested_time_integral, time_integral};
use super::hamiltonian::QedModel;
use super::state::FockConfig;
use crate::error::{Error, Result};
use crate::scalar::{cr, Cx, Real};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct WindowAmplitude<T: Real> {
    pub window: T,
    pub first_order: Cx<T>,
    pub second_order: Cx<T>,
    /// `δ + first + second`.
    pub amplitude: Cx<T>,
    /// Squared norm of the first-order amplitude pushed above `N_max`.
    pub dropped_mass: T,
}

/// Precomputed first-order maps from the in- and out-configurations.
#[derive(Clone, Debug)]
pub struct ScatteringProblem<T: Real> {
    pub energy_in: T,
    pub energy_out: T,
    same: bool,
    /// `⟨out|𝔥(0)|in⟩` and its frequency.
    direct: Option<(Cx<T>, T)>,
    /// `(⟨out|𝔥(0)|n⟩, ω_out,n, ⟨n|𝔥(0)|in⟩, ω_n,in)` over kept intermediates.
    paths: Vec<(Cx<T>, T, Cx<T>, T)>,
    /// First-order transitions from `in` above `N_max`.
    dropped: Vec<(Cx<T>, T)>,
    /// `|⟨out|𝔥|in⟩ − conj⟨in|𝔥|out⟩|`.
    pub hermiticity_residual: T,
}

impl<T: Real> ScatteringProblem<T> {
    pub fn new(model: &QedModel<T>, input: &FockConfig, output: &FockConfig) -> Result<Self> {
        for c in [input, output] {
            if c.particles() > model.n_max {
                return Err(Error::InvalidScenario(format!("{} particles exceed N_max = {}", c.particles(), model.n_max)));
            }
        }
        let from_in = model.transition_map(input);
        let from_out = model.transition_map(output);
        let direct = from_in.get(output).copied();
        let back = from_out.get(input).copied();
        let zero = cr(T::zero());
        let hermiticity_residual =
            (direct.map_or(zero, |d| d.0) - back.map_or(zero, |b| b.0.conj())).norm_sqr().sqrt();
        let mut paths = Vec::new();
        let mut dropped = Vec::new();
        let mut keys: Vec<&FockConfig> = from_in.keys().collect();
        keys.sort();
        for n in keys {
            let (c_ni, w_ni) = from_in[n];
            if n.particles() > model.n_max {
                dropped.push((c_ni, w_ni));
                continue;
            }
            // ⟨out|𝔥(t)|n⟩ = conj⟨n|𝔥(t)|out⟩ for the Hermitian assembly.
            if let Some(&(c_nf, w_nf)) = from_out.get(n) {
                paths.push((c_nf.conj(), -w_nf, c_ni, w_ni));
            }
        }
        Ok(Self {
            energy_in: model.energy(input),
            energy_out: model.energy(output),
            same: input == output,
            direct,
            paths,
            dropped,
            hermiticity_residual,
        })
    }

    pub fn intermediate_states(&self) -> usize {
        self.paths.len()
    }

    pub fn dropped_states(&self) -> usize {
        self.dropped.len()
    }

    pub fn amplitude(&self, window: T) -> WindowAmplitude<T> {
        let t0 = -window * T::lit(0.5);
        let t1 = window * T::lit(0.5);
        let mi = Cx::new(T::zero(), -T::one());
        let first = self.direct.map_or(cr(T::zero()), |(c, w)| mi * c * time_integral(w, t0, t1));
        let second = self
            .paths
            .iter()
            .map(|&(c2, w2, c1, w1)| -(c2 * c1 * nested_time_integral(w2, w1, t0, t1)))
            .fold(cr(T::zero()), |a, b| a + b);
        let dropped_mass = self
            .dropped
            .iter()
            .map(|&(c, w)| (c * time_integral(w, t0, t1)).norm_sqr())
            .fold(T::zero(), |a, b| a + b);
        let delta = if self.same { cr(T::one()) } else { cr(T::zero()) };
        WindowAmplitude { window, first_order: first, second_order: second, amplitude: delta + first + second, dropped_mass }
    }
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn log_log_slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let lx: Vec<f64> = x.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let num: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let den: f64 = lx.iter().map(|a| (a - mx) * (a - mx)).sum();
    num / den
}
