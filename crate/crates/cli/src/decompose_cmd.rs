//! `decompose`: Higgs vacuum, splitting of `F_L` and block decomposition of `𝔏_L`.

use serde::{Deserialize, Serialize};
use twospinor::sample::Sampler;
use twospinor::symmetry::{
    decompose_lie, higgs_potential, make_vacuum, random_lie_element, split_fl, InternalSpaces,
};

use crate::report::{complex_matrix, Check};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MetricChoice {
    Identity,
    Random,
}

fn default_metric() -> MetricChoice {
    MetricChoice::Identity
}

fn default_samples() -> usize {
    100
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecomposeInput {
    pub n_r: usize,
    pub n_l: usize,
    pub mu: f64,
    pub lambda: f64,
    #[serde(default = "default_metric")]
    pub metric: MetricChoice,
    #[serde(default = "default_samples")]
    pub samples: usize,
}

type Matrix = Vec<Vec<[f64; 2]>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub n_r: usize,
    pub n_l: usize,
    pub mu: f64,
    pub lambda: f64,
    pub h_r: Matrix,
    pub h_l: Matrix,
    pub h0: Matrix,
    pub p_prime: Matrix,
    pub p_perp: Matrix,
    pub potential_at_vacuum: f64,
    pub samples: usize,
    pub checks: Vec<Check>,
    pub passed: bool,
}

pub fn run(input: &DecomposeInput, seed: u64, tol: f64) -> Result<DecomposeReport, CliError> {
    let bad = |e: twospinor::Error| CliError::Input(e.to_string());
    if input.n_r == 0 || !(input.mu > 0.0) {
        return Err(CliError::Input("n_r must be positive and mu > 0".into()));
    }
    let mut s = Sampler::new(seed);
    let spaces = match input.metric {
        MetricChoice::Identity => InternalSpaces::identity(input.n_r, input.n_l),
        MetricChoice::Random => InternalSpaces::random(input.n_r, input.n_l, &mut s),
    };
    let vac = make_vacuum(&spaces, input.mu, seed).map_err(bad)?;
    let split = split_fl(&vac).map_err(bad)?;
    let mut adjoint: f64 = 0.0;
    let mut recompose: f64 = 0.0;
    for _ in 0..input.samples {
        let xi = random_lie_element(&spaces, &mut s).map_err(bad)?;
        let d = decompose_lie(&xi, &vac, 1e-12).map_err(bad)?;
        adjoint = adjoint.max(d.adjoint_residual(&spaces).map_err(bad)?);
        recompose = recompose.max((d.recompose() - &xi).norm() / (1.0 + xi.norm()));
    }
    let v0 = higgs_potential(&vac.h0, &vac, input.lambda).map_err(bad)?;
    let checks = vec![
        Check::bound("higgs.conformal_isometry", "vacuum is a conformal isometry", tol, vac.conformal_residual()),
        Check::bound("higgs.adjoint_relation", "(xi^-)^dagger = -xi^+ for the h_L adjoint", tol, adjoint),
        Check::bound("higgs.recomposition", "blocks sum back to xi", tol, recompose),
        Check::bound(
            "higgs.potential_value",
            "V(H0) = lambda mu^4",
            1e-10,
            (v0 - input.lambda * input.mu.powi(4)).abs(),
        ),
    ];
    let passed = !checks.iter().any(Check::failed);
    Ok(DecomposeReport {
        n_r: input.n_r,
        n_l: input.n_l,
        mu: input.mu,
        lambda: input.lambda,
        h_r: complex_matrix(&spaces.h_r),
        h_l: complex_matrix(&spaces.h_l),
        h0: complex_matrix(&vac.h0),
        p_prime: complex_matrix(&split.p_prime),
        p_perp: complex_matrix(&split.p_perp),
        potential_at_vacuum: v0,
        samples: input.samples,
        checks,
        passed,
    })
}
