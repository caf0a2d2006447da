use serde_json::json;
use twospinor::sample::Sampler;
use twospinor::symmetry::{decompose_lie, higgs_potential, make_vacuum, random_lie_element, InternalSpaces};
use twospinor::cr;

use crate::report::{env, Check, SuiteReport};

pub const SHAPES: [(usize, usize); 2] = [(1, 2), (2, 3)];
pub const SAMPLES: usize = 1000;
const MU: f64 = 1.7;
const LAMBDA: f64 = 0.6;

pub fn run(seed: u64) -> SuiteReport {
    let mut s = Sampler::new(seed);
    let mut checks = vec![];
    let mut conformal: f64 = 0.0;
    let mut value: f64 = 0.0;
    let mut slope: f64 = 0.0;
    for (n_r, n_l) in SHAPES {
        let sp = InternalSpaces::random(n_r, n_l, &mut s);
        let vac = make_vacuum(&sp, MU, seed).unwrap();
        conformal = conformal.max(vac.conformal_residual());
        let mut adjoint: f64 = 0.0;
        for _ in 0..SAMPLES {
            let xi = random_lie_element(&sp, &mut s).unwrap();
            let d = decompose_lie(&xi, &vac, 1e-12).unwrap();
            adjoint = adjoint.max(d.adjoint_residual(&sp).unwrap());
        }
        checks.push(Check::bound(
            &format!("higgs.adjoint_relation_{n_r}_{n_l}"),
            "(xi^-)^dagger = -xi^+ for the h_L adjoint",
            1e-12,
            adjoint,
        ));

        let v = |t: f64| higgs_potential(&(&vac.h0 * cr(t)), &vac, LAMBDA).unwrap();
        value = value.max((v(1.0) - LAMBDA * MU.powi(4)).abs());
        // Richardson-extrapolated radial derivative at t = 1.
        let d = |h: f64| (v(1.0 + h) - v(1.0 - h)) / (2.0 * h);
        slope = slope.max(((4.0 * d(5e-3) - d(1e-2)) / 3.0).abs());
    }
    checks.push(Check::bound("higgs.conformal_isometry", "vacuum is a conformal isometry", 1e-12, conformal));
    checks.push(Check::bound("higgs.potential_value", "V(H0) = lambda mu^4", 1e-10, value));
    checks.push(Check::bound("higgs.radially_stationary", "dV/dt at t H0 vanishes at t = 1", 1e-10, slope));
    SuiteReport::new(
        "higgs",
        env(&[
            ("seed", json!(seed)),
            ("shapes", json!(SHAPES)),
            ("samples", json!(SAMPLES)),
            ("mu", json!(MU)),
            ("lambda", json!(LAMBDA)),
        ]),
        checks,
    )
}
