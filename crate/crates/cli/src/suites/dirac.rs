use serde_json::json;
use twospinor::dirac_split::{
    dirac_frame_at, dirac_projectors, lambda_u, momentum_from_state, state_species, tau_of, FermionSpecies,
    OnShellMomentum,
};
use twospinor::sample::Sampler;
use twospinor::spinor::{clifford, metric_g, DiracOperator};
use twospinor::cx;

use crate::report::{env, Check, SuiteReport};

pub const MOMENTA: usize = 100;
pub const SPINORS: usize = 1000;

fn random_momentum(s: &mut Sampler) -> OnShellMomentum<f64> {
    let m = s.uniform(0.3, 3.0);
    OnShellMomentum::new(m, s.momentum3(3.0)).unwrap()
}

pub fn run(seed: u64) -> SuiteReport {
    let mut s = Sampler::new(seed);
    let mut proj: f64 = 0.0;
    let mut eig: f64 = 0.0;
    let mut round_trip: f64 = 0.0;
    let mut species_errors = 0usize;
    for _ in 0..MOMENTA {
        let p = random_momentum(&mut s);
        let (pp, pm) = dirac_projectors(&p).unwrap();
        let id = DiracOperator::identity();
        for r in [
            (pp * pp - pp).norm(),
            (pm * pm - pm).norm(),
            (pp * pm).norm(),
            (pp + pm - id).norm(),
            (pp.trace() - cx(2.0, 0.0)).norm(),
            (pm.trace() - cx(2.0, 0.0)).norm(),
        ] {
            proj = proj.max(r);
        }
        let g = clifford(&p.sharp());
        let f = dirac_frame_at(&p).unwrap();
        for a in 0..2 {
            eig = eig.max((g.apply(&f.u[a]) - f.u[a] * cx(p.m, 0.0)).norm() / p.p0());
            eig = eig.max((g.apply(&f.v[a]) + f.v[a] * cx(p.m, 0.0)).norm() / p.p0());
            for (psi, species) in [(f.u[a], FermionSpecies::Electron), (f.v[a], FermionSpecies::Positron)] {
                let q = momentum_from_state(&psi, p.m).unwrap();
                for i in 0..3 {
                    round_trip = round_trip.max((q.p[i] - p.p[i]).abs() / p.p0());
                }
                if state_species(&psi).ok() != Some(species) {
                    species_errors += 1;
                }
            }
        }
    }

    let mut unit: f64 = 0.0;
    let mut sign_errors = 0usize;
    for i in 0..SPINORS {
        let p = random_momentum(&mut s);
        let (pp, pm) = dirac_projectors(&p).unwrap();
        let chi = s.dirac_spinor::<f64>();
        let (psi, want) = if i % 2 == 0 { (pp.apply(&chi), 1.0) } else { (pm.apply(&chi), -1.0) };
        let tau = tau_of(&psi).unwrap();
        unit = unit.max((metric_g(&tau, &tau).unwrap() - cx(1.0, 0.0)).norm());
        let fixed = (clifford(&tau).apply(&psi) - psi * cx(want, 0.0)).norm() < 1e-10 * psi.norm();
        if lambda_u(&psi).re.signum() != want || !fixed || tau.time_component() <= 0.0 {
            sign_errors += 1;
        }
    }

    let checks = vec![
        Check::bound("dirac.projector_algebra", "dirac splitting: idempotent, complete, trace 2", 1e-12, proj),
        Check::bound("dirac.frame_eigen_residual", "dirac frames are eigenvectors of the clifford momentum", 1e-12, eig),
        Check::bound("dirac.tau_unit_timelike", "reconstructed tau is unit future timelike", 1e-10, unit),
        Check::bound("dirac.sign_law", "sign of <lambda,u> equals the eigenvalue sign", 0.0, sign_errors as f64),
        Check::bound("dirac.momentum_round_trip", "momentum recovered from the state", 1e-10, round_trip),
        Check::bound("dirac.species_recovery", "species recovered from the state", 0.0, species_errors as f64),
    ];
    SuiteReport::new(
        "dirac",
        env(&[("seed", json!(seed)), ("momenta", json!(MOMENTA)), ("spinors", json!(SPINORS))]),
        checks,
    )
}
