use serde_json::json;
use twospinor::dirac_split::{dirac_projectors, FermionSpecies, OnShellMomentum};
use twospinor::sample::Sampler;
use twospinor::spinor::DiracSpinor;
use twospinor::vertex::{
    ell_int, gauge_shift_invariance, k_vertex_theorem, vertex_kernel, vertex_two_spinor, KSign, VertexCoupling,
};
use twospinor::cx;

use crate::report::{env, Check, SuiteReport};

pub const SAMPLES: usize = 1000;
const MASS: f64 = 1.0;
const E: f64 = 0.7;

pub fn eigenstate(s: &mut Sampler, species: FermionSpecies) -> DiracSpinor<f64> {
    let p = OnShellMomentum::new(MASS, s.momentum3(2.0)).unwrap();
    let (pp, pm) = dirac_projectors(&p).unwrap();
    let chi = s.dirac_spinor::<f64>();
    match species {
        FermionSpecies::Electron => pp.apply(&chi),
        FermionSpecies::Positron => pm.apply(&chi),
    }
}

fn tag(a: FermionSpecies) -> &'static str {
    match a {
        FermionSpecies::Electron => "e-",
        FermionSpecies::Positron => "e+",
    }
}

pub fn run(seed: u64) -> SuiteReport {
    use FermionSpecies::*;
    let mut s = Sampler::new(seed);
    let c = VertexCoupling { e: E };
    let mut paths: f64 = 0.0;
    let mut kernel: f64 = 0.0;
    for _ in 0..SAMPLES {
        let phi = s.dirac_spinor::<f64>();
        let psi = s.dirac_spinor::<f64>();
        let a = s.complex_hvector::<f64>();
        let lhs = ell_int(&c, &phi, &a, &psi);
        let rhs = vertex_two_spinor(&phi, &a, &psi) * cx(-E, 0.0);
        paths = paths.max((lhs - rhs).norm() / (1.0 + lhs.norm()));
        for k in vertex_kernel(&phi, &psi).unwrap() {
            kernel = kernel.max(ell_int(&c, &phi, &k, &psi).norm() / (1.0 + phi.norm() * psi.norm()));
        }
    }

    let mut checks = vec![
        Check::bound("vertex.two_paths", "matrix and two-spinor vertex agree", 1e-12, paths),
        Check::bound("vertex.kernel_annihilated", "kernel basis annihilates the amplitude", 1e-12, kernel),
    ];
    let per_case = SAMPLES / 4;
    let mut shift: f64 = 0.0;
    for (a, b) in [(Electron, Electron), (Positron, Positron), (Electron, Positron), (Positron, Electron)] {
        let sign = KSign::vanishing_for(a, b);
        let mut worst: f64 = 0.0;
        for _ in 0..per_case {
            let psi = eigenstate(&mut s, a);
            let phi = eigenstate(&mut s, b);
            let scale = psi.norm() * phi.norm();
            worst = worst.max(k_vertex_theorem(&phi, &psi, sign).unwrap().norm() / scale);
            let pot = s.complex_hvector::<f64>();
            let g = gauge_shift_invariance(&c, &phi, &psi, &pot, s.complex(), MASS).unwrap();
            let scale = scale * (1.0 + g.amplitude.norm()) * (1.0 + g.k.norm());
            shift = shift.max((g.amplitude - g.amplitude_shifted).norm() / scale);
        }
        let name = format!("vertex.k_vanishes_{}_{}", tag(a), tag(b));
        let anchor = format!("k-vertex identity vanishes for {} -> {}", tag(a), tag(b));
        checks.push(Check::bound(&name, &anchor, 1e-12, worst));
    }
    checks.push(Check::bound("vertex.gauge_shift", "on-shell amplitudes unchanged by A -> A + c k", 1e-12, shift));
    SuiteReport::new(
        "vertex",
        env(&[("seed", json!(seed)), ("samples", json!(SAMPLES)), ("mass", json!(MASS)), ("coupling", json!(E))]),
        checks,
    )
}
