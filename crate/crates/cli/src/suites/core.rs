use serde_json::json;
use twospinor::sample::Sampler;
use twospinor::spinor::{
    clifford, dirac_pairing, make_epsilon, metric_g, pairing_signature, pauli_basis, DiracOperator, EpsilonForm, ETA,
};
use twospinor::cx;

use crate::report::{env, Check, SuiteReport};

pub const SAMPLES: usize = 1000;
const THETAS: [f64; 2] = [0.0, 1.3];

pub fn run(seed: u64) -> SuiteReport {
    let mut s = Sampler::new(seed);
    let mut clifford_resid: f64 = 0.0;
    let mut adjoint_resid: f64 = 0.0;
    for _ in 0..SAMPLES {
        let x = s.hermitian_hvector::<f64>();
        let y = s.hermitian_hvector::<f64>();
        let lhs = clifford(&x).anticommutator(&clifford(&y));
        let rhs = DiracOperator::identity() * (metric_g(&x, &y).unwrap() * cx(2.0, 0.0));
        clifford_resid = clifford_resid.max((lhs - rhs).norm());

        let phi = s.dirac_spinor::<f64>();
        let psi = s.dirac_spinor::<f64>();
        let g = clifford(&x);
        let d = dirac_pairing(&g.apply(&phi), &psi) - dirac_pairing(&phi, &g.apply(&psi));
        adjoint_resid = adjoint_resid.max(d.norm());
    }

    let tau = pauli_basis::<f64>();
    let mut ortho: f64 = 0.0;
    for l in 0..4 {
        for m in 0..4 {
            let want = if l == m { ETA[l] } else { 0.0 };
            ortho = ortho.max((metric_g(&tau[l], &tau[m]).unwrap() - cx(want, 0.0)).norm());
        }
    }

    let [e1, e2]: [EpsilonForm<f64>; 2] = THETAS.map(make_epsilon);
    let mut phase: f64 = 0.0;
    for _ in 0..SAMPLES {
        let x = s.complex_hvector::<f64>();
        let y = s.complex_hvector::<f64>();
        phase = phase.max((e1.metric_raw(&x, &y) - e2.metric_raw(&x, &y)).norm());
        phase = phase.max((e1.clifford(&x) - e2.clifford(&x)).norm());
    }

    let (pos, neg) = pairing_signature::<f64>(1e-12);
    let sig_defect = (pos as f64 - 2.0).abs() + (neg as f64 - 2.0).abs();

    let checks = vec![
        Check::bound("core.clifford_relation", "clifford relation on hermitian pairs", 1e-12, clifford_resid),
        Check::bound("core.pauli_orthonormal", "pauli basis orthonormal, signature (+,-,-,-)", 1e-14, ortho),
        Check::bound("core.epsilon_phase_independence", "metric and clifford map independent of the epsilon phase", 1e-14, phase),
        Check::bound("core.dirac_pairing_signature", "dirac pairing signature (+,+,-,-)", 0.0, sig_defect),
        Check::bound("core.clifford_self_adjoint", "clifford action self-adjoint for the dirac pairing", 1e-12, adjoint_resid),
    ];
    SuiteReport::new(
        "core",
        env(&[("seed", json!(seed)), ("samples", json!(SAMPLES)), ("epsilon_phases", json!(THETAS))]),
        checks,
    )
}
