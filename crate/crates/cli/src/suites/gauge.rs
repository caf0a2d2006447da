use nalgebra::DMatrix;
use serde_json::json;
use twospinor::fock::log_log_slope;
use twospinor::gauge::*;
use twospinor::photon::NullCovector;
use twospinor::sample::Sampler;
use twospinor::Cx;

use crate::report::{env, Check, SuiteReport};

pub const LEVELS: [usize; 3] = [16, 20, 24];
const AMPLITUDE: f64 = 0.25;
const CLASSES: usize = 200;

fn random_class(s: &mut Sampler, basis: &LieBasis<f64>) -> RadiativeGaugeClass<f64> {
    let k = NullCovector::from_spinor(&s.two_spinor::<f64>()).unwrap();
    let n = basis.len();
    let spatial: [DMatrix<Cx<f64>>; 3] =
        std::array::from_fn(|_| basis.combine(&(0..n).map(|_| s.normal()).collect::<Vec<_>>()));
    RadiativeGaugeClass::with_spatial(k, spatial).unwrap()
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

pub fn run(seed: u64) -> SuiteReport {
    let mut hs = vec![];
    let mut drift = vec![];
    let mut covariance = vec![];
    for n in LEVELS {
        let grid = Grid4::periodic_box(n).unwrap();
        let alpha = smooth_connection(grid, 2, AMPLITUDE, seed);
        let k = smooth_unitary_field(grid, 2, AMPLITUDE, seed.wrapping_add(1));
        let f = curvature(&alpha).unwrap();
        let f2 = curvature(&gauge_transform(&alpha, &k).unwrap()).unwrap();
        let mut e: f64 = 0.0;
        for node in 0..grid.len() {
            let kx = &k.data[node];
            for &(a, b) in &PAIRS {
                e = e.max((f2.get(node, a, b) - kx * f.get(node, a, b) * kx.adjoint()).norm());
            }
        }
        drift.push(max_diff(&invariant_scalar(&f), &invariant_scalar(&f2)));
        covariance.push(e);
        hs.push(grid.h);
    }

    let mut s = Sampler::new(seed);
    let grid = Grid4::periodic_box(6).unwrap();
    let alpha = smooth_connection(grid, 2, 0.5, seed.wrapping_add(2));
    let k = random_anti_hermitian::<f64>(&mut s, 2).exp();
    let kf = GaugeTransformField::constant(grid, k, 1e-12).unwrap();
    let s1 = invariant_scalar(&curvature(&alpha).unwrap());
    let s2 = invariant_scalar(&curvature(&gauge_transform(&alpha, &kf).unwrap()).unwrap());
    let constant = max_diff(&s1, &s2);

    let u1 = LieBasis::<f64>::u1();
    let mut abelian: f64 = 0.0;
    for _ in 0..CLASSES {
        let c = random_class(&mut s, &u1);
        let chi = u1.combine(&[s.normal()]);
        abelian = abelian.max(rho_discrepancy(&c, &c.shifted(&chi)));
    }
    let su2 = LieBasis::<f64>::su2();
    let mut non_abelian: f64 = 0.0;
    for _ in 0..CLASSES {
        let c = random_class(&mut s, &su2);
        let chi = su2.combine(&[s.normal(), s.normal(), s.normal()]);
        non_abelian = non_abelian.max(rho_discrepancy(&c, &c.shifted(&chi)));
    }

    let checks = vec![
        Check::near(
            "gauge.invariant_drift_slope",
            "invariant scalar drift under smooth gauge transforms, log-log slope in h",
            2.0,
            0.3,
            log_log_slope(&hs, &drift),
        ),
        Check::near(
            "gauge.covariance_slope",
            "curvature covariance F -> K F K^-1, log-log slope in h",
            2.0,
            0.3,
            log_log_slope(&hs, &covariance),
        ),
        Check::reported("gauge.invariant_drift_finest", "invariant scalar drift on the finest grid", drift[2]),
        Check::bound("gauge.constant_conjugation", "invariant scalar exact under constant K", 1e-12, constant),
        Check::bound("gauge.abelian_rho_class_function", "abelian rho[k, alpha] depends only on the class", 1e-13, abelian),
        Check::reported("gauge.non_abelian_rho_discrepancy", "non-abelian rho shift discrepancy", non_abelian),
    ];
    SuiteReport::new(
        "gauge",
        env(&[
            ("seed", json!(seed)),
            ("grid_sides", json!(LEVELS)),
            ("grid_spacings", json!(hs)),
            ("field_amplitude", json!(AMPLITUDE)),
            ("classes", json!(CLASSES)),
        ]),
        checks,
    )
}
