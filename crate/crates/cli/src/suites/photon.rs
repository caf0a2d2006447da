use serde_json::json;
use twospinor::photon::{
    duality_operator, hodge_b, optical_metric, selfdual_split, two_spinor_character, NullCovector, SpinorCharacterKind,
    KAPPA_LAMBDA_BAR_EIGENVALUE,
};
use twospinor::sample::Sampler;
use twospinor::spinor::{pauli_basis, ComplexHVector};
use twospinor::Cx;

use crate::report::{env, Check, SuiteReport};

pub const SAMPLES: usize = 1000;

fn random_null(s: &mut Sampler) -> NullCovector<f64> {
    loop {
        let kappa = s.two_spinor::<f64>();
        if kappa.norm_sqr() > 0.1 {
            return NullCovector::from_spinor(&kappa).unwrap();
        }
    }
}

fn random_horizontal(s: &mut Sampler, k: &NullCovector<f64>) -> ComplexHVector<f64> {
    let x = s.complex_hvector::<f64>();
    let t0 = pauli_basis::<f64>()[0];
    x - t0 * (k.k.g_raw(&x) / k.k.g_raw(&t0))
}

pub fn run(seed: u64) -> SuiteReport {
    let mut s = Sampler::new(seed);
    let mut eigen: f64 = 0.0;
    let mut quotient: f64 = 0.0;
    for _ in 0..SAMPLES {
        let k = random_null(&mut s);
        let b = random_horizontal(&mut s, &k);
        let (bp, bm) = selfdual_split(&k, &b).unwrap();
        eigen = eigen.max(k.residual_mod_k(&duality_operator(&k, &bp).unwrap(), &bp));
        eigen = eigen.max(k.residual_mod_k(&duality_operator(&k, &bm).unwrap(), &(-bm)));

        let b2 = random_horizontal(&mut s, &k);
        let c: Cx<f64> = s.complex();
        let shifted = b + k.k * c;
        let g1 = optical_metric(&k, &b, &b2).unwrap();
        let g2 = optical_metric(&k, &shifted, &b2).unwrap();
        quotient = quotient.max((g1 - g2).norm() / (1.0 + b.norm() * b2.norm() * k.k.norm()));
        quotient = quotient.max(k.residual_mod_k(&hodge_b(&k, &b).unwrap(), &hodge_b(&k, &shifted).unwrap()));
    }

    let lbar_sign = KAPPA_LAMBDA_BAR_EIGENVALUE as f64;
    let mut disagreements = 0usize;
    for i in 0..SAMPLES {
        let kappa = s.two_spinor::<f64>();
        let k = NullCovector::from_spinor(&kappa).unwrap();
        let mu = s.two_spinor::<f64>();
        let (beta, want, sign) = if i % 2 == 0 {
            (ComplexHVector::tensor(&kappa, &mu), SpinorCharacterKind::KappaLambdaBar, lbar_sign)
        } else {
            (ComplexHVector::tensor(&mu, &kappa), SpinorCharacterKind::LambdaKappaBar, -lbar_sign)
        };
        let kind = two_spinor_character(&k, &beta, 1e-9).unwrap().kind;
        let j = duality_operator(&k, &beta).unwrap();
        if kind != want || !k.eq_mod_k(&j, &(beta * sign), 1e-10) {
            disagreements += 1;
        }
    }

    let checks = vec![
        Check::bound("photon.hodge_eigen_residual", "-i *_B acts as +1 and -1 on the split parts", 1e-12, eigen),
        Check::bound("photon.quotient_invariance", "metric and hodge operator invariant under beta -> beta + c k", 1e-12, quotient),
        Check::bound(
            "photon.spinor_vs_hodge",
            "spinor characterization agrees with hodge eigenspaces",
            0.0,
            disagreements as f64,
        ),
    ];
    SuiteReport::new("photon", env(&[("seed", json!(seed)), ("samples", json!(SAMPLES))]), checks)
}
