use nalgebra::{DMatrix, DVector};
use proptest::prelude::*;
use twospinor::sample::Sampler;
use twospinor::symmetry::*;
use twospinor::{cr, Cx, Error};

type Mat = DMatrix<Cx<f64>>;

fn spaces(n_r: usize, n_l: usize, seed: u64) -> InternalSpaces<f64> {
    InternalSpaces::random(n_r, n_l, &mut Sampler::new(seed))
}

fn h_adjoint(x: &Mat, h: &Mat) -> Mat {
    h.clone().try_inverse().unwrap() * x.adjoint() * h
}

fn real_rank(ms: &[Mat], tol: f64) -> usize {
    let n = ms[0].len();
    let rows = DMatrix::<f64>::from_fn(ms.len(), 2 * n, |i, j| if j < n { ms[i][j].re } else { ms[i][j - n].im });
    rows.singular_values().iter().filter(|&&s| s > tol).count()
}

#[test]
fn vacua_are_conformal_isometries() {
    for (n_r, n_l) in [(1, 1), (1, 2), (2, 3), (3, 3), (2, 6)] {
        for seed in 0..20 {
            let sp = spaces(n_r, n_l, 100 + seed);
            let mu = 0.5 + seed as f64 * 0.1;
            let vac = make_vacuum(&sp, mu, seed).unwrap();
            assert!(vac.conformal_residual() < 1e-12);
            assert!((sp.contraction(&vac.h0).unwrap() - mu * mu).abs() < 1e-12);
            let j = vac.isometry();
            assert!((j.adjoint() * &sp.h_l * &j - &sp.h_r).norm() < 1e-12);
        }
    }
}

#[test]
fn electroweak_vacuum_is_canonical() {
    let sp = InternalSpaces::<f64>::identity(1, 2);
    let h0 = Mat::from_column_slice(2, 1, &[cr(0.0), cr(1.0)]);
    let vac = HiggsVacuum::new(sp.clone(), h0, 1.0, 1e-12).unwrap();
    assert_eq!(sp.contraction(&vac.h0).unwrap(), 1.0);
    let split = split_fl(&vac).unwrap();
    assert_eq!(split.p_prime[(1, 1)], cr(1.0));
    assert_eq!(split.p_prime[(0, 0)], cr(0.0));
    assert_eq!(split.p_perp[(0, 0)], cr(1.0));
}

// Builds an h_L-unitary U with U H₀ = H₀' by completing both h-orthonormal frames.
fn relating_unitary(a: &HiggsVacuum<f64>, b: &HiggsVacuum<f64>, s: &mut Sampler) -> Mat {
    let sp = &a.spaces;
    let c_l = sp.h_l.clone().cholesky().unwrap().l().adjoint();
    let c_r = sp.h_r.clone().cholesky().unwrap().l().adjoint();
    let c_r_inv = c_r.try_inverse().unwrap();
    let complete = |j: &Mat, s: &mut Sampler| {
        let jt = &c_l * j * &c_r_inv;
        let mut full = Mat::zeros(sp.n_l, sp.n_l);
        full.columns_mut(0, sp.n_r).copy_from(&jt);
        full.columns_mut(sp.n_r, sp.n_l - sp.n_r).copy_from(&s.dmatrix::<f64>(sp.n_l, sp.n_l - sp.n_r));
        let mut q = full.qr().q();
        q.columns_mut(0, sp.n_r).copy_from(&jt);
        q
    };
    let w1 = complete(&a.isometry(), s);
    let w2 = complete(&b.isometry(), s);
    c_l.clone().try_inverse().unwrap() * w2 * w1.adjoint() * c_l
}

#[test]
fn random_vacua_are_unitarily_related() {
    let mut s = Sampler::new(7);
    for (n_r, n_l) in [(1, 2), (2, 3), (2, 5)] {
        let sp = spaces(n_r, n_l, 8);
        let a = make_vacuum(&sp, 1.3, 1).unwrap();
        let b = make_vacuum(&sp, 1.3, 2).unwrap();
        assert!((&a.h0 - &b.h0).norm() > 1e-3);
        let u = relating_unitary(&a, &b, &mut s);
        assert!((u.adjoint() * &sp.h_l * &u - &sp.h_l).norm() < 1e-11);
        assert!((&u * &a.h0 - &b.h0).norm() < 1e-11);
    }
}

#[test]
fn fl_splitting_projectors() {
    for (n_r, n_l) in [(1, 2), (2, 3), (3, 6)] {
        let sp = spaces(n_r, n_l, 9);
        let vac = make_vacuum(&sp, 2.0, 3).unwrap();
        let FlSplitting { p_prime: p, p_perp: q } = split_fl(&vac).unwrap();
        let id = Mat::identity(n_l, n_l);
        assert!((&p * &p - &p).norm() < 1e-12);
        assert!((&p + &q - &id).norm() < 1e-14);
        assert!((&p * &q).norm() < 1e-12);
        assert!((h_adjoint(&p, &sp.h_l) - &p).norm() < 1e-11);
        assert!((p.trace().re - n_r as f64).abs() < 1e-12);
        assert!((&p * &vac.h0 - &vac.h0).norm() < 1e-12);
    }
}

#[test]
fn matter_decomposition() {
    let mut s = Sampler::new(10);
    let sp = spaces(2, 3, 11);
    let vac = make_vacuum(&sp, 1.0, 4).unwrap();
    let split = split_fl(&vac).unwrap();
    for _ in 0..100 {
        let psi = MatterMultiplet { psi_r: s.dmatrix(2, 2), psi_l: s.dmatrix(3, 2) };
        let d = decompose_matter(&psi, &vac).unwrap();
        let back = d.recompose(&vac);
        assert!((&back.psi_l - &psi.psi_l).norm() < 1e-13 * (1.0 + psi.psi_l.norm()) * 10.0);
        assert_eq!(back.psi_r, psi.psi_r);
        let sum = &split.p_prime * &psi.psi_l + &split.p_perp * &psi.psi_l;
        assert!((sum - &psi.psi_l).norm() < 1e-13 * 10.0);

        let inside = MatterMultiplet { psi_r: psi.psi_r.clone(), psi_l: &vac.h0 * s.dmatrix::<f64>(2, 2) };
        assert!(decompose_matter(&inside, &vac).unwrap().nu.norm() < 1e-12);
        let outside = MatterMultiplet { psi_r: psi.psi_r.clone(), psi_l: &split.p_perp * &psi.psi_l };
        assert!(decompose_matter(&outside, &vac).unwrap().psi_r_prime.norm() < 1e-12);
    }
    let bad = MatterMultiplet { psi_r: s.dmatrix(2, 2), psi_l: s.dmatrix(2, 2) };
    assert!(matches!(decompose_matter(&bad, &vac), Err(Error::DimensionMismatch(_))));
}

#[test]
fn lie_blocks_satisfy_the_adjoint_relation() {
    let mut s = Sampler::new(12);
    for (n_r, n_l) in [(1, 2), (2, 3)] {
        let sp = spaces(n_r, n_l, 13);
        let vac = make_vacuum(&sp, 1.0, 5).unwrap();
        let FlSplitting { p_prime: p, p_perp: q } = split_fl(&vac).unwrap();
        for _ in 0..1000 {
            let xi = random_lie_element(&sp, &mut s).unwrap();
            let d = decompose_lie(&xi, &vac, 1e-12).unwrap();
            assert!(d.adjoint_residual(&sp).unwrap() < 1e-12);
            let oracle = (h_adjoint(&d.xi_minus, &sp.h_l) + &d.xi_plus).norm();
            assert!(oracle < 1e-12);
            assert!((d.recompose() - &xi).norm() < 1e-13 * (1.0 + xi.norm()) * 10.0);
            assert!((&q * &d.xi_prime).norm() < 1e-12);
            assert!((&p * &d.xi_plus).norm() < 1e-12);
            assert!((&d.xi_minus * &p).norm() < 1e-12);
            assert!((&d.xi_perp * &p).norm() < 1e-12);
        }
    }
}

#[test]
fn u2_splits_into_one_two_one() {
    let sp = InternalSpaces::<f64>::identity(1, 2);
    let vac = make_vacuum(&sp, 1.0, 6).unwrap();
    let mut s = Sampler::new(14);
    let basis: Vec<Mat> = (0..4).map(|_| random_lie_element(&sp, &mut s).unwrap()).collect();
    assert_eq!(real_rank(&basis, 1e-9), 4);
    let ds: Vec<LieDecomposition<f64>> = basis.iter().map(|x| decompose_lie(x, &vac, 1e-12).unwrap()).collect();
    let block = |f: fn(&LieDecomposition<f64>) -> Mat| real_rank(&ds.iter().map(f).collect::<Vec<_>>(), 1e-9);
    assert_eq!(block(|d| d.xi_prime.clone()), 1);
    assert_eq!(block(|d| d.xi_plus.clone()), 2);
    assert_eq!(block(|d| d.xi_minus.clone()), 2);
    assert_eq!(block(|d| d.xi_perp.clone()), 1);
}

#[test]
fn block_diagonal_elements_have_no_mixed_part() {
    let sp = InternalSpaces::<f64>::identity(1, 2);
    let h0 = Mat::from_column_slice(2, 1, &[cr(0.0), cr(1.0)]);
    let vac = HiggsVacuum::new(sp, h0, 1.0, 1e-12).unwrap();
    let xi = Mat::from_diagonal(&DVector::from_vec(vec![Cx::new(0.0, 0.3), Cx::new(0.0, -1.2)]));
    let d = decompose_lie(&xi, &vac, 1e-12).unwrap();
    assert_eq!(d.xi_plus.norm(), 0.0);
    assert_eq!(d.xi_minus.norm(), 0.0);
    let hermitian = Mat::identity(2, 2);
    assert!(matches!(decompose_lie(&hermitian, &vac, 1e-12), Err(Error::NotAntiHermitian(_))));
}

#[test]
fn higgs_potential_is_radially_stationary() {
    let sp = spaces(2, 3, 15);
    let mu = 1.7;
    let lambda = 0.6;
    let vac = make_vacuum(&sp, mu, 7).unwrap();
    assert_eq!(higgs_potential(&Mat::zeros(3, 2), &vac, lambda).unwrap(), 0.0);
    let v0 = higgs_potential(&vac.h0, &vac, lambda).unwrap();
    assert!((v0 - lambda * mu.powi(4)).abs() < 1e-10);

    let v = |s: f64| higgs_potential(&(&vac.h0 * cr(s)), &vac, lambda).unwrap();
    let d = |h: f64| (v(1.0 + h) - v(1.0 - h)) / (2.0 * h);
    // V(s) = λμ⁴(2s² − s⁴), so the central difference at s = 1 is −4λμ⁴h².
    for h in [1e-2, 5e-3, 2.5e-3] {
        assert!((d(h) + 4.0 * lambda * mu.powi(4) * h * h).abs() < 1e-9);
    }
    let richardson = (4.0 * d(5e-3) - d(1e-2)) / 3.0;
    assert!(richardson.abs() < 1e-9);
}

#[test]
fn invalid_inputs() {
    let sp = InternalSpaces::<f64>::identity(2, 1);
    assert!(matches!(make_vacuum(&sp, 1.0, 0), Err(Error::RightExceedsLeft { n_r: 2, n_l: 1 })));
    let sp = InternalSpaces::<f64>::identity(1, 2);
    let vac = make_vacuum(&sp, 1.0, 0).unwrap();
    assert!(higgs_potential(&Mat::zeros(1, 2), &vac, 1.0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn adjoint_relation_up_to_six(n_l in 1usize..=6, r in 0usize..6, seed in 0u64..10_000) {
        let n_r = 1 + r % n_l;
        let sp = spaces(n_r, n_l, seed);
        let vac = make_vacuum(&sp, 1.0, seed).unwrap();
        let mut s = Sampler::new(seed ^ 0xabc);
        let xi = random_lie_element(&sp, &mut s).unwrap();
        let d = decompose_lie(&xi, &vac, 1e-12).unwrap();
        prop_assert!(d.adjoint_residual(&sp).unwrap() < 1e-12 * (1.0 + xi.norm()) * 10.0);
    }
}
