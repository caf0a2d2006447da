use nalgebra::{DMatrix, Matrix2};
use twospinor::gauge::*;
use twospinor::photon::NullCovector;
use twospinor::sample::Sampler;
use twospinor::{cr, Cx};

fn slope(hs: &[f64], errs: &[f64]) -> f64 {
    let n = hs.len() as f64;
    let xs: Vec<f64> = hs.iter().map(|h| h.ln()).collect();
    let ys: Vec<f64> = errs.iter().map(|e| e.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let num: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    num / den
}

fn i_times(x: f64) -> DMatrix<Cx<f64>> {
    DMatrix::from_element(1, 1, Cx::new(0.0, x))
}

// f(x) = sin(x0) cos(x1) + sin(2 x2 + x3)
fn grad_f(x: [f64; 4], a: usize) -> f64 {
    match a {
        0 => x[0].cos() * x[1].cos(),
        1 => -x[0].sin() * x[1].sin(),
        2 => 2.0 * (2.0 * x[2] + x[3]).cos(),
        _ => (2.0 * x[2] + x[3]).cos(),
    }
}

#[test]
fn abelian_pure_gauge_is_flat_to_second_order() {
    let mut errs = vec![];
    let mut hs = vec![];
    for n in [8, 12, 16] {
        let grid = Grid4::periodic_box(n).unwrap();
        let alpha = ConnectionField::from_fn(grid, 1, |x, a| i_times(grad_f(x, a)));
        let f = curvature(&alpha).unwrap();
        errs.push(f.max_norm());
        hs.push(grid.h);
    }
    let s = slope(&hs, &errs);
    assert!((s - 2.0).abs() < 0.3, "slope {s}, errs {errs:?}");
}

#[test]
fn constant_transform_conjugates() {
    let grid = Grid4::periodic_box(4).unwrap();
    let b = LieBasis::<f64>::su2();
    let alpha = ConnectionField::from_fn(grid, 2, |_, a| b.elements[a % 3].clone() * cr(0.3 + a as f64));
    let mut s = Sampler::new(61);
    let k = random_anti_hermitian::<f64>(&mut s, 2).exp();
    let kf = GaugeTransformField::constant(grid, k.clone(), 1e-12).unwrap();
    let out = gauge_transform(&alpha, &kf).unwrap();
    for node in 0..grid.len() {
        for a in 0..4 {
            let want = &k * alpha.at(node, a) * k.adjoint();
            assert!((out.at(node, a) - want).norm() < 1e-14);
        }
    }
}

#[test]
fn pure_gauge_from_zero_stays_flat() {
    let mut errs = vec![];
    let mut hs = vec![];
    for n in [8, 12, 16] {
        let grid = Grid4::periodic_box(n).unwrap();
        let k = smooth_unitary_field(grid, 2, 0.25, 62);
        let alpha = gauge_transform(&ConnectionField::zeros(grid, 2), &k).unwrap();
        for node in [0, 5, grid.len() / 3] {
            let kx = &k.data[node];
            for a in 0..4 {
                let dk = (&k.data[grid.shift(node, a, 1)] - &k.data[grid.shift(node, a, -1)]) * cr(1.0 / (2.0 * grid.h));
                let want = dk * kx.adjoint();
                let want = (&want - want.adjoint()) * cr(0.5);
                assert!((alpha.at(node, a) - want).norm() < 1e-13);
            }
        }
        errs.push(curvature(&alpha).unwrap().max_norm());
        hs.push(grid.h);
    }
    let s = slope(&hs, &errs);
    assert!((s - 2.0).abs() < 0.3, "slope {s}, errs {errs:?}");
}

#[test]
fn curvature_is_covariant_to_second_order() {
    let mut errs = vec![];
    let mut drift = vec![];
    let mut hs = vec![];
    for n in [16, 20, 24] {
        let grid = Grid4::periodic_box(n).unwrap();
        let alpha = smooth_connection(grid, 2, 0.25, 63);
        let k = smooth_unitary_field(grid, 2, 0.25, 64);
        let f = curvature(&alpha).unwrap();
        let f2 = curvature(&gauge_transform(&alpha, &k).unwrap()).unwrap();
        let mut e: f64 = 0.0;
        for node in 0..grid.len() {
            let kx = &k.data[node];
            for &(a, b) in &PAIRS {
                let want = kx * f.get(node, a, b) * kx.adjoint();
                e = e.max((f2.get(node, a, b) - want).norm());
            }
        }
        let s1 = invariant_scalar(&f);
        let s2 = invariant_scalar(&f2);
        drift.push(s1.iter().zip(&s2).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max));
        errs.push(e);
        hs.push(grid.h);
    }
    let s = slope(&hs, &errs);
    assert!((s - 2.0).abs() < 0.3, "slope {s}, errs {errs:?}");
    let s = slope(&hs, &drift);
    assert!((s - 2.0).abs() < 0.3, "slope {s}, drift {drift:?}");
}

#[test]
fn invariant_is_exact_under_constant_transform() {
    let grid = Grid4::periodic_box(6).unwrap();
    let alpha = smooth_connection(grid, 2, 0.5, 65);
    let mut s = Sampler::new(66);
    let k = random_anti_hermitian::<f64>(&mut s, 2).exp();
    let kf = GaugeTransformField::constant(grid, k, 1e-12).unwrap();
    let s1 = invariant_scalar(&curvature(&alpha).unwrap());
    let s2 = invariant_scalar(&curvature(&gauge_transform(&alpha, &kf).unwrap()).unwrap());
    for (x, y) in s1.iter().zip(&s2) {
        assert!((x - y).abs() < 1e-12);
    }
}

#[test]
fn barwedge_paths_agree() {
    let mut s = Sampler::new(67);
    for basis in [LieBasis::<f64>::su2(), LieBasis::<f64>::u1()] {
        let c = basis.structure_constants();
        let n = basis.len();
        for _ in 0..50 {
            let ac: [Vec<f64>; 4] = std::array::from_fn(|_| (0..n).map(|_| s.normal()).collect());
            let bc: [Vec<f64>; 4] = std::array::from_fn(|_| (0..n).map(|_| s.normal()).collect());
            let am: [DMatrix<Cx<f64>>; 4] = std::array::from_fn(|a| basis.combine(&ac[a]));
            let bm: [DMatrix<Cx<f64>>; 4] = std::array::from_fn(|a| basis.combine(&bc[a]));
            let w1 = barwedge(&am, &bm).unwrap();
            let w2 = barwedge_structure(&c, &ac, &bc).unwrap();
            for a in 0..4 {
                for b in 0..4 {
                    assert!((&w1[a][b] - basis.combine(&w2[a][b])).norm() < 1e-13);
                }
            }
            let ww = barwedge(&am, &am).unwrap();
            for a in 0..4 {
                for b in 0..4 {
                    assert!((&ww[a][b] + &ww[b][a]).norm() < 1e-13);
                }
            }
        }
    }
    let u1 = LieBasis::<f64>::u1();
    let a: [DMatrix<Cx<f64>>; 4] = std::array::from_fn(|i| u1.combine(&[i as f64]));
    let w = barwedge(&a, &a).unwrap();
    assert!(w.iter().flatten().all(|m| m.norm() == 0.0));
    let two = DMatrix::<Cx<f64>>::zeros(2, 2);
    let mixed: [DMatrix<Cx<f64>>; 4] = [two.clone(), two.clone(), two.clone(), two];
    assert!(barwedge(&a, &mixed).is_err());
}

fn random_class(s: &mut Sampler, basis: &LieBasis<f64>) -> RadiativeGaugeClass<f64> {
    let kappa = s.two_spinor::<f64>();
    let k = NullCovector::from_spinor(&kappa).unwrap();
    let n = basis.len();
    let spatial: [DMatrix<Cx<f64>>; 3] =
        std::array::from_fn(|_| basis.combine(&(0..n).map(|_| s.normal()).collect::<Vec<_>>()));
    RadiativeGaugeClass::with_spatial(k, spatial).unwrap()
}

#[test]
fn abelian_rho_is_a_class_function() {
    let mut s = Sampler::new(68);
    let u1 = LieBasis::<f64>::u1();
    for _ in 0..200 {
        let c = random_class(&mut s, &u1);
        let chi = u1.combine(&[s.normal()]);
        let c2 = c.shifted(&chi);
        assert!(rho_discrepancy(&c, &c2) < 1e-13);
        assert!(class_equivalent(&c, &c2).unwrap());
    }
    let zero = RadiativeGaugeClass::new(
        NullCovector::from_momentum([0.0, 0.0, 1.0]).unwrap(),
        std::array::from_fn(|_| DMatrix::zeros(1, 1)),
    )
    .unwrap();
    assert!(rho(&zero).iter().flatten().all(|m| m.norm() == 0.0));
}

#[test]
fn non_abelian_rho_discrepancy_is_measured() {
    let mut s = Sampler::new(69);
    let su2 = LieBasis::<f64>::su2();
    let c = random_class(&mut s, &su2);
    let chi = su2.combine(&[s.normal(), s.normal(), s.normal()]);
    let d = rho_discrepancy(&c, &c.shifted(&chi));
    assert!(d.is_finite());
}

#[test]
fn class_equivalence_cases() {
    let mut s = Sampler::new(70);
    let su2 = LieBasis::<f64>::su2();
    let c = random_class(&mut s, &su2);
    assert!(class_equivalent(&c, &c).unwrap());
    // Transverse perturbation: shift the two spatial components orthogonal to k.
    let kc = c.k.k.real_pauli_components();
    let t = [0.0, -kc[2], kc[1], 0.0];
    let xi = su2.combine(&[1.0, 0.0, 0.0]);
    let mut alpha = c.alpha.clone();
    for a in 0..4 {
        alpha[a] += &xi * cr(t[a] * [1.0, -1.0, -1.0, -1.0][a]);
    }
    let c2 = RadiativeGaugeClass::new(c.k, alpha).unwrap();
    assert!(class_residual(&c, &c2).unwrap() > 1e-3);
    assert!(!class_equivalent(&c, &c2).unwrap());
    let other = random_class(&mut s, &su2);
    assert!(class_equivalent(&c, &other).is_err());
}

#[test]
fn horizontality_is_enforced() {
    let k = NullCovector::from_momentum([0.0, 0.0, 1.0]).unwrap();
    let su2 = LieBasis::<f64>::su2();
    let mut alpha: [DMatrix<Cx<f64>>; 4] = std::array::from_fn(|_| DMatrix::zeros(2, 2));
    alpha[0] = su2.elements[0].clone();
    assert!(RadiativeGaugeClass::new(k, alpha).is_err());
}

#[test]
fn dilaton_and_em_parts() {
    let mut hs = vec![];
    let mut fem = vec![];
    let mut dgs = vec![];
    for n in [8, 12, 16] {
        let grid = Grid4::periodic_box(n).unwrap();
        let pure = SpinorConnectionGrid::from_fn(grid, |x, a| Matrix2::identity() * Cx::new(0.0, grad_f(x, a)));
        let d = decompose_internal_dilaton_em(&pure).unwrap();
        assert!(d.g.iter().all(|&g| g == 0.0));
        for node in [0, 7] {
            let x = grid.coords(node);
            for a in 0..4 {
                assert!((d.y[4 * node + a] - grad_f(x, a)).abs() < 1e-14);
            }
        }
        fem.push(d.f_em.iter().fold(0.0f64, |m, v| m.max(v.abs())));
        let exact = SpinorConnectionGrid::from_fn(grid, |x, a| Matrix2::identity() * Cx::new(grad_f(x, a), 0.3));
        dgs.push(decompose_internal_dilaton_em(&exact).unwrap().dg_residual);
        hs.push(grid.h);
    }
    assert!((slope(&hs, &fem) - 2.0).abs() < 0.3);
    assert!((slope(&hs, &dgs) - 2.0).abs() < 0.3);

    let grid = Grid4::<f64>::periodic_box(3).unwrap();
    let mut s = Sampler::new(71);
    let g = SpinorConnectionGrid::from_fn(grid, |_, _| s.matrix2());
    let d = decompose_internal_dilaton_em(&g).unwrap();
    let back = d.recompose(grid);
    for (x, y) in g.gamma.iter().zip(&back.gamma) {
        assert!((x - y).norm() < 1e-14);
    }
}
