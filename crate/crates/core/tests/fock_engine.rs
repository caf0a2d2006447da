use std::collections::HashMap;

use twospinor::dirac_split::{dirac_frame_at, OnShellMomentum};
use twospinor::fock::*;
use twospinor::photon::{massive_vector_polarizations, polarization_frame, NullCovector};
use twospinor::sample::Sampler;
use twospinor::spinor::pauli_basis;
use twospinor::vertex::vertex_two_spinor;
use twospinor::Cx;

type C = Cx<f64>;

fn lattice(spacing: f64, half: f64) -> MomentumLattice<f64> {
    MomentumLattice::new(spacing, half).unwrap()
}

fn small_model(e: f64, n_max: usize) -> QedModel<f64> {
    QedModel::new(lattice(1.0, 1.0), 1.0, 0.0, e, 1.0, n_max).unwrap()
}

// ---------------------------------------------------------------- lattice

#[test]
fn leray_weights() {
    let l = lattice(1.0, 2.0);
    assert_eq!(leray_weight(&l, 1.0, l.origin()), 0.5);
    for i in 0..l.len() {
        assert!(leray_weight(&l, 1.0, i) > 0.0);
        assert!(leray_weight(&l, 0.0, i).is_finite() || i == l.origin());
    }
    let half = lattice(0.5, 2.0);
    let site = half.index([2, 0, 0]).unwrap();
    let coarse = l.index([1, 0, 0]).unwrap();
    assert!((leray_weight(&half, 1.0, site) - leray_weight(&l, 1.0, coarse) / 8.0).abs() < 1e-16);
}

#[test]
fn generalized_contraction() {
    let l = lattice(0.5, 1.0);
    let (p, q) = (3, 17);
    let b = LatticeDensity::delta(l.clone(), 2, p, 1);
    let dual = LatticeDensity::dual_delta(l.clone(), 2, p, 1);
    assert!((generalized_contract(&dual, &b).unwrap() - C::new(1.0, 0.0)).norm() < 1e-15);
    let other = LatticeDensity::delta(l.clone(), 2, q, 1);
    assert_eq!(generalized_contract(&dual, &other).unwrap(), C::new(0.0, 0.0));
    let w = l.weight();
    assert!((generalized_contract(&b, &b).unwrap().re - 1.0 / w).abs() < 1e-12);

    // Parseval: f = a B_p + b B_q.
    let (a1, a2) = (C::new(0.3, -1.1), C::new(2.0, 0.5));
    let mut f = LatticeDensity::zeros(l.clone(), 2);
    f.values[2 * p + 1] = a1 / w;
    f.values[2 * q] = a2 / w;
    let want = (a1.norm_sqr() + a2.norm_sqr()) / w;
    assert!((generalized_contract(&f, &f).unwrap().re - want).abs() < 1e-12);

    let other_lattice = LatticeDensity::zeros(lattice(1.0, 1.0), 2);
    assert!(generalized_contract(&f, &other_lattice).is_err());
    let other_dim = LatticeDensity::zeros(l, 3);
    assert!(generalized_contract(&f, &other_dim).is_err());
}

// ---------------------------------------------------------------- kernel

#[test]
fn kernel_support_and_magnitude() {
    let l = lattice(0.5, 1.0);
    let m = [1.0, 0.0, 1.0];
    let up = build_kernel(l.clone(), m.iter().map(|&x| Leg::upper(x)).collect(), 1.3, 0.7);
    let a = l.index([1, 0, 0]).unwrap();
    let b = l.index([0, 1, 0]).unwrap();
    let c = l.index([-1, -1, 0]).unwrap();
    let d = l.index([-1, 0, 1]).unwrap();
    assert_eq!(up.entry(&[a, b, d]), C::new(0.0, 0.0));
    let e = up.entry(&[a, b, c]);
    let p0 = |n: usize, mass: f64| {
        let p = l.momentum(n);
        (mass * mass + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt()
    };
    let mag = 1.3f64.powi(6) / (8.0 * p0(a, 1.0) * p0(b, 0.0) * p0(c, 1.0)).sqrt() / l.weight();
    assert!((e.norm() - mag).abs() < 1e-12 * mag);
    let phase = -(p0(a, 1.0) + p0(b, 0.0) + p0(c, 1.0)) * 0.7;
    assert!((e - C::new(0.0, phase).exp() * mag).norm() < 1e-12 * mag);

    // One lowered leg: support −p′ + p″ + p‴ = 0, phase sign flipped on that leg.
    let low = build_kernel(l.clone(), vec![Leg::lower(1.0), Leg::upper(0.0), Leg::upper(1.0)], 1.0, 0.4);
    let sum = l.index([1, 1, -1]).unwrap();
    let x = l.index([0, 1, 0]).unwrap();
    let y = l.index([1, 0, -1]).unwrap();
    assert_eq!(low.entry(&[a, b, c]), C::new(0.0, 0.0));
    let v = low.entry(&[sum, x, y]);
    let phase = -(-p0(sum, 1.0) + p0(x, 0.0) + p0(y, 1.0)) * 0.4;
    assert!((v.arg() - phase.sin().atan2(phase.cos())).abs() < 1e-12);
}

// ---------------------------------------------------------------- ladder oracle

// First-quantized states: map from ordered mode tuples to amplitudes.
type Tensor = HashMap<Vec<u32>, C>;

fn t_create(psi: &Tensor, m: u32, fermi: bool) -> Tensor {
    let mut out = Tensor::new();
    for (idx, a) in psi {
        let n = idx.len();
        let f = 1.0 / ((n + 1) as f64).sqrt();
        // (a†ψ)(i₀…iₙ) = (n+1)^{-1/2} Σ_j (±1)^j δ(m, i_j) ψ(…î_j…)
        for j in 0..=n {
            let mut v = idx.clone();
            v.insert(j, m);
            let s = if fermi && j % 2 == 1 { -1.0 } else { 1.0 };
            *out.entry(v).or_insert(C::new(0.0, 0.0)) += a * (s * f);
        }
    }
    // Symmetrize the result: each permutation slot received one term; the
    // map above already sums over insertion positions, so entries are complete.
    out.retain(|_, a| a.norm() > 0.0);
    out
}

fn t_annihilate(psi: &Tensor, m: u32) -> Tensor {
    let mut out = Tensor::new();
    for (idx, a) in psi {
        if idx.first() == Some(&m) {
            let n = idx.len() as f64;
            *out.entry(idx[1..].to_vec()).or_insert(C::new(0.0, 0.0)) += a * n.sqrt();
        }
    }
    out.retain(|_, a| a.norm() > 0.0);
    out
}

fn t_vacuum() -> Tensor {
    let mut t = Tensor::new();
    t.insert(vec![], C::new(1.0, 0.0));
    t
}

fn t_of_config(c: &FockConfig, fermi: bool) -> Tensor {
    let mut t = t_vacuum();
    let mut norm = 1.0;
    for &(m, n) in c.0.iter().rev() {
        for k in 1..=n {
            t = t_create(&t, m, fermi);
            norm *= k as f64;
        }
    }
    t.values_mut().for_each(|a| *a /= norm.sqrt());
    t
}

fn t_of_state(s: &FockState<f64>, fermi: bool) -> Tensor {
    let mut out = Tensor::new();
    for (c, a) in &s.amplitudes {
        for (k, v) in t_of_config(c, fermi) {
            *out.entry(k).or_insert(C::new(0.0, 0.0)) += v * a;
        }
    }
    out.retain(|_, a| a.norm() > 1e-15);
    out
}

fn t_distance(a: &Tensor, b: &Tensor) -> f64 {
    let mut d: f64 = 0.0;
    for (k, v) in a {
        d = d.max((v - b.get(k).copied().unwrap_or_default()).norm());
    }
    for (k, v) in b {
        d = d.max((v - a.get(k).copied().unwrap_or_default()).norm());
    }
    d
}

fn ladder_oracle(fermi: bool) {
    let stats = move |_: ModeIndex| fermi;
    let modes = 3u32;
    let mut ops = Vec::new();
    for m in 0..modes {
        ops.push(Ladder::Create(m));
        ops.push(Ladder::Annihilate(m));
    }
    // Every string of up to three operators (plus a leading state of up to
    // two particles) keeps the particle number at most three.
    let mut starts = vec![FockConfig::vacuum()];
    for a in 0..modes {
        starts.push(FockConfig::from_modes(&[a], &stats).unwrap());
        for b in 0..modes {
            if let Some(c) = FockConfig::from_modes(&[a, b], &stats) {
                starts.push(c);
            }
        }
    }
    let mut checked = 0;
    for start in &starts {
        let mut strings: Vec<Vec<Ladder>> = vec![vec![]];
        for _ in 0..(3 - start.particles().min(2)).min(3) {
            let next: Vec<Vec<Ladder>> =
                strings.iter().flat_map(|s| ops.iter().map(move |&o| [s.clone(), vec![o]].concat())).collect();
            strings.extend(next);
        }
        for s in strings {
            let mut engine = FockState::<f64>::basis(start.clone());
            let mut oracle = t_of_config(start, fermi);
            let mut too_many = false;
            for &op in s.iter().rev() {
                engine = engine.apply(op, &stats).prune();
                oracle = match op {
                    Ladder::Create(m) => t_create(&oracle, m, fermi),
                    Ladder::Annihilate(m) => t_annihilate(&oracle, m),
                };
                too_many |= engine.amplitudes.keys().any(|c| c.particles() > 3);
            }
            if too_many {
                continue;
            }
            let d = t_distance(&t_of_state(&engine, fermi), &oracle);
            assert!(d < 1e-14, "{start:?} {s:?}: {d}");
            checked += 1;
        }
    }
    assert!(checked > 500);
}

#[test]
fn fermionic_ladder_matches_antisymmetric_tensors() {
    ladder_oracle(true);
    let f = |_: ModeIndex| true;
    let one = FockConfig::from_modes(&[1], &f).unwrap();
    assert!(one.create(1, &f).is_none());
    assert!(FockConfig::from_modes(&[2, 2], &f).is_none());
}

#[test]
fn bosonic_ladder_matches_symmetric_tensors() {
    ladder_oracle(false);
}

#[test]
fn state_inner_product_and_norm() {
    let b = |_: ModeIndex| false;
    let mut s = FockState::<f64>::vacuum();
    s = s.apply(Ladder::Create(0), &b).apply(Ladder::Create(0), &b);
    assert!((s.norm_sqr() - 2.0).abs() < 1e-15);
    assert!((s.inner(&s).re - 2.0).abs() < 1e-15);
}

// ---------------------------------------------------------------- hamiltonian

#[test]
fn vacuum_without_conserving_triples_is_annihilated() {
    let model = QedModel::new(lattice(1.0, 0.5), 1.0, 0.0, 1.0, 1.0, 4).unwrap();
    assert_eq!(model.lattice().len(), 1);
    assert!(model.transitions(&FockConfig::vacuum()).is_empty());
    // A larger lattice does create pairs from the vacuum, all momentum-conserving.
    let model = small_model(1.0, 4);
    let ts = model.transitions(&FockConfig::vacuum());
    assert!(!ts.is_empty());
    assert!(ts.iter().all(|t| t.target.particles() == 3));
}

fn total_momentum(model: &QedModel<f64>, c: &FockConfig) -> [i32; 3] {
    let mut p = [0; 3];
    for &(m, n) in &c.0 {
        let s = model.lattice().site(model.table.decode(m).node);
        for i in 0..3 {
            p[i] += s[i] * n as i32;
        }
    }
    p
}

fn charge(model: &QedModel<f64>, c: &FockConfig) -> i32 {
    c.0.iter()
        .map(|&(m, n)| match model.table.decode(m).species {
            SpeciesKind::Electron => -(n as i32),
            SpeciesKind::Positron => n as i32,
            SpeciesKind::Vector => 0,
        })
        .sum()
}

#[test]
fn single_electron_emission_matches_hand_sum() {
    let model = small_model(0.7, 3);
    let lat = model.lattice().clone();
    let w = lat.weight();
    let e0 = model.table.mode_at(SpeciesKind::Electron, [0, 0, 0], 0).unwrap();
    let src = FockConfig::from_modes(&[e0], &model.table).unwrap();
    let map = model.transition_map(&src);
    let observer = pauli_basis::<f64>()[0];
    let mut checked = 0;
    for k in [[1, 0, 0], [0, 1, 1], [-1, 1, 0]] {
        let kn = lat.index(k).unwrap();
        let qn = lat.negate(kn);
        let kp = lat.momentum(kn);
        let q = OnShellMomentum::new(1.0, lat.momentum(qn)).unwrap();
        let rest = dirac_frame_at(&OnShellMomentum::at_rest(1.0).unwrap()).unwrap();
        let fq = dirac_frame_at(&q).unwrap();
        let pol = polarization_frame(&NullCovector::from_momentum(kp).unwrap(), &observer).unwrap().transverse();
        let k0 = (kp[0] * kp[0] + kp[1] * kp[1] + kp[2] * kp[2]).sqrt();
        for s_out in 0..2 {
            for lam in 0..2 {
                let target = FockConfig::from_modes(
                    &[
                        model.table.mode(SpeciesKind::Electron, qn, s_out).unwrap(),
                        model.table.mode(SpeciesKind::Vector, kn, lam).unwrap(),
                    ],
                    &model.table,
                )
                .unwrap();
                let (got, omega) = map[&target];
                // ℓ = −e √2 g(Ā, u'⊗ū + …), Λ = (8 m p₀ k₀)^{-1/2}/w, measure w^{3/2}.
                let ell = -vertex_two_spinor(&fq.u[s_out], &pol[lam].conj(), &rest.u[0]) * 0.7;
                let want = ell * (w * w.sqrt() / w / (8.0 * 1.0 * q.p0() * k0).sqrt());
                assert!((got - want).norm() < 1e-14, "{got} vs {want}");
                assert!((omega - (q.p0() + k0 - 1.0)).abs() < 1e-14);
                assert!(want.norm() > 1e-3);
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 12);
}

#[test]
fn bosonic_enhancement_for_double_occupancy() {
    let model = small_model(1.0, 4);
    let lat = model.lattice();
    let e = |s: [i32; 3]| model.table.mode_at(SpeciesKind::Electron, s, 0).unwrap();
    let g = model.table.mode_at(SpeciesKind::Vector, [1, 0, 0], 1).unwrap();
    let single = FockConfig::from_modes(&[e([1, 0, 0])], &model.table).unwrap();
    let with_photon = FockConfig::from_modes(&[e([1, 0, 0]), g], &model.table).unwrap();
    let t1 = FockConfig::from_modes(&[e([0, 0, 0]), g], &model.table).unwrap();
    let t2 = FockConfig::from_modes(&[e([0, 0, 0]), g, g], &model.table).unwrap();
    let a = model.transition_map(&single)[&t1].0;
    let b = model.transition_map(&with_photon)[&t2].0;
    assert!((b - a * 2f64.sqrt()).norm() < 1e-14 * a.norm());
    assert!(lat.len() == 27);
}

#[test]
fn transitions_conserve_momentum_and_charge() {
    let model = small_model(1.0, 5);
    let mut s = Sampler::new(31);
    let n = model.table.len() as u32;
    for _ in 0..20 {
        let k = 1 + (s.uniform::<f64>(0.0, 3.0) as usize);
        let modes: Vec<ModeIndex> = (0..k)
            .map(|_| s.uniform::<f64>(0.0, n as f64) as u32)
            .filter(|&m| model.table.decode(m).node != model.lattice().origin() || model.table.decode(m).species != SpeciesKind::Vector)
            .collect();
        let Some(c) = FockConfig::from_modes(&modes, &model.table) else { continue };
        let p = total_momentum(&model, &c);
        let q = charge(&model, &c);
        for t in model.transitions(&c) {
            assert_eq!(total_momentum(&model, &t.target), p);
            assert_eq!(charge(&model, &t.target), q);
            let de = model.energy(&t.target) - model.energy(&c);
            assert!((t.omega - de).abs() < 1e-12);
        }
    }
}

fn electron_basis(model: &QedModel<f64>) -> AssembledHamiltonian<f64> {
    let e0 = model.table.mode_at(SpeciesKind::Electron, [0, 0, 0], 0).unwrap();
    let seed = FockConfig::from_modes(&[e0], &model.table).unwrap();
    let basis = build_basis(model, &[seed], None, 20_000).unwrap();
    assemble_hamiltonian(model, basis)
}

#[test]
fn raw_assembly_is_hermitian() {
    let model = small_model(0.5, 2);
    let h = electron_basis(&model);
    assert!(h.basis.len() > 100);
    assert!(h.raw_asymmetry < 1e-14, "{}", h.raw_asymmetry);
    assert!(h.op.asymmetry() < 1e-15);
    assert!(h.leaks_above_n_max > 0);
}

#[test]
fn basis_size_limit_is_reported() {
    let model = small_model(0.5, 3);
    let e0 = model.table.mode_at(SpeciesKind::Electron, [0, 0, 0], 0).unwrap();
    let seed = FockConfig::from_modes(&[e0], &model.table).unwrap();
    assert!(build_basis(&model, &[seed], None, 10).is_err());
}

// ---------------------------------------------------------------- evolution

struct ScalarField<F: Fn(f64) -> f64> {
    dim: usize,
    a: F,
}

impl<F: Fn(f64) -> f64> TimeDependentOperator<f64> for ScalarField<F> {
    fn dim(&self) -> usize {
        self.dim
    }
    fn apply(&self, t: f64, x: &[C], out: &mut [C]) {
        for (o, v) in out.iter_mut().zip(x) {
            *o = v * (self.a)(t);
        }
    }
}

#[test]
fn evolution_of_trivial_generators() {
    let zero = SparseTimeOperator::<f64> { energies: vec![0.3, 1.0, 2.0], entries: vec![] };
    let u = evolve(&zero, -1.0, 2.0, 7).unwrap();
    assert_eq!(u.matrix, nalgebra::DMatrix::identity(3, 3));
    assert_eq!(dyson_second_order(&zero, -1.0, 2.0).matrix, nalgebra::DMatrix::identity(3, 3));

    let omega = 1.7;
    let diag = SparseTimeOperator { energies: vec![0.0; 2], entries: vec![(0, 0, C::new(omega, 0.0)), (1, 1, C::new(omega, 0.0))] };
    let u = evolve(&diag, 0.0, 2.0, 400).unwrap();
    let want = C::new(0.0, -omega * 2.0).exp();
    assert!((u.matrix[(0, 0)] - want).norm() < 1e-9);
    assert!(u.matrix[(0, 1)].norm() == 0.0);

    // 𝔥(t) = (0.3 + cos t)·𝟙 → U = exp(−i(0.3 T + sin t₁ − sin t₀)).
    let h = ScalarField { dim: 2, a: |t: f64| 0.3 + t.cos() };
    let u = evolve(&h, -0.5, 2.5, 600).unwrap();
    let phase = 0.3 * 3.0 + 2.5f64.sin() - (-0.5f64).sin();
    assert!((u.matrix[(1, 1)] - C::new(0.0, -phase).exp()).norm() < 1e-10);
    assert!(evolve(&h, 0.0, 1.0, 0).is_err());
}

#[test]
fn dyson_matches_taylor_for_constant_generator() {
    let h = SparseTimeOperator {
        energies: vec![0.0; 2],
        entries: vec![(0, 0, C::new(0.4, 0.0)), (0, 1, C::new(0.1, -0.2)), (1, 0, C::new(0.1, 0.2)), (1, 1, C::new(-0.3, 0.0))],
    };
    let m = nalgebra::Matrix2::new(C::new(0.4, 0.0), C::new(0.1, -0.2), C::new(0.1, 0.2), C::new(-0.3, 0.0));
    let t = 1.3;
    let i = C::new(0.0, 1.0);
    let want = nalgebra::Matrix2::identity() - m * (i * t) - m * m * C::new(t * t / 2.0, 0.0);
    let got = dyson_second_order(&h, 0.5, 0.5 + t).matrix;
    for r in 0..2 {
        for c in 0..2 {
            assert!((got[(r, c)] - want[(r, c)]).norm() < 1e-14);
        }
    }
}

#[test]
fn rk4_is_fourth_order() {
    let model = small_model(0.6, 2);
    let h = electron_basis(&model).op;
    let u = |n| evolve(&h, 0.0, 2.0, n).unwrap().matrix;
    let (a, b, c) = (u(10), u(20), u(40));
    let ratio = (&a - &b).norm() / (&b - &c).norm();
    assert!((ratio - 16.0).abs() < 3.2, "ratio {ratio}");
    assert!(evolve(&h, 0.0, 2.0, 40).unwrap().unitarity_residual() < 1e-6);
}

#[test]
fn dyson_deviation_is_third_order_in_coupling() {
    let mut gs = vec![];
    let mut ds = vec![];
    for g in [0.1, 0.2, 0.4] {
        let model = small_model(g, 2);
        let h = electron_basis(&model).op;
        let u = evolve(&h, 0.0, 2.0, 400).unwrap().matrix;
        let d = dyson_second_order(&h, 0.0, 2.0).matrix;
        gs.push(g);
        ds.push((u - d).norm());
    }
    let s = log_log_slope(&gs, &ds);
    assert!((s - 3.0).abs() < 0.3, "slope {s}, {ds:?}");
}

#[test]
fn sink_accumulates_first_order_loss() {
    let model = small_model(0.02, 2);
    let h = electron_basis(&model);
    let aug = h.with_sink();
    let n = h.basis.len();
    let mut psi0 = vec![C::new(0.0, 0.0); aug.dim()];
    psi0[0] = C::new(1.0, 0.0);
    let psi = evolve_state(&aug, &psi0, 0.0, 2.0, 100).unwrap();
    let sink: f64 = psi[n..].iter().map(|z| z.norm_sqr()).sum();
    // First-order oracle from the transition map of the seed.
    let mut want = 0.0;
    for (target, (c, w)) in model.transition_map(&h.basis.configs[0]) {
        if !h.basis.index.contains_key(&target) {
            want += (c * time_integral(w, 0.0, 2.0)).norm_sqr();
        }
    }
    assert!(want > 0.0);
    assert!((sink - want).abs() < 1e-2 * want, "{sink} vs {want}");
}

// ---------------------------------------------------------------- scattering

fn vector_decay(p: [i32; 3], t: f64) -> (C, C, f64) {
    let m = 1.0;
    let lat = lattice(1.0, 1.0);
    let q = OnShellMomentum::new(m, lat.momentum(lat.index(p).unwrap())).unwrap();
    // Tuned so that V(0) → e⁻(x̂) e⁺(−x̂) is on shell.
    let mass_v = 2.0 * 2f64.sqrt();
    let e = 0.3;
    let model = QedModel::new(lat.clone(), m, mass_v, e, 1.0, 3).unwrap();
    let v = model.table.mode_at(SpeciesKind::Vector, [0, 0, 0], 2).unwrap();
    let el = model.table.mode_at(SpeciesKind::Electron, p, 1).unwrap();
    let po = model.table.mode_at(SpeciesKind::Positron, p.map(|c| -c), 0).unwrap();
    let input = FockConfig::from_modes(&[v], &model.table).unwrap();
    let output = FockConfig::from_modes(&[el, po], &model.table).unwrap();
    let problem = ScatteringProblem::new(&model, &input, &output).unwrap();
    let got = problem.amplitude(t).first_order;

    // Oracle: −i c ∫_{−T/2}^{T/2} e^{iΔE t} dt with c from the vertex and kernel formulas.
    let rest = OnShellMomentum::at_rest(mass_v).unwrap();
    let pol = massive_vector_polarizations(&rest).unwrap()[2];
    let qm = OnShellMomentum::new(m, q.p.map(|c| -c)).unwrap();
    let u = dirac_frame_at(&q).unwrap().u[1];
    let vbar = dirac_frame_at(&qm).unwrap().v[0];
    let ell = -vertex_two_spinor(&u, &pol, &vbar) * e;
    let w = lat.weight();
    let c = ell * (w.sqrt() / (8.0 * mass_v * q.p0() * qm.p0()).sqrt());
    let de = q.p0() + qm.p0() - mass_v;
    let integral = if de == 0.0 { t } else { 2.0 * (de * t / 2.0).sin() / de };
    let want = C::new(0.0, -1.0) * c * integral;
    (got, want, de)
}

#[test]
fn resonant_first_order_amplitude_matches_closed_form() {
    let mut prev = 0.0;
    for t in [2.0, 4.0, 8.0, 16.0] {
        let (got, want, de) = vector_decay([1, 0, 0], t);
        assert_eq!(de, 0.0);
        assert!((got - want).norm() < 1e-8, "{got} vs {want}");
        assert!(got.norm() > prev);
        if prev > 0.0 {
            assert!((got.norm() / prev - 2.0).abs() < 1e-10);
        }
        prev = got.norm();
    }
}

#[test]
fn energy_violating_amplitude_is_bounded() {
    let mut mags = vec![];
    for t in [2.0, 4.0, 8.0, 16.0, 32.0, 64.0] {
        let (got, want, de) = vector_decay([1, 1, 0], t);
        assert!(de.abs() > 0.1);
        assert!((got - want).norm() < 1e-8, "{got} vs {want}");
        mags.push(got.norm());
    }
    let (_, c1, de) = vector_decay([1, 1, 0], 1.0);
    let bound = c1.norm() * 2.0 / de.abs() * 1.0000001;
    assert!(mags.iter().all(|&m| m <= bound));
}

#[test]
fn zero_coupling_scatters_trivially() {
    let mut s = Scenario::demo();
    s.coupling = 0.0;
    s.out_state = s.in_state.clone();
    let r = run_scenario(&s).unwrap();
    for a in &r.sweep {
        assert_eq!(a.amplitude, C::new(1.0, 0.0));
        assert_eq!(a.dropped_mass, 0.0);
    }
    s.out_state[0].internal = 1;
    let r = run_scenario(&s).unwrap();
    assert!(r.sweep.iter().all(|a| a.amplitude == C::new(0.0, 0.0)));
}

#[test]
fn demo_scenario_report() {
    let s = Scenario::demo();
    let r = run_scenario(&s).unwrap();
    assert!(r.resonant);
    assert!(r.truncation.dropped_mass < 1e-6, "{}", r.truncation.dropped_mass);
    assert!(r.truncation.dropped_states > 0);
    assert!(r.hermiticity_residual < 1e-15);
    assert!(r.window_slope.unwrap() > 0.5);
    let json = serde_json::to_string(&s).unwrap();
    assert_eq!(Scenario::from_json(&json).unwrap(), s);
}

#[test]
fn invalid_scenarios_are_rejected() {
    let mut s = Scenario::demo();
    s.in_state[0].momentum = [5, 0, 0];
    assert!(run_scenario(&s).is_err());
    let mut s = Scenario::demo();
    s.in_state.push(s.in_state[0].clone());
    assert!(run_scenario(&s).is_err());
    let mut s = Scenario::demo();
    s.windows.clear();
    assert!(run_scenario(&s).is_err());
    let mut s = Scenario::demo();
    s.n_max = 1;
    assert!(run_scenario(&s).is_err());
    assert!(Scenario::from_json("{\"name\": 1}").is_err());
}
