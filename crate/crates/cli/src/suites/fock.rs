use std::collections::HashMap;

use serde_json::json;
use twospinor::dirac_split::{dirac_frame_at, OnShellMomentum};
use twospinor::fock::*;
use twospinor::photon::massive_vector_polarizations;
use twospinor::sample::Sampler;
use twospinor::vertex::vertex_two_spinor;
use twospinor::Cx;

use crate::report::{env, Check, SuiteReport};

type C = Cx<f64>;

const SPACING: f64 = 1.0;
const HALF_EXTENT: f64 = 1.0;
pub const RK4_STEPS: [usize; 3] = [10, 20, 40];
pub const COUPLINGS: [f64; 3] = [0.1, 0.2, 0.4];
pub const WINDOWS: [f64; 4] = [2.0, 4.0, 8.0, 16.0];

fn lattice() -> MomentumLattice<f64> {
    MomentumLattice::new(SPACING, HALF_EXTENT).unwrap()
}

fn model(e: f64, n_max: usize) -> QedModel<f64> {
    QedModel::new(lattice(), 1.0, 0.0, e, 1.0, n_max).unwrap()
}

fn electron_hamiltonian(model: &QedModel<f64>) -> AssembledHamiltonian<f64> {
    let e0 = model.table.mode_at(SpeciesKind::Electron, [0, 0, 0], 0).unwrap();
    let seed = FockConfig::from_modes(&[e0], &model.table).unwrap();
    assemble_hamiltonian(model, build_basis(model, &[seed], None, 20_000).unwrap())
}

// Multi-particle states as ordered tuples of modes, (anti)symmetrized by hand.
type Tensor = HashMap<Vec<u32>, C>;

fn t_create(psi: &Tensor, m: u32, fermi: bool) -> Tensor {
    let mut out = Tensor::new();
    for (idx, a) in psi {
        let f = 1.0 / ((idx.len() + 1) as f64).sqrt();
        for j in 0..=idx.len() {
            let mut v = idx.clone();
            v.insert(j, m);
            let s = if fermi && j % 2 == 1 { -1.0 } else { 1.0 };
            *out.entry(v).or_default() += a * (s * f);
        }
    }
    out.retain(|_, a| a.norm() > 0.0);
    out
}

fn t_annihilate(psi: &Tensor, m: u32) -> Tensor {
    let mut out = Tensor::new();
    for (idx, a) in psi {
        if idx.first() == Some(&m) {
            *out.entry(idx[1..].to_vec()).or_default() += a * (idx.len() as f64).sqrt();
        }
    }
    out.retain(|_, a| a.norm() > 0.0);
    out
}

fn t_of_config(c: &FockConfig, fermi: bool) -> Tensor {
    let mut t = Tensor::from([(vec![], C::new(1.0, 0.0))]);
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
            *out.entry(k).or_default() += v * a;
        }
    }
    out
}

fn t_distance(a: &Tensor, b: &Tensor) -> f64 {
    let one = |x: &Tensor, y: &Tensor| {
        x.iter().map(|(k, v)| (v - y.get(k).copied().unwrap_or_default()).norm()).fold(0.0, f64::max)
    };
    one(a, b).max(one(b, a))
}

/// Worst deviation between the engine and the tensor oracle over all
/// operator strings that keep at most three particles on three modes.
pub fn ladder_discrepancy(fermi: bool) -> (f64, usize) {
    let stats = move |_: ModeIndex| fermi;
    let modes = 3u32;
    let ops: Vec<Ladder> = (0..modes).flat_map(|m| [Ladder::Create(m), Ladder::Annihilate(m)]).collect();
    let mut starts = vec![FockConfig::vacuum()];
    for a in 0..modes {
        starts.push(FockConfig::from_modes(&[a], &stats).unwrap());
        for b in 0..modes {
            starts.extend(FockConfig::from_modes(&[a, b], &stats));
        }
    }
    let mut worst: f64 = 0.0;
    let mut checked = 0;
    for start in &starts {
        let mut strings: Vec<Vec<Ladder>> = vec![vec![]];
        for _ in 0..3 - start.particles().min(2) {
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
            if !too_many {
                worst = worst.max(t_distance(&t_of_state(&engine, fermi), &oracle));
                checked += 1;
            }
        }
    }
    (worst, checked)
}

/// `V(0) → e⁻(x̂) e⁺(−x̂)` with the vector mass tuned to resonance; returns
/// the largest deviation of the first-order amplitude from `−i c T`.
pub fn resonance_discrepancy() -> f64 {
    let lat = lattice();
    let p = [1, 0, 0];
    let q = OnShellMomentum::new(1.0, lat.momentum(lat.index(p).unwrap())).unwrap();
    let qm = OnShellMomentum::new(1.0, q.p.map(|c| -c)).unwrap();
    let mass_v = q.p0() + qm.p0();
    let e = 0.3;
    let model = QedModel::new(lat.clone(), 1.0, mass_v, e, 1.0, 3).unwrap();
    let v = model.table.mode_at(SpeciesKind::Vector, [0, 0, 0], 2).unwrap();
    let el = model.table.mode_at(SpeciesKind::Electron, p, 1).unwrap();
    let po = model.table.mode_at(SpeciesKind::Positron, p.map(|c| -c), 0).unwrap();
    let input = FockConfig::from_modes(&[v], &model.table).unwrap();
    let output = FockConfig::from_modes(&[el, po], &model.table).unwrap();
    let problem = ScatteringProblem::new(&model, &input, &output).unwrap();

    let pol = massive_vector_polarizations(&OnShellMomentum::at_rest(mass_v).unwrap()).unwrap()[2];
    let u = dirac_frame_at(&q).unwrap().u[1];
    let vbar = dirac_frame_at(&qm).unwrap().v[0];
    let ell = -vertex_two_spinor(&u, &pol, &vbar) * e;
    let w = lat.weight();
    let c = ell * (w.sqrt() / (8.0 * mass_v * q.p0() * qm.p0()).sqrt());
    WINDOWS
        .iter()
        .map(|&t| (problem.amplitude(t).first_order - C::new(0.0, -t) * c).norm())
        .fold(0.0, f64::max)
}

pub fn run(seed: u64) -> SuiteReport {
    let h = electron_hamiltonian(&model(0.6, 2)).op;
    let u: Vec<_> = RK4_STEPS.iter().map(|&n| evolve(&h, 0.0, 2.0, n).unwrap().matrix).collect();
    let ratio = (&u[0] - &u[1]).norm() / (&u[1] - &u[2]).norm();
    let unitarity = evolve(&h, 0.0, 2.0, RK4_STEPS[2]).unwrap().unitarity_residual();

    let mut devs = vec![];
    let mut raw_asymmetry: f64 = 0.0;
    for g in COUPLINGS {
        let asm = electron_hamiltonian(&model(g, 2));
        raw_asymmetry = raw_asymmetry.max(asm.raw_asymmetry);
        let exact = evolve(&asm.op, 0.0, 2.0, 400).unwrap().matrix;
        devs.push((exact - dyson_second_order(&asm.op, 0.0, 2.0).matrix).norm());
    }
    let dyson_slope = log_log_slope(&COUPLINGS, &devs);

    let (fermi, n_fermi) = ladder_discrepancy(true);
    let (bose, n_bose) = ladder_discrepancy(false);

    // Random configurations: transitions conserve lattice momentum and charge.
    let m = model(1.0, 5);
    let mut s = Sampler::new(seed);
    let mut violations = 0usize;
    for _ in 0..20 {
        let k = 1 + s.uniform::<f64>(0.0, 3.0) as usize;
        let modes: Vec<ModeIndex> =
            (0..k).map(|_| s.uniform::<f64>(0.0, m.table.len() as f64) as ModeIndex).collect();
        let Some(c) = FockConfig::from_modes(&modes, &m.table) else { continue };
        let totals = |c: &FockConfig| {
            let mut p = [0i32; 4];
            for &(mode, n) in &c.0 {
                let d = m.table.decode(mode);
                let site = m.lattice().site(d.node);
                for i in 0..3 {
                    p[i] += site[i] * n as i32;
                }
                p[3] += n as i32
                    * match d.species {
                        SpeciesKind::Electron => -1,
                        SpeciesKind::Positron => 1,
                        SpeciesKind::Vector => 0,
                    };
            }
            p
        };
        let before = totals(&c);
        violations += m.transitions(&c).iter().filter(|t| totals(&t.target) != before).count();
    }

    let demo = run_scenario(&Scenario::demo()).unwrap();

    let checks = vec![
        Check::near("fock.rk4_step_ratio", "fourth-order step convergence of the evolution", 16.0, 3.2, ratio),
        Check::bound("fock.rk4_unitarity", "evolution operator unitary at the finest step", 1e-6, unitarity),
        Check::near(
            "fock.dyson_coupling_slope",
            "evolution minus second-order dyson scales as coupling^3",
            3.0,
            0.3,
            dyson_slope,
        ),
        Check::bound(
            "fock.resonant_first_order",
            "first-order resonant amplitude equals -i c T",
            1e-8,
            resonance_discrepancy(),
        ),
        Check::bound("fock.ladder_fermions", "ladder algebra vs antisymmetrized tensors", 1e-14, fermi),
        Check::bound("fock.ladder_bosons", "ladder algebra vs symmetrized tensors", 1e-14, bose),
        Check::bound("fock.raw_hermiticity", "assembled hamiltonian is hermitian before symmetrization", 1e-14, raw_asymmetry),
        Check::bound("fock.conservation", "transitions conserve momentum and charge", 0.0, violations as f64),
        Check::bound("fock.demo_dropped_mass", "truncation loss of the demo scenario", 1e-6, demo.truncation.dropped_mass),
    ];
    SuiteReport::new(
        "fock",
        env(&[
            ("seed", json!(seed)),
            ("lattice_spacing", json!(SPACING)),
            ("lattice_half_extent", json!(HALF_EXTENT)),
            ("rk4_steps", json!(RK4_STEPS)),
            ("couplings", json!(COUPLINGS)),
            ("resonance_windows", json!(WINDOWS)),
            ("ladder_strings", json!([n_fermi, n_bose])),
        ]),
        checks,
    )
}
