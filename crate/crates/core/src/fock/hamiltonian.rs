//! Assembly of the QED interaction `𝔥(t)` from `ℓ_int ⊗ Λ⁽³⁾` and ladder operators.
//!
//! Dimension bookkeeping on the lattice: every leg momentum is summed with
//! weight `w`, the kernel delta contributes `1/w`, and each ladder operator on
//! unit-normalized lattice modes carries `w^{−1/2}`. A three-leg term therefore
//! has matrix elements `w^{3/2} · Λ · ℓ_int · (ladder factor)`.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::kernel::{build_kernel, InteractionKernel, Leg};
use super::lattice::MomentumLattice;
use super::modes::{ModeTable, SpeciesKind};
use super::state::{apply_string, FockConfig, Ladder, ModeIndex};
use crate::error::{Error, Result};
use crate::scalar::{cr, Cx, Real};
use crate::vertex::{enumerate_vertices, ell_int, InSlot, OutSlot, PhotonLeg, VertexCoupling, VertexDescriptor};

/// Lattice QED with one fermion species and one vector species.
#[derive(Clone, Debug)]
pub struct QedModel<T: Real> {
    pub table: ModeTable<T>,
    pub coupling: VertexCoupling<T>,
    /// The constant length `l`.
    pub length: T,
    pub n_max: usize,
}

/// `⟨target| 𝔥(t) |source⟩ ⊇ coeff · e^{iωt}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Transition<T: Real> {
    pub target: FockConfig,
    pub coeff: Cx<T>,
    pub omega: T,
}

#[derive(Clone, Copy)]
struct LegSpec {
    species: SpeciesKind,
    emitted: bool,
}

fn legs_of(d: &VertexDescriptor) -> [LegSpec; 3] {
    let out = match d.out_slot {
        OutSlot::EmitElectron => LegSpec { species: SpeciesKind::Electron, emitted: true },
        OutSlot::AbsorbPositron => LegSpec { species: SpeciesKind::Positron, emitted: false },
    };
    let photon = LegSpec { species: SpeciesKind::Vector, emitted: d.photon == PhotonLeg::Emit };
    let inn = match d.in_slot {
        InSlot::AbsorbElectron => LegSpec { species: SpeciesKind::Electron, emitted: false },
        InSlot::EmitPositron => LegSpec { species: SpeciesKind::Positron, emitted: true },
    };
    [out, photon, inn]
}

impl<T: Real> QedModel<T> {
    pub fn new(
        lattice: MomentumLattice<T>,
        fermion_mass: T,
        vector_mass: T,
        coupling: T,
        length: T,
        n_max: usize,
    ) -> Result<Self> {
        Ok(Self {
            table: ModeTable::new(lattice, fermion_mass, vector_mass)?,
            coupling: VertexCoupling { e: coupling },
            length,
            n_max,
        })
    }

    pub fn lattice(&self) -> &MomentumLattice<T> {
        &self.table.lattice
    }

    /// Free energy `Σ p₀` of a configuration.
    pub fn energy(&self, c: &FockConfig) -> T {
        c.0.iter().map(|&(m, n)| self.table.mode_energy(m) * T::lit(f64::from(n))).fold(T::zero(), |a, b| a + b)
    }

    /// Kernel for a vertex: legs `(out, photon, in)`, emitted legs lowered.
    pub fn kernel(&self, d: &VertexDescriptor, t: T) -> InteractionKernel<T> {
        let legs = legs_of(d)
            .iter()
            .map(|l| {
                let m = self.mass(l.species);
                if l.emitted {
                    Leg::lower(m)
                } else {
                    Leg::upper(m)
                }
            })
            .collect();
        build_kernel(self.lattice().clone(), legs, self.length, t)
    }

    fn mass(&self, s: SpeciesKind) -> T {
        match s {
            SpeciesKind::Vector => self.table.vector_mass,
            _ => self.table.fermion_mass,
        }
    }

    fn species_modes(&self, s: SpeciesKind) -> Vec<ModeIndex> {
        let mut v = Vec::new();
        for node in 0..self.lattice().len() {
            for a in 0..self.table.internal_dim(s) {
                if let Some(m) = self.table.mode(s, node, a) {
                    v.push(m);
                }
            }
        }
        v
    }

    /// All terms of `𝔥` acting on `source`, including targets above `n_max`.
    pub fn transitions(&self, source: &FockConfig) -> Vec<Transition<T>> {
        let mut out = Vec::new();
        let all: [Vec<ModeIndex>; 3] = SpeciesKind::ALL.map(|s| self.species_modes(s));
        for d in enumerate_vertices() {
            self.vertex_transitions(&d, source, &all, &mut out);
        }
        out
    }

    fn vertex_transitions(
        &self,
        d: &VertexDescriptor,
        source: &FockConfig,
        all: &[Vec<ModeIndex>; 3],
        out: &mut Vec<Transition<T>>,
    ) {
        let legs = legs_of(d);
        let kernel = self.kernel(d, T::zero());
        let lat = self.lattice();
        let w = lat.weight();
        let measure = w * w.sqrt();
        let sign = T::lit(f64::from(d.normal_order_sign()));
        let last_emitted = (0..3).rev().find(|&i| legs[i].emitted);
        // Candidate modes per leg; the last emitted leg is fixed by conservation.
        let choices: Vec<Vec<ModeIndex>> = (0..3)
            .map(|i| {
                if Some(i) == last_emitted {
                    vec![0]
                } else if legs[i].emitted {
                    all[legs[i].species as usize].clone()
                } else {
                    source
                        .0
                        .iter()
                        .map(|e| e.0)
                        .filter(|&m| self.table.decode(m).species == legs[i].species)
                        .collect()
                }
            })
            .collect();
        if choices.iter().any(|c| c.is_empty()) {
            return;
        }
        let mut idx = [0usize; 3];
        loop {
            let mut modes = [0 as ModeIndex; 3];
            for i in 0..3 {
                modes[i] = choices[i][idx[i]];
            }
            self.complete(&legs, last_emitted, &mut modes, source, &kernel, measure * sign, out);
            let mut k = 0;
            loop {
                if k == 3 {
                    return;
                }
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn complete(
        &self,
        legs: &[LegSpec; 3],
        last_emitted: Option<usize>,
        modes: &mut [ModeIndex; 3],
        source: &FockConfig,
        kernel: &InteractionKernel<T>,
        scale: T,
        out: &mut Vec<Transition<T>>,
    ) {
        let lat = self.lattice();
        let Some(le) = last_emitted else {
            self.emit_term(legs, modes, source, kernel, scale, out);
            return;
        };
        let mut site = [0i32; 3];
        for i in 0..3 {
            if i == le {
                continue;
            }
            let s = lat.site(self.table.decode(modes[i]).node);
            let sg = if legs[i].emitted { -1 } else { 1 };
            for c in 0..3 {
                site[c] += sg * s[c];
            }
        }
        let Some(node) = lat.index(site) else { return };
        for a in 0..self.table.internal_dim(legs[le].species) {
            if let Some(m) = self.table.mode(legs[le].species, node, a) {
                modes[le] = m;
                self.emit_term(legs, modes, source, kernel, scale, out);
            }
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn emit_term(
        &self,
        legs: &[LegSpec; 3],
        modes: &[ModeIndex; 3],
        source: &FockConfig,
        kernel: &InteractionKernel<T>,
        scale: T,
        out: &mut Vec<Transition<T>>,
    ) {
        let mut ops = Vec::with_capacity(3);
        for i in 0..3 {
            if legs[i].emitted {
                ops.push(Ladder::Create(modes[i]));
            }
        }
        for i in 0..3 {
            if !legs[i].emitted {
                ops.push(Ladder::Annihilate(modes[i]));
            }
        }
        let dec = modes.map(|m| self.table.decode(m));
        let nodes = dec.map(|m| m.node);
        if !kernel.conserves(&nodes) {
            return;
        }
        let Some((target, ladder)) = apply_string(&ops, source, &self.table) else { return };
        let phi = self.table.dirac(dec[0].species, dec[0].node, dec[0].internal);
        let psi = self.table.dirac(dec[2].species, dec[2].node, dec[2].internal);
        let mut a = self.table.polarization(dec[1].node, dec[1].internal);
        if legs[1].emitted {
            a = a.conj();
        }
        let ell = ell_int(&self.coupling, &phi, &a, &psi);
        let coeff = kernel.entry(&nodes) * ell * cr(scale * T::lit(ladder));
        out.push(Transition { target, coeff, omega: -kernel.signed_energy(&nodes) });
    }

    /// Transitions aggregated by target.
    pub fn transition_map(&self, source: &FockConfig) -> HashMap<FockConfig, (Cx<T>, T)> {
        let mut map: HashMap<FockConfig, (Cx<T>, T)> = HashMap::new();
        for t in self.transitions(source) {
            map.entry(t.target).and_modify(|e| e.0 += t.coeff).or_insert((t.coeff, t.omega));
        }
        map
    }
}

/// `𝔥(t) = Σ c_rc e^{i(E_r − E_c)t} |r⟩⟨c|`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct SparseTimeOperator<T: Real> {
    pub energies: Vec<T>,
    pub entries: Vec<(usize, usize, Cx<T>)>,
}

impl<T: Real> SparseTimeOperator<T> {
    pub fn dim(&self) -> usize {
        self.energies.len()
    }

    /// Element `(r, c)` at time `t` (sums duplicates).
    pub fn element(&self, r: usize, c: usize, t: T) -> Cx<T> {
        let ph = (self.energies[r] - self.energies[c]) * t;
        let s: Cx<T> = self.entries.iter().filter(|e| e.0 == r && e.1 == c).map(|e| e.2).sum();
        s * Cx::new(ph.cos(), ph.sin())
    }

    /// `max |c_rc − conj(c_cr)|`.
    pub fn asymmetry(&self) -> T {
        let map = self.coefficient_map();
        map.iter()
            .map(|(&(r, c), &v)| {
                let back = map.get(&(c, r)).copied().unwrap_or_else(|| cr(T::zero()));
                (v - back.conj()).norm_sqr().sqrt()
            })
            .fold(T::zero(), |a, b| a.max(b))
    }

    fn coefficient_map(&self) -> HashMap<(usize, usize), Cx<T>> {
        let mut map: HashMap<(usize, usize), Cx<T>> = HashMap::new();
        for &(r, c, v) in &self.entries {
            *map.entry((r, c)).or_insert_with(|| cr(T::zero())) += v;
        }
        map
    }

    /// `(𝔥 + 𝔥†)/2`, entries sorted by `(row, col)`.
    pub fn symmetrized(&self) -> Self {
        let map = self.coefficient_map();
        let mut sym: HashMap<(usize, usize), Cx<T>> = HashMap::new();
        let half = cr(T::lit(0.5));
        for (&(r, c), &v) in &map {
            *sym.entry((r, c)).or_insert_with(|| cr(T::zero())) += v * half;
            *sym.entry((c, r)).or_insert_with(|| cr(T::zero())) += v.conj() * half;
        }
        let mut entries: Vec<_> = sym.into_iter().map(|((r, c), v)| (r, c, v)).collect();
        entries.sort_by_key(|e| (e.0, e.1));
        Self { energies: self.energies.clone(), entries }
    }
}

/// Truncated Fock basis.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct FockBasis {
    pub configs: Vec<FockConfig>,
    pub index: HashMap<FockConfig, usize>,
}

impl FockBasis {
    pub fn from_configs(configs: Vec<FockConfig>) -> Self {
        let index = configs.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        Self { configs, index }
    }

    pub fn len(&self) -> usize {
        self.configs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.configs.is_empty()
    }

    fn push(&mut self, c: FockConfig) -> usize {
        let i = self.configs.len();
        self.index.insert(c.clone(), i);
        self.configs.push(c);
        i
    }
}

/// Breadth-first closure of `seeds` under `𝔥`, keeping configurations with at
/// most `n_max` particles and at most `max_depth` applications from a seed.
pub fn build_basis<T: Real>(
    model: &QedModel<T>,
    seeds: &[FockConfig],
    max_depth: Option<usize>,
    max_states: usize,
) -> Result<FockBasis> {
    let mut basis = FockBasis::default();
    let mut queue = VecDeque::new();
    for s in seeds {
        if s.particles() > model.n_max {
            return Err(Error::InvalidScenario(format!("seed has {} particles, above N_max", s.particles())));
        }
        if !basis.index.contains_key(s) {
            basis.push(s.clone());
            queue.push_back((s.clone(), 0usize));
        }
    }
    while let Some((c, depth)) = queue.pop_front() {
        if max_depth.is_some_and(|d| depth >= d) {
            continue;
        }
        for t in model.transitions(&c) {
            if t.target.particles() <= model.n_max && !basis.index.contains_key(&t.target) {
                if basis.len() >= max_states {
                    return Err(Error::BasisTooLarge(max_states));
                }
                basis.push(t.target.clone());
                queue.push_back((t.target, depth + 1));
            }
        }
    }
    Ok(basis)
}

/// `𝔥` restricted to a basis, with the transitions leaving it.
#[derive(Clone, Debug)]
pub struct AssembledHamiltonian<T: Real> {
    pub basis: FockBasis,
    /// Symmetrized operator on the basis.
    pub op: SparseTimeOperator<T>,
    /// `max |c_rc − conj(c_cr)|` of the raw assembly.
    pub raw_asymmetry: T,
    /// Leaving transitions `(target id, source, coeff)`.
    pub leaks: Vec<(usize, usize, Cx<T>)>,
    /// Free energies of the leak targets.
    pub leak_energies: Vec<T>,
    /// Leak targets above `n_max`.
    pub leaks_above_n_max: usize,
}

pub fn assemble_hamiltonian<T: Real>(model: &QedModel<T>, basis: FockBasis) -> AssembledHamiltonian<T> {
    let energies: Vec<T> = basis.configs.iter().map(|c| model.energy(c)).collect();
    let mut entries = Vec::new();
    let mut leak_index: HashMap<FockConfig, usize> = HashMap::new();
    let mut leaks = Vec::new();
    let mut leak_energies = Vec::new();
    let mut above = 0;
    for (col, c) in basis.configs.iter().enumerate() {
        for t in model.transitions(c) {
            if let Some(&row) = basis.index.get(&t.target) {
                entries.push((row, col, t.coeff));
            } else {
                let n = leak_index.len();
                let id = *leak_index.entry(t.target.clone()).or_insert_with(|| {
                    leak_energies.push(model.energy(&t.target));
                    if t.target.particles() > model.n_max {
                        above += 1;
                    }
                    n
                });
                leaks.push((id, col, t.coeff));
            }
        }
    }
    let raw = SparseTimeOperator { energies, entries };
    let raw_asymmetry = raw.asymmetry();
    AssembledHamiltonian { basis, op: raw.symmetrized(), raw_asymmetry, leaks, leak_energies, leaks_above_n_max: above }
}

impl<T: Real> AssembledHamiltonian<T> {
    /// Operator on `basis ⊕ leak targets` whose leak block only receives
    /// amplitude; evolving with it accumulates the first-order loss.
    pub fn with_sink(&self) -> SparseTimeOperator<T> {
        let n = self.basis.len();
        let mut energies = self.op.energies.clone();
        energies.extend_from_slice(&self.leak_energies);
        let mut entries = self.op.entries.clone();
        entries.extend(self.leaks.iter().map(|&(id, src, c)| (n + id, src, c)));
        SparseTimeOperator { energies, entries }
    }
}
