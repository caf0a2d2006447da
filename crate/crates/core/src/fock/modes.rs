//! Particle species, global mode indexing and one-particle wavefunctions.

use serde::{Deserialize, Serialize};

use super::lattice::{MomentumLattice, Site};
use super::state::{ModeIndex, Statistics};
use crate::dirac_split::{dirac_frame_at, OnShellMomentum};
use crate::error::{Error, Result};
use crate::photon::{massive_vector_polarizations, polarization_frame, NullCovector};
use crate::scalar::Real;
use crate::spinor::{pauli_basis, ComplexHVector, DiracSpinor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpeciesKind {
    Electron,
    Positron,
    /// Photon when massless, otherwise a massive vector boson.
    Vector,
}

impl SpeciesKind {
    pub const ALL: [SpeciesKind; 3] = [SpeciesKind::Electron, SpeciesKind::Positron, SpeciesKind::Vector];

    pub fn is_fermion(self) -> bool {
        self != SpeciesKind::Vector
    }

    fn slot(self) -> usize {
        self as usize
    }
}

/// One-particle states of a lattice mode.
#[derive(Clone, Debug)]
pub enum Wave<T: Real> {
    Dirac([DiracSpinor<T>; 2]),
    Vector(Vec<ComplexHVector<T>>),
    /// Mode excluded from the lattice (massless vector at `p = 0`).
    Excluded,
}

/// Decoded global mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mode {
    pub species: SpeciesKind,
    pub node: usize,
    pub internal: usize,
}

/// Species table over a lattice with cached energies and wavefunctions.
#[derive(Clone, Debug)]
pub struct ModeTable<T: Real> {
    pub lattice: MomentumLattice<T>,
    pub fermion_mass: T,
    pub vector_mass: T,
    dims: [usize; 3],
    offsets: [usize; 3],
    energies: [Vec<T>; 3],
    waves: [Vec<Wave<T>>; 3],
}

impl<T: Real> ModeTable<T> {
    /// Photon polarizations are the transverse modes seen by the rest observer `τ₀`.
    pub fn new(lattice: MomentumLattice<T>, fermion_mass: T, vector_mass: T) -> Result<Self> {
        if fermion_mass <= T::zero() {
            return Err(Error::MasslessSplitting);
        }
        if vector_mass < T::zero() {
            return Err(Error::NegativeMass(vector_mass.to_f64_lossy()));
        }
        let n = lattice.len();
        let vdim = if vector_mass > T::zero() { 3 } else { 2 };
        let dims = [2, 2, vdim];
        let offsets = [0, 2 * n, 4 * n];
        let mut energies: [Vec<T>; 3] = Default::default();
        let mut waves: [Vec<Wave<T>>; 3] = Default::default();
        let observer = pauli_basis::<T>()[0];
        for node in 0..n {
            let p = lattice.momentum(node);
            let q = OnShellMomentum::new(fermion_mass, p)?;
            let f = dirac_frame_at(&q)?;
            energies[0].push(q.p0());
            energies[1].push(q.p0());
            waves[0].push(Wave::Dirac(f.u));
            waves[1].push(Wave::Dirac(f.v));
            let pe = (vector_mass * vector_mass + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
            energies[2].push(pe);
            let w = if vector_mass > T::zero() {
                let qv = OnShellMomentum::new(vector_mass, p)?;
                Wave::Vector(massive_vector_polarizations(&qv)?.to_vec())
            } else if node == lattice.origin() {
                Wave::Excluded
            } else {
                let k = NullCovector::from_momentum(p)?;
                Wave::Vector(polarization_frame(&k, &observer)?.transverse().to_vec())
            };
            waves[2].push(w);
        }
        Ok(Self { lattice, fermion_mass, vector_mass, dims, offsets, energies, waves })
    }

    pub fn internal_dim(&self, s: SpeciesKind) -> usize {
        self.dims[s.slot()]
    }

    pub fn len(&self) -> usize {
        self.offsets[2] + self.dims[2] * self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Global index, or `None` off the lattice or for an excluded mode.
    pub fn mode(&self, species: SpeciesKind, node: usize, internal: usize) -> Option<ModeIndex> {
        if node >= self.lattice.len() || internal >= self.internal_dim(species) {
            return None;
        }
        if matches!(self.waves[species.slot()][node], Wave::Excluded) {
            return None;
        }
        let s = species.slot();
        Some((self.offsets[s] + node * self.dims[s] + internal) as ModeIndex)
    }

    pub fn mode_at(&self, species: SpeciesKind, site: Site, internal: usize) -> Option<ModeIndex> {
        self.mode(species, self.lattice.index(site)?, internal)
    }

    pub fn decode(&self, m: ModeIndex) -> Mode {
        let m = m as usize;
        let s = if m >= self.offsets[2] {
            2
        } else if m >= self.offsets[1] {
            1
        } else {
            0
        };
        let r = m - self.offsets[s];
        Mode { species: SpeciesKind::ALL[s], node: r / self.dims[s], internal: r % self.dims[s] }
    }

    pub fn energy(&self, species: SpeciesKind, node: usize) -> T {
        self.energies[species.slot()][node]
    }

    pub fn mode_energy(&self, m: ModeIndex) -> T {
        let d = self.decode(m);
        self.energy(d.species, d.node)
    }

    pub fn dirac(&self, species: SpeciesKind, node: usize, internal: usize) -> DiracSpinor<T> {
        match &self.waves[species.slot()][node] {
            Wave::Dirac(f) => f[internal],
            _ => panic!("{species:?} has no Dirac wavefunction"),
        }
    }

    pub fn polarization(&self, node: usize, internal: usize) -> ComplexHVector<T> {
        match &self.waves[2][node] {
            Wave::Vector(v) => v[internal],
            _ => panic!("no polarization at an excluded node"),
        }
    }
}

impl<T: Real> Statistics for ModeTable<T> {
    fn is_fermion(&self, mode: ModeIndex) -> bool {
        (mode as usize) < self.offsets[2]
    }
}
