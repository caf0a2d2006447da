//! Cubic momentum lattice `ΔZ³ ∩ [−L, L]³` and lattice semi-densities.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Cx, Real};

/// Integer lattice coordinates of a momentum node.
pub type Site = [i32; 3];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct MomentumLattice<T: Real> {
    pub spacing: T,
    pub half_extent: T,
    /// Nodes per half-axis, `⌊L/Δ⌋`.
    pub n: i32,
}

impl<T: Real> MomentumLattice<T> {
    pub fn new(spacing: T, half_extent: T) -> Result<Self> {
        if spacing <= T::zero() || half_extent < T::zero() {
            return Err(Error::InvalidLattice(format!(
                "spacing {} and half-extent {} must be positive",
                spacing.to_f64_lossy(),
                half_extent.to_f64_lossy()
            )));
        }
        let n = (half_extent / spacing + T::lit(1e-9)).floor().to_f64_lossy();
        if n > 64.0 {
            return Err(Error::InvalidLattice(format!("{n} nodes per half-axis is too many")));
        }
        Ok(Self { spacing, half_extent, n: n as i32 })
    }

    /// Points per axis.
    pub fn side(&self) -> usize {
        (2 * self.n + 1) as usize
    }

    pub fn len(&self) -> usize {
        self.side().pow(3)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Quadrature weight `w = Δ³`.
    pub fn weight(&self) -> T {
        self.spacing * self.spacing * self.spacing
    }

    pub fn contains(&self, s: Site) -> bool {
        s.iter().all(|&c| c.abs() <= self.n)
    }

    pub fn index(&self, s: Site) -> Option<usize> {
        if !self.contains(s) {
            return None;
        }
        let side = self.side() as i32;
        let [a, b, c] = s.map(|c| c + self.n);
        Some(((a * side + b) * side + c) as usize)
    }

    pub fn site(&self, idx: usize) -> Site {
        let side = self.side();
        let c = (idx % side) as i32;
        let b = ((idx / side) % side) as i32;
        let a = (idx / (side * side)) as i32;
        [a - self.n, b - self.n, c - self.n]
    }

    pub fn momentum(&self, idx: usize) -> [T; 3] {
        self.site(idx).map(|c| T::lit(c as f64) * self.spacing)
    }

    pub fn origin(&self) -> usize {
        self.index([0, 0, 0]).expect("origin is on every lattice")
    }

    pub fn negate(&self, idx: usize) -> usize {
        self.index(self.site(idx).map(|c| -c)).expect("lattice is symmetric")
    }

    pub fn ensure_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.spacing != other.spacing {
            return Err(Error::LatticeMismatch);
        }
        Ok(())
    }
}

/// Leray weight `w (2p₀)⁻¹` of a lattice node on the mass shell `m`.
pub fn leray_weight<T: Real>(lattice: &MomentumLattice<T>, m: T, idx: usize) -> T {
    let p = lattice.momentum(idx);
    let p0 = (m * m + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
    lattice.weight() / (T::lit(2.0) * p0)
}

/// Internal-vector-valued semi-density sampled on the lattice, stored as
/// `values[node · dim + α]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct LatticeDensity<T: Real> {
    pub lattice: MomentumLattice<T>,
    pub dim: usize,
    pub values: Vec<Cx<T>>,
}

impl<T: Real> LatticeDensity<T> {
    pub fn zeros(lattice: MomentumLattice<T>, dim: usize) -> Self {
        let n = lattice.len() * dim;
        Self { lattice, dim, values: vec![Cx::new(T::zero(), T::zero()); n] }
    }

    /// Generalized basis element `B_{pα}`: Kronecker over `w`.
    pub fn delta(lattice: MomentumLattice<T>, dim: usize, node: usize, alpha: usize) -> Self {
        let mut d = Self::zeros(lattice, dim);
        d.values[node * dim + alpha] = Cx::new(T::one() / d.lattice.weight(), T::zero());
        d
    }

    /// Dual element `B^{pα}`: plain Kronecker.
    pub fn dual_delta(lattice: MomentumLattice<T>, dim: usize, node: usize, alpha: usize) -> Self {
        let mut d = Self::zeros(lattice, dim);
        d.values[node * dim + alpha] = Cx::new(T::one(), T::zero());
        d
    }
}

/// `Σ_p w f̄_α(p) g^α(p)`.
pub fn generalized_contract<T: Real>(f: &LatticeDensity<T>, g: &LatticeDensity<T>) -> Result<Cx<T>> {
    f.lattice.ensure_same(&g.lattice)?;
    if f.dim != g.dim {
        return Err(Error::DimensionMismatch(format!("internal dimensions {} and {}", f.dim, g.dim)));
    }
    let s: Cx<T> = f.values.iter().zip(&g.values).map(|(a, b)| a.conj() * b).sum();
    Ok(s * Cx::new(f.lattice.weight(), T::zero()))
}
