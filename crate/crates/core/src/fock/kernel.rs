//! The momentum-conserving half-density kernel `Λ⁽ʳ⁾` on the lattice.
//!
//! `Λ^{p₁…p_r} = l^{2r} (2^r p₀₁⋯p₀ᵣ)^{−1/2} e^{−i(Σp₀)t} δ(Σp⊥)`, with the lattice
//! delta equal to a Kronecker symbol divided by `w`. Lowering a leg flips the
//! sign of its `p₀` in the phase and of its `p⊥` in the delta.

use serde::{Deserialize, Serialize};

use super::lattice::MomentumLattice;
use crate::scalar::{Cx, Real};

/// Kernel leg: mass shell and index position.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct Leg<T: Real> {
    pub mass: T,
    pub lowered: bool,
}

impl<T: Real> Leg<T> {
    pub fn upper(mass: T) -> Self {
        Self { mass, lowered: false }
    }

    pub fn lower(mass: T) -> Self {
        Self { mass, lowered: true }
    }

    fn sign(&self) -> i32 {
        if self.lowered {
            -1
        } else {
            1
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct InteractionKernel<T: Real> {
    pub lattice: MomentumLattice<T>,
    pub legs: Vec<Leg<T>>,
    /// The constant length `l`.
    pub length: T,
    pub t: T,
}

pub fn build_kernel<T: Real>(lattice: MomentumLattice<T>, legs: Vec<Leg<T>>, length: T, t: T) -> InteractionKernel<T> {
    InteractionKernel { lattice, legs, length, t }
}

impl<T: Real> InteractionKernel<T> {
    pub fn arity(&self) -> usize {
        self.legs.len()
    }

    /// Whether signed lattice momenta at `nodes` sum to zero.
    pub fn conserves(&self, nodes: &[usize]) -> bool {
        let mut tot = [0i32; 3];
        for (leg, &n) in self.legs.iter().zip(nodes) {
            let s = self.lattice.site(n);
            for i in 0..3 {
                tot[i] += leg.sign() * s[i];
            }
        }
        tot == [0, 0, 0]
    }

    /// `Σ ±p₀` over the legs with the index-position signs.
    pub fn signed_energy(&self, nodes: &[usize]) -> T {
        self.legs
            .iter()
            .zip(nodes)
            .map(|(leg, &n)| {
                let p = self.lattice.momentum(n);
                let e = (leg.mass * leg.mass + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
                e * T::lit(f64::from(leg.sign()))
            })
            .fold(T::zero(), |a, b| a + b)
    }

    /// Magnitude `l^{2r} (2^r Π p₀)^{−1/2}` without the delta.
    pub fn prefactor(&self, nodes: &[usize]) -> T {
        let r = self.arity() as i32;
        let mut prod = T::lit(2f64.powi(r));
        for (leg, &n) in self.legs.iter().zip(nodes) {
            let p = self.lattice.momentum(n);
            prod *= (leg.mass * leg.mass + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
        }
        self.length.powi(2 * r) / prod.sqrt()
    }

    /// Kernel value at the given nodes (one per leg).
    pub fn entry(&self, nodes: &[usize]) -> Cx<T> {
        assert_eq!(nodes.len(), self.arity(), "one node per leg");
        if !self.conserves(nodes) {
            return Cx::new(T::zero(), T::zero());
        }
        let phase = -self.signed_energy(nodes) * self.t;
        Cx::new(phase.cos(), phase.sin()) * (self.prefactor(nodes) / self.lattice.weight())
    }
}
