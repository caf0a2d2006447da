use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::lie::commutator;
use crate::error::{Error, Result};
use crate::photon::NullCovector;
use crate::scalar::{cr, Cx, Real};
use crate::spinor::ETA;

/// Relative tolerance for `k#⌟α = 0`.
pub const RADIATIVE_TOL: f64 = 1e-12;

/// Residual threshold for [`class_equivalent`].
pub const EQUIVALENCE_TOL: f64 = 1e-10;

/// A constant null covector `k` with a transverse `𝔏`-valued covector `α`
/// (covariant components `α_a`), representing the class of `(k, α)` modulo
/// `α → α + k⊗χ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct RadiativeGaugeClass<T: Real> {
    pub k: NullCovector<T>,
    pub alpha: [DMatrix<Cx<T>>; 4],
}

fn k_contra<T: Real>(k: &NullCovector<T>) -> [T; 4] {
    k.k.real_pauli_components()
}

fn k_cov<T: Real>(k: &NullCovector<T>) -> [T; 4] {
    let c = k_contra(k);
    [0, 1, 2, 3].map(|a| c[a] * T::lit(ETA[a]))
}

/// `k#⌟α = k^a α_a`.
pub fn contraction<T: Real>(k: &NullCovector<T>, alpha: &[DMatrix<Cx<T>>; 4]) -> DMatrix<Cx<T>> {
    let kc = k_contra(k);
    let n = alpha[0].nrows();
    let mut out = DMatrix::zeros(n, n);
    for a in 0..4 {
        out += &alpha[a] * cr(kc[a]);
    }
    out
}

impl<T: Real> RadiativeGaugeClass<T> {
    pub fn new(k: NullCovector<T>, alpha: [DMatrix<Cx<T>>; 4]) -> Result<Self> {
        let scale: T = alpha.iter().map(|m| m.norm()).fold(T::zero(), |a, b| a + b);
        let r = contraction(&k, &alpha).norm();
        if r > T::lit(RADIATIVE_TOL) * (T::one() + scale) * k.k.norm() {
            return Err(Error::HorizontalityViolated(r.to_f64_lossy()));
        }
        Ok(Self { k, alpha })
    }

    /// Make `α` transverse by solving for the time component:
    /// `α_0 = −(Σ_i k^i α_i) / k^0`.
    pub fn with_spatial(k: NullCovector<T>, spatial: [DMatrix<Cx<T>>; 3]) -> Result<Self> {
        let kc = k_contra(&k);
        let n = spatial[0].nrows();
        let mut a0 = DMatrix::zeros(n, n);
        for i in 0..3 {
            a0 -= &spatial[i] * cr(kc[i + 1] / kc[0]);
        }
        let [a1, a2, a3] = spatial;
        Self::new(k, [a0, a1, a2, a3])
    }

    /// `(k, α + k⊗χ)`.
    pub fn shifted(&self, chi: &DMatrix<Cx<T>>) -> Self {
        let kc = k_cov(&self.k);
        let alpha = std::array::from_fn(|a| &self.alpha[a] + chi * cr(kc[a]));
        Self { k: self.k, alpha }
    }
}

/// `ρ[k,α]_ab = i (k_a α_b − k_b α_a) + [α_a, α_b]`.
pub fn rho<T: Real>(c: &RadiativeGaugeClass<T>) -> [[DMatrix<Cx<T>>; 4]; 4] {
    let kc = k_cov(&c.k);
    let i = Cx::new(T::zero(), T::one());
    std::array::from_fn(|a| {
        std::array::from_fn(|b| {
            (&c.alpha[b] * cr(kc[a]) - &c.alpha[a] * cr(kc[b])) * i
                + commutator(&c.alpha[a], &c.alpha[b])
        })
    })
}

/// Largest component difference `‖ρ[k,α'] − ρ[k,α]‖`.
pub fn rho_discrepancy<T: Real>(c1: &RadiativeGaugeClass<T>, c2: &RadiativeGaugeClass<T>) -> T {
    let (r1, r2) = (rho(c1), rho(c2));
    let mut m = T::zero();
    for a in 0..4 {
        for b in 0..4 {
            m = m.max((&r1[a][b] - &r2[a][b]).norm());
        }
    }
    m
}

/// Least-squares residual of `α₂ − α₁ = k⊗χ` (the optimal `χ` is
/// `Σ k_a Δ_a / Σ k_a²`).
pub fn class_residual<T: Real>(c1: &RadiativeGaugeClass<T>, c2: &RadiativeGaugeClass<T>) -> Result<T> {
    if (c1.k.k.m - c2.k.k.m).norm() > T::lit(1e-12) * (T::one() + c1.k.k.norm()) {
        return Err(Error::DifferentNullCovector);
    }
    let kc = k_cov(&c1.k);
    let delta: Vec<_> = (0..4).map(|a| &c2.alpha[a] - &c1.alpha[a]).collect();
    let k2: T = kc.iter().map(|&x| x * x).fold(T::zero(), |a, b| a + b);
    let n = delta[0].nrows();
    let mut chi = DMatrix::zeros(n, n);
    for a in 0..4 {
        chi += &delta[a] * cr(kc[a] / k2);
    }
    let mut r2 = T::zero();
    for a in 0..4 {
        r2 += (&delta[a] - &chi * cr(kc[a])).norm_squared();
    }
    Ok(r2.sqrt())
}

pub fn class_equivalent<T: Real>(c1: &RadiativeGaugeClass<T>, c2: &RadiativeGaugeClass<T>) -> Result<bool> {
    Ok(class_residual(c1, c2)? < T::lit(EQUIVALENCE_TOL))
}
