//! Dirac spinors `W = U ⊕ Ū*`, the Clifford map and Dirac adjunction.

use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{Matrix4, Vector4};
use serde::{Deserialize, Serialize};

use super::hvector::ComplexHVector;
use super::two::{ConjCoSpinor, ConjSpinor, CoSpinor, EpsilonForm, TwoSpinor};
use crate::scalar::{cr, sqrt2, Cx, Real, Scale};

/// `ψ = (u, λ̄) ∈ U ⊕ Ū*`.
///
/// Weyl-basis components are `(u¹, u², −λ̄_1, −λ̄_2)`, matching the basis
/// `(ζ₁, ζ₂, −ζ̄¹, −ζ̄²)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct DiracSpinor<T: Real> {
    pub u: TwoSpinor<T>,
    pub lbar: ConjCoSpinor<T>,
}

impl<T: Real> DiracSpinor<T> {
    pub fn new(u: TwoSpinor<T>, lbar: ConjCoSpinor<T>) -> Self {
        Self { u, lbar }
    }

    pub fn zero() -> Self {
        Self::new(TwoSpinor::zero(), ConjCoSpinor::zero())
    }

    pub fn from_weyl(w: Vector4<Cx<T>>) -> Self {
        Self::new(TwoSpinor::new(w[0], w[1]), ConjCoSpinor::new(-w[2], -w[3]))
    }

    /// The `i`-th Weyl basis spinor.
    pub fn weyl_basis(i: usize) -> Self {
        let mut w = Vector4::zeros();
        w[i] = cr(T::one());
        Self::from_weyl(w)
    }

    pub fn weyl(&self) -> Vector4<Cx<T>> {
        Vector4::new(self.u.c[0], self.u.c[1], -self.lbar.c[0], -self.lbar.c[1])
    }

    /// The `U*` element `λ` conjugate to the lower half.
    pub fn lambda(&self) -> CoSpinor<T> {
        self.lbar.conj()
    }

    pub fn with_scale(mut self, scale: Scale) -> Self {
        self.u.scale = scale;
        self.lbar.scale = scale;
        self
    }

    pub fn scale(&self) -> Scale {
        self.u.scale
    }

    pub fn norm(&self) -> T {
        self.weyl().norm()
    }
}

impl<T: Real> Add for DiracSpinor<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.u + rhs.u, self.lbar + rhs.lbar)
    }
}

impl<T: Real> Sub for DiracSpinor<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.u - rhs.u, self.lbar - rhs.lbar)
    }
}

impl<T: Real> Neg for DiracSpinor<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.u, -self.lbar)
    }
}

impl<T: Real> Mul<Cx<T>> for DiracSpinor<T> {
    type Output = Self;
    fn mul(self, z: Cx<T>) -> Self {
        Self::new(self.u * z, self.lbar * z)
    }
}

/// Element `(λ, ū)` of `W* = U* ⊕ Ū`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct CoDiracSpinor<T: Real> {
    pub lam: CoSpinor<T>,
    pub ubar: ConjSpinor<T>,
}

impl<T: Real> CoDiracSpinor<T> {
    /// Duality pairing with `ψ = (u, λ̄)`: `⟨λ, u⟩ + ⟨λ̄, ū⟩`.
    pub fn apply(&self, psi: &DiracSpinor<T>) -> Cx<T> {
        self.lam.pair(&psi.u) + psi.lbar.pair(&self.ubar)
    }
}

/// Dirac adjunction `(u, λ̄) ↦ (λ, ū)`.
pub fn dirac_adjoint<T: Real>(psi: &DiracSpinor<T>) -> CoDiracSpinor<T> {
    CoDiracSpinor { lam: psi.lbar.conj(), ubar: psi.u.conj() }
}

/// The Hermitian form `k(φ, ψ) = ⟨φ̄, ψ⟩`, antilinear in `φ`.
pub fn dirac_pairing<T: Real>(phi: &DiracSpinor<T>, psi: &DiracSpinor<T>) -> Cx<T> {
    dirac_adjoint(phi).apply(psi)
}

/// Matrix `K` with `k(φ, ψ) = φ_W† K ψ_W` in Weyl components.
pub fn pairing_matrix<T: Real>() -> Matrix4<Cx<T>> {
    let mut k = Matrix4::zeros();
    for i in 0..4 {
        for j in 0..4 {
            k[(i, j)] = dirac_pairing(&DiracSpinor::weyl_basis(i), &DiracSpinor::weyl_basis(j));
        }
    }
    k
}

/// Number of positive and negative eigenvalues of the pairing matrix.
pub fn pairing_signature<T: Real>(tol: T) -> (usize, usize) {
    let eig = pairing_matrix::<T>().symmetric_eigenvalues();
    let pos = eig.iter().filter(|&&e| e > tol).count();
    let neg = eig.iter().filter(|&&e| e < -tol).count();
    (pos, neg)
}

/// A linear endomorphism of `W`, as a matrix on Weyl components.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct DiracOperator<T: Real> {
    pub m: Matrix4<Cx<T>>,
}

impl<T: Real> DiracOperator<T> {
    pub fn new(m: Matrix4<Cx<T>>) -> Self {
        Self { m }
    }

    pub fn identity() -> Self {
        Self::new(Matrix4::identity())
    }

    pub fn zero() -> Self {
        Self::new(Matrix4::zeros())
    }

    pub fn apply(&self, psi: &DiracSpinor<T>) -> DiracSpinor<T> {
        DiracSpinor::from_weyl(self.m * psi.weyl()).with_scale(psi.scale())
    }

    pub fn trace(&self) -> Cx<T> {
        self.m.trace()
    }

    pub fn norm(&self) -> T {
        self.m.norm()
    }

    /// `{A, B} = AB + BA`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        Self::new(self.m * other.m + other.m * self.m)
    }
}

impl<T: Real> Add for DiracOperator<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.m + rhs.m)
    }
}

impl<T: Real> Sub for DiracOperator<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.m - rhs.m)
    }
}

impl<T: Real> Mul for DiracOperator<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(self.m * rhs.m)
    }
}

impl<T: Real> Mul<Cx<T>> for DiracOperator<T> {
    type Output = Self;
    fn mul(self, z: Cx<T>) -> Self {
        Self::new(self.m * z)
    }
}

impl<T: Real> EpsilonForm<T> {
    /// Action of `γ̃(y)` on `(u, λ̄)`, the linear extension of
    /// `γ̃(r⊗s̄)(u, λ̄) = √2 (⟨λ̄, s̄⟩ r, ⟨r♭, u⟩ s̄♭)`.
    pub fn clifford_apply(&self, y: &ComplexHVector<T>, psi: &DiracSpinor<T>) -> DiracSpinor<T> {
        let s2 = cr(sqrt2::<T>());
        let mut up = [cr(T::zero()); 2];
        let mut lo = [cr(T::zero()); 2];
        for a in 0..2 {
            for ad in 0..2 {
                let yaa = y.m[(a, ad)];
                up[a] += s2 * yaa * psi.lbar.c[ad];
                for b in 0..2 {
                    let e = self.component(a, b);
                    for bd in 0..2 {
                        lo[bd] += s2 * yaa * e * psi.u.c[b] * self.conj_component(ad, bd);
                    }
                }
            }
        }
        let scale = psi.scale() + y.scale;
        DiracSpinor::new(TwoSpinor { c: up, scale }, ConjCoSpinor { c: lo, scale })
    }

    /// The Clifford map `γ̃(y)` as a matrix on Weyl components.
    pub fn clifford(&self, y: &ComplexHVector<T>) -> DiracOperator<T> {
        let mut m = Matrix4::zeros();
        for j in 0..4 {
            let col = self.clifford_apply(y, &DiracSpinor::weyl_basis(j)).weyl();
            m.set_column(j, &col);
        }
        DiracOperator::new(m)
    }
}

/// `γ[y]` built from the default ε; independent of the ε phase.
pub fn clifford<T: Real>(y: &ComplexHVector<T>) -> DiracOperator<T> {
    EpsilonForm::default().clifford(y)
}
