//! Elements of `U ⊗ Ū ≅ ℂ ⊗ H` and the Lorentz metric they inherit.

use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::Matrix2;
use serde::{Deserialize, Serialize};

use super::two::{EpsilonForm, TwoSpinor};
use crate::error::{Error, Result};
use crate::scalar::{cr, frac_1_sqrt2, Cx, Real, Scale};

/// Minkowski signature `(+,−,−,−)` of the Pauli basis.
pub const ETA: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// An element `y = y^{AȦ} ζ_A ⊗ ζ̄_Ȧ` stored as the 2×2 matrix `y^{AȦ}`.
///
/// Hermitian matrices are elements of the real Lorentzian space `H`; the
/// natural anti-linear involution ("complex conjugation") is the Hermitian
/// transpose. Covectors in `ℂ ⊗ H*` are represented through their image under
/// the metric isomorphism, so photon polarizations, potentials and null
/// covectors all live in this type.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct ComplexHVector<T: Real> {
    pub m: Matrix2<Cx<T>>,
    #[serde(default)]
    pub scale: Scale,
}

impl<T: Real> ComplexHVector<T> {
    pub fn new(m: Matrix2<Cx<T>>) -> Self {
        Self { m, scale: Scale::ZERO }
    }

    pub fn zero() -> Self {
        Self::new(Matrix2::zeros())
    }

    /// The decomposable element `u ⊗ v̄`.
    pub fn tensor(u: &TwoSpinor<T>, v: &TwoSpinor<T>) -> Self {
        let m = Matrix2::new(
            u.c[0] * v.c[0].conj(),
            u.c[0] * v.c[1].conj(),
            u.c[1] * v.c[0].conj(),
            u.c[1] * v.c[1].conj(),
        );
        Self { m, scale: u.scale + v.scale }
    }

    /// Build from contravariant components `y^λ` in the fixed Pauli basis.
    pub fn from_pauli(c: [Cx<T>; 4]) -> Self {
        let tau = pauli_basis::<T>();
        let mut m = Matrix2::zeros();
        for (coef, t) in c.iter().zip(tau.iter()) {
            m += t.m * *coef;
        }
        Self::new(m)
    }

    /// Real vector with contravariant components `(x^0, x^1, x^2, x^3)`.
    pub fn from_real_pauli(c: [T; 4]) -> Self {
        Self::from_pauli(c.map(cr))
    }

    pub fn with_scale(mut self, scale: Scale) -> Self {
        self.scale = scale;
        self
    }

    /// Complex conjugate, i.e. Hermitian transpose of the matrix.
    pub fn conj(&self) -> Self {
        Self { m: self.m.adjoint(), scale: self.scale }
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        (self.m - self.m.adjoint()).norm() <= tol * (T::one() + self.m.norm())
    }

    /// Frobenius norm of the component matrix.
    pub fn norm(&self) -> T {
        self.m.norm()
    }

    /// `g(self, other)` using the default ε, without unit checks.
    pub fn g_raw(&self, other: &Self) -> Cx<T> {
        EpsilonForm::default().metric_raw(self, other)
    }

    /// `g(self, other)`; both arguments must carry the same length-unit tag.
    pub fn g(&self, other: &Self) -> Result<Cx<T>> {
        metric_g(self, other)
    }

    /// Covariant components `y_λ = g(y, τ_λ)`.
    pub fn covariant(&self) -> [Cx<T>; 4] {
        let tau = pauli_basis::<T>();
        [0, 1, 2, 3].map(|l| self.g_raw(&tau[l]))
    }

    /// Contravariant components `y^λ` with `y = y^λ τ_λ`.
    pub fn pauli_components(&self) -> [Cx<T>; 4] {
        let cov = self.covariant();
        [0, 1, 2, 3].map(|l| cov[l] * T::lit(ETA[l]))
    }

    /// Real parts of the contravariant components (exact for Hermitian input).
    pub fn real_pauli_components(&self) -> [T; 4] {
        self.pauli_components().map(|z| z.re)
    }

    /// Time component `y^0`; positive for future-pointing elements.
    pub fn time_component(&self) -> T {
        ((self.m[(0, 0)] + self.m[(1, 1)]).re) * frac_1_sqrt2::<T>()
    }

    /// Rank-one factorization `x = u ⊗ ū` of a Hermitian, future-pointing
    /// null element. The overall phase of `u` is fixed by making its largest
    /// component real and positive.
    pub fn null_factorize(&self, tol: T) -> Result<TwoSpinor<T>> {
        let scale = self.norm();
        if scale == T::zero() {
            return Err(Error::ZeroVector);
        }
        if !self.is_hermitian(tol) {
            return Err(Error::NotHermitian);
        }
        let q = self.g_raw(self).re;
        if q.abs() > tol * scale * scale {
            return Err(Error::NotNull(q.to_f64_lossy()));
        }
        if self.time_component() <= T::zero() {
            return Err(Error::PastPointing);
        }
        let j = if self.m[(0, 0)].re >= self.m[(1, 1)].re { 0 } else { 1 };
        let d = self.m[(j, j)].re.sqrt();
        let u = TwoSpinor::new(self.m[(0, j)] / cr(d), self.m[(1, j)] / cr(d));
        Ok(u.with_scale(Scale::new(*self.scale.0.numer(), 2 * *self.scale.0.denom())))
    }
}

impl<T: Real> Add for ComplexHVector<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { m: self.m + rhs.m, scale: self.scale }
    }
}

impl<T: Real> Sub for ComplexHVector<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { m: self.m - rhs.m, scale: self.scale }
    }
}

impl<T: Real> Neg for ComplexHVector<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { m: -self.m, scale: self.scale }
    }
}

impl<T: Real> Mul<Cx<T>> for ComplexHVector<T> {
    type Output = Self;
    fn mul(self, z: Cx<T>) -> Self {
        Self { m: self.m * z, scale: self.scale }
    }
}

impl<T: Real> Mul<T> for ComplexHVector<T> {
    type Output = Self;
    fn mul(self, x: T) -> Self {
        Self { m: self.m * cr(x), scale: self.scale }
    }
}

impl<T: Real> EpsilonForm<T> {
    /// `g(x, y) = ε_AB ε̄_ȦḂ x^{AȦ} y^{BḂ}`, the bilinear extension of
    /// `g(u⊗v̄, r⊗s̄) = ε(u,r) ε̄(v̄,s̄)`.
    pub fn metric_raw(&self, x: &ComplexHVector<T>, y: &ComplexHVector<T>) -> Cx<T> {
        let mut acc = cr(T::zero());
        for a in 0..2 {
            for b in 0..2 {
                let e = self.component(a, b);
                if e == cr(T::zero()) {
                    continue;
                }
                for ad in 0..2 {
                    for bd in 0..2 {
                        let eb = self.conj_component(ad, bd);
                        if eb == cr(T::zero()) {
                            continue;
                        }
                        acc += e * eb * x.m[(a, ad)] * y.m[(b, bd)];
                    }
                }
            }
        }
        acc
    }

    pub fn metric(&self, x: &ComplexHVector<T>, y: &ComplexHVector<T>) -> Result<Cx<T>> {
        x.scale.ensure_eq(y.scale)?;
        Ok(self.metric_raw(x, y))
    }
}

/// The Lorentz metric on `ℂ ⊗ H` (built from the default ε; the result does
/// not depend on the ε phase).
pub fn metric_g<T: Real>(x: &ComplexHVector<T>, y: &ComplexHVector<T>) -> Result<Cx<T>> {
    EpsilonForm::default().metric(x, y)
}

/// Pauli matrices `σ_0..σ_3`.
pub fn pauli_matrices<T: Real>() -> [Matrix2<Cx<T>>; 4] {
    let o = cr(T::one());
    let z = cr(T::zero());
    let i = Cx::new(T::zero(), T::one());
    [
        Matrix2::new(o, z, z, o),
        Matrix2::new(z, o, o, z),
        Matrix2::new(z, -i, i, z),
        Matrix2::new(o, z, z, -o),
    ]
}

/// The Pauli basis `τ_λ = σ_λ / √2` of `H` associated with the fixed spinor
/// basis.
pub fn pauli_basis<T: Real>() -> [ComplexHVector<T>; 4] {
    let s = cr(frac_1_sqrt2::<T>());
    pauli_matrices::<T>().map(|m| ComplexHVector::new(m * s))
}

/// Pauli basis adapted to the spinor frame whose basis vectors are the
/// columns of `frame`: `τ'_λ = frame · σ_λ · frame† / √2`.
pub fn pauli_basis_in_frame<T: Real>(frame: &Matrix2<Cx<T>>) -> [ComplexHVector<T>; 4] {
    let s = cr(frac_1_sqrt2::<T>());
    pauli_matrices::<T>().map(|m| ComplexHVector::new(frame * m * frame.adjoint() * s))
}
