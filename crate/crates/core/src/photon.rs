//! Null covectors, the optical space `B_k = H'_k / k` with its negative
//! metric and Hodge operator, and photon polarization frames.
//!
//! Covectors are represented by their metric images (`k#`, `β#`), so every
//! element here is a [`ComplexHVector`].
//!
//! Orientation: the volume form is `τ⁰∧τ¹∧τ²∧τ³` (`ε_{0123} = +1`). With it,
//! elements of type `κ⊗λ̄` are eigenvectors of `−i *_B` with eigenvalue `−1`
//! and elements of type `λ⊗κ̄` have eigenvalue `+1`.

use nalgebra::Matrix2;
use serde::{Deserialize, Serialize};

use crate::dirac_split::OnShellMomentum;
use crate::error::{Error, Result};
use crate::scalar::{cabs, cr, frac_1_sqrt2, Cx, Real};
use crate::spinor::{
    pauli_basis_in_frame, pauli_matrices, ComplexHVector, TwoSpinor, ETA,
};

/// Relative tolerance for horizontality, `|g(k,β)| < tol ‖k‖ ‖β‖`.
pub const HORIZONTAL_TOL: f64 = 1e-10;

/// Relative tolerance for nullity of `k`.
pub const NULL_TOL: f64 = 1e-10;

/// Eigenvalue of `−i *_B` on elements of type `κ⊗λ̄` for the fixed orientation.
pub const KAPPA_LAMBDA_BAR_EIGENVALUE: i32 = -1;

/// A future-pointing null element `k#` of `H`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct NullCovector<T: Real> {
    pub k: ComplexHVector<T>,
}

impl<T: Real> NullCovector<T> {
    pub fn new(k: ComplexHVector<T>) -> Result<Self> {
        null_factorize(&k)?;
        Ok(Self { k })
    }

    /// `k# = κ⊗κ̄`.
    pub fn from_spinor(kappa: &TwoSpinor<T>) -> Result<Self> {
        Self::new(ComplexHVector::tensor(kappa, kappa))
    }

    /// The massless shell point with spatial momentum `p`.
    pub fn from_momentum(p: [T; 3]) -> Result<Self> {
        let e = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
        Self::new(ComplexHVector::from_real_pauli([e, p[0], p[1], p[2]]))
    }

    pub fn kappa(&self) -> TwoSpinor<T> {
        null_factorize(&self.k).expect("validated at construction")
    }

    pub fn k0(&self) -> T {
        self.k.time_component()
    }

    pub fn is_horizontal(&self, beta: &ComplexHVector<T>) -> bool {
        is_horizontal(&self.k, beta)
    }

    pub fn ensure_horizontal(&self, beta: &ComplexHVector<T>) -> Result<()> {
        if self.is_horizontal(beta) {
            Ok(())
        } else {
            Err(Error::NotHorizontal(cabs(self.k.g_raw(beta)).to_f64_lossy()))
        }
    }

    /// Distance of `a − b` from `ℂ k`, relative to `1 + |a| + |b|`.
    pub fn residual_mod_k(&self, a: &ComplexHVector<T>, b: &ComplexHVector<T>) -> T {
        let d = (*a - *b).m;
        let kk = self.k.m;
        let c = kk.dotc(&d) / cr(kk.norm_squared());
        (d - kk * c).norm() / (T::one() + a.norm() + b.norm())
    }

    /// Whether `a − b ∈ ℂ k` up to `tol` relative to the inputs.
    pub fn eq_mod_k(&self, a: &ComplexHVector<T>, b: &ComplexHVector<T>, tol: T) -> bool {
        self.residual_mod_k(a, b) <= tol
    }
}

/// Rank-one factorization `k = κ⊗κ̄` (κ fixed up to phase).
pub fn null_factorize<T: Real>(k: &ComplexHVector<T>) -> Result<TwoSpinor<T>> {
    k.null_factorize(T::lit(NULL_TOL))
}

pub fn is_horizontal<T: Real>(k: &ComplexHVector<T>, beta: &ComplexHVector<T>) -> bool {
    cabs(k.g_raw(beta)) <= T::lit(HORIZONTAL_TOL) * k.norm() * beta.norm()
}

/// An element of `ℂ ⊗ B_k`, stored through a horizontal representative.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct OpticalElement<T: Real> {
    pub k: NullCovector<T>,
    pub beta: ComplexHVector<T>,
}

impl<T: Real> OpticalElement<T> {
    pub fn new(k: NullCovector<T>, beta: ComplexHVector<T>) -> Result<Self> {
        k.ensure_horizontal(&beta)?;
        Ok(Self { k, beta })
    }

    pub fn metric(&self, other: &Self) -> Result<Cx<T>> {
        optical_metric(&self.k, &self.beta, &other.beta)
    }

    pub fn hodge(&self) -> Result<Self> {
        Ok(Self { k: self.k, beta: hodge_b(&self.k, &self.beta)? })
    }

    pub fn eq_mod_k(&self, other: &Self, tol: T) -> bool {
        self.k.eq_mod_k(&self.beta, &other.beta, tol)
    }
}

/// `g_B(β₁, β₂)`, the (bilinear) metric induced on the quotient.
pub fn optical_metric<T: Real>(
    k: &NullCovector<T>,
    b1: &ComplexHVector<T>,
    b2: &ComplexHVector<T>,
) -> Result<Cx<T>> {
    k.ensure_horizontal(b1)?;
    k.ensure_horizontal(b2)?;
    Ok(b1.g_raw(b2))
}

fn levi_civita(idx: [usize; 4]) -> i32 {
    let mut sign = 1;
    for i in 0..4 {
        for j in i + 1..4 {
            if idx[i] == idx[j] {
                return 0;
            }
            if idx[i] > idx[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// `*_B β`, defined by `*(k∧β) = −k∧(*_B β)` with the 4D Hodge star of the
/// Minkowski volume form. The returned representative has vanishing time
/// component in the fixed basis.
pub fn hodge_b<T: Real>(k: &NullCovector<T>, beta: &ComplexHVector<T>) -> Result<ComplexHVector<T>> {
    k.ensure_horizontal(beta)?;
    let kc = k.k.covariant();
    let bc = beta.covariant();
    let eta = ETA.map(T::lit);
    // F^{ρσ} with indices raised by η.
    let mut fu = [[cr(T::zero()); 4]; 4];
    for r in 0..4 {
        for s in 0..4 {
            fu[r][s] = (kc[r] * bc[s] - kc[s] * bc[r]) * cr(eta[r] * eta[s]);
        }
    }
    // G = −*F; only the G_{0ν} row is needed.
    let mut g0 = [cr(T::zero()); 4];
    for (n, g) in g0.iter_mut().enumerate() {
        for r in 0..4 {
            for s in r + 1..4 {
                let e = levi_civita([0, n, r, s]);
                if e != 0 {
                    *g -= fu[r][s] * cr(T::lit(e as f64));
                }
            }
        }
    }
    // G = k∧β' with β'_0 = 0 gives β'_ν = G_{0ν} / k_0.
    let k0 = kc[0];
    let contra = [0, 1, 2, 3].map(|n| g0[n] / k0 * cr(eta[n]));
    Ok(ComplexHVector::from_pauli(contra).with_scale(beta.scale))
}

/// `J = −i *_B`, an involution on `ℂ ⊗ B_k`.
pub fn duality_operator<T: Real>(
    k: &NullCovector<T>,
    beta: &ComplexHVector<T>,
) -> Result<ComplexHVector<T>> {
    Ok(hodge_b(k, beta)? * Cx::new(T::zero(), -T::one()))
}

/// `β = β⁺ + β⁻` with `−i *_B β± = ±β±`.
pub fn selfdual_split<T: Real>(
    k: &NullCovector<T>,
    beta: &ComplexHVector<T>,
) -> Result<(ComplexHVector<T>, ComplexHVector<T>)> {
    let j = duality_operator(k, beta)?;
    let half = T::lit(0.5);
    Ok(((*beta + j) * half, (*beta - j) * half))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpinorCharacterKind {
    /// Zero in the quotient.
    Zero,
    /// `β ≡ κ⊗λ̄ (mod k)`.
    KappaLambdaBar,
    /// `β ≡ λ⊗κ̄ (mod k)`.
    LambdaKappaBar,
    Mixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct SpinorCharacter<T: Real> {
    pub kind: SpinorCharacterKind,
    /// The `κ⊗λ̄` component.
    pub kappa_lambda_bar: ComplexHVector<T>,
    /// The `λ⊗κ̄` component.
    pub lambda_kappa_bar: ComplexHVector<T>,
}

/// Split a horizontal `β` (mod `k = κ⊗κ̄`) into its `κ⊗λ̄` and `λ⊗κ̄`
/// parts, expanding in the spinor basis `(κ, η)` with `η ⟂ κ`.
pub fn two_spinor_character<T: Real>(
    k: &NullCovector<T>,
    beta: &ComplexHVector<T>,
    tol: T,
) -> Result<SpinorCharacter<T>> {
    k.ensure_horizontal(beta)?;
    let kappa = k.kappa();
    let n2 = kappa.norm_sqr();
    let eta = TwoSpinor::new(-kappa.c[1].conj() / cr(n2), kappa.c[0].conj() / cr(n2));
    let m = Matrix2::new(kappa.c[0], eta.c[0], kappa.c[1], eta.c[1]);
    let inv = m.try_inverse().ok_or(Error::ZeroVector)?;
    let d = inv * beta.m * inv.adjoint();
    let left = ComplexHVector::tensor(&kappa, &eta).m * d[(0, 1)];
    let right = ComplexHVector::tensor(&eta, &kappa).m * d[(1, 0)];
    let left = ComplexHVector::new(left).with_scale(beta.scale);
    let right = ComplexHVector::new(right).with_scale(beta.scale);
    let reference = tol * (T::one() + beta.norm());
    let kind = match (left.norm() > reference, right.norm() > reference) {
        (false, false) => SpinorCharacterKind::Zero,
        (true, false) => SpinorCharacterKind::KappaLambdaBar,
        (false, true) => SpinorCharacterKind::LambdaKappaBar,
        (true, true) => SpinorCharacterKind::Mixed,
    };
    Ok(SpinorCharacter { kind, kappa_lambda_bar: left, lambda_kappa_bar: right })
}

/// Transverse (`b±`), scalar (`b₀`) and longitudinal (`b₃`) modes at `k`
/// for a given observer, as vectors (`#` images of the covector modes).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct PolarizationFrame<T: Real> {
    pub b_plus: ComplexHVector<T>,
    pub b_minus: ComplexHVector<T>,
    pub b0: ComplexHVector<T>,
    pub b3: ComplexHVector<T>,
    /// Unimodular spinor frame whose Pauli basis is adapted to `(observer, k)`.
    pub frame: Matrix2<Cx<T>>,
}

impl<T: Real> PolarizationFrame<T> {
    pub fn modes(&self) -> [ComplexHVector<T>; 4] {
        [self.b_plus, self.b_minus, self.b0, self.b3]
    }

    pub fn transverse(&self) -> [ComplexHVector<T>; 2] {
        [self.b_plus, self.b_minus]
    }
}

fn su2_rotation<T: Real>(axis: [T; 3], angle: T) -> Matrix2<Cx<T>> {
    let sig = pauli_matrices::<T>();
    let half = angle * T::lit(0.5);
    let mut m = sig[0] * cr(half.cos());
    for i in 0..3 {
        m -= sig[i + 1] * Cx::new(T::zero(), half.sin() * axis[i]);
    }
    m
}

/// Modes adapted to `k` and a unit future timelike observer axis.
///
/// The spinor frame is `S·R`, with `S` the positive-Hermitian boost taking
/// `τ₀` to the observer and `R ∈ SU(2)` rotating the third axis onto the
/// spatial direction of `k` seen by the observer, so that `k# ∝ τ'₀ + τ'₃`.
pub fn polarization_frame<T: Real>(
    k: &NullCovector<T>,
    observer: &ComplexHVector<T>,
) -> Result<PolarizationFrame<T>> {
    if k.k.norm() == T::zero() {
        return Err(Error::ZeroVector);
    }
    let gq = observer.g_raw(observer);
    let o = observer.real_pauli_components();
    let tol = T::lit(1e-10);
    if !observer.is_hermitian(tol) || (gq.re - T::one()).abs() > tol || o[0] <= T::zero() {
        return Err(Error::BadObserver(gq.re.to_f64_lossy()));
    }
    let sig = pauli_matrices::<T>();
    let mut s = sig[0] * cr(T::one() + o[0]);
    for i in 0..3 {
        s += sig[i + 1] * cr(o[i + 1]);
    }
    let s = s / cr((T::lit(2.0) * (T::one() + o[0])).sqrt());
    let sinv = s.try_inverse().ok_or(Error::BadObserver(gq.re.to_f64_lossy()))?;
    let kp = ComplexHVector::new(sinv * k.k.m * sinv.adjoint()).real_pauli_components();
    let len = (kp[1] * kp[1] + kp[2] * kp[2] + kp[3] * kp[3]).sqrt();
    let n = [kp[1] / len, kp[2] / len, kp[3] / len];
    // Rotation taking e_z to n: axis e_z × n, angle acos(n_z).
    let ax = [-n[1], n[0], T::zero()];
    let axn = (ax[0] * ax[0] + ax[1] * ax[1]).sqrt();
    let r = if axn > T::lit(1e-12) {
        su2_rotation([ax[0] / axn, ax[1] / axn, T::zero()], n[2].min(T::one()).max(-T::one()).acos())
    } else if n[2] > T::zero() {
        Matrix2::identity()
    } else {
        su2_rotation([T::one(), T::zero(), T::zero()], T::pi())
    };
    let frame = s * r;
    let tau = pauli_basis_in_frame(&frame);
    let r2 = frac_1_sqrt2::<T>();
    let i = Cx::new(T::zero(), T::one());
    let scale = k.k.scale;
    let b_plus = (-(tau[1] + tau[2] * i) * r2).with_scale(scale);
    let b_minus = (-(tau[1] - tau[2] * i) * r2).with_scale(scale);
    let b0 = tau[0].with_scale(scale);
    let b3 = ((tau[0] + tau[3]) * r2).with_scale(scale);
    Ok(PolarizationFrame { b_plus, b_minus, b0, b3, frame })
}

/// Three real `g`-orthonormal polarization vectors orthogonal to a massive
/// momentum (the boosted spatial Pauli vectors).
pub fn massive_vector_polarizations<T: Real>(
    p: &OnShellMomentum<T>,
) -> Result<[ComplexHVector<T>; 3]> {
    let tau = pauli_basis_in_frame(&p.boost()?);
    Ok([tau[1], tau[2], tau[3]])
}
