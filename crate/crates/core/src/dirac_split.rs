//! Mass shells, the momentum-dependent Dirac splitting `W = W⁺_p ⊕ W⁻_p`,
//! Dirac frames and the reconstruction of momenta from spinors.

use nalgebra::{Matrix2, Matrix4};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{cabs, cr, frac_1_sqrt2, Cx, Real};
use crate::spinor::{
    clifford, pauli_matrices, ComplexHVector, ConjCoSpinor, DiracOperator,
    DiracSpinor, EpsilonForm, TwoSpinor,
};

/// Relative tolerance used to decide that `⟨λ, u⟩` is real.
pub const REALITY_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FermionSpecies {
    Electron,
    Positron,
}

impl FermionSpecies {
    /// `+1` for electrons (`W⁺`), `−1` for positrons (`W⁻`).
    pub fn sign(self) -> i32 {
        match self {
            FermionSpecies::Electron => 1,
            FermionSpecies::Positron => -1,
        }
    }
}

/// `E_m(p) = (m² + |p|²)^{1/2}`.
pub fn energy<T: Real>(m: T, p: &[T; 3]) -> Result<T> {
    if m < T::zero() || !m.is_finite() {
        return Err(Error::NegativeMass(m.to_f64_lossy()));
    }
    Ok((m * m + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt())
}

/// A point of the mass shell `P_m`, parametrized by its spatial part.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct OnShellMomentum<T: Real> {
    pub m: T,
    pub p: [T; 3],
}

impl<T: Real> OnShellMomentum<T> {
    pub fn new(m: T, p: [T; 3]) -> Result<Self> {
        energy(m, &p)?;
        Ok(Self { m, p })
    }

    pub fn at_rest(m: T) -> Result<Self> {
        Self::new(m, [T::zero(); 3])
    }

    pub fn p0(&self) -> T {
        (self.m * self.m + self.p[0] * self.p[0] + self.p[1] * self.p[1] + self.p[2] * self.p[2])
            .sqrt()
    }

    /// Contravariant components `(p⁰, p¹, p², p³)`.
    pub fn four(&self) -> [T; 4] {
        [self.p0(), self.p[0], self.p[1], self.p[2]]
    }

    /// Density of the Leray form `d³p / p₀` with respect to `d³p`.
    pub fn leray_weight(&self) -> T {
        T::one() / self.p0()
    }

    /// `p# = p^λ τ_λ`.
    pub fn sharp(&self) -> ComplexHVector<T> {
        ComplexHVector::from_real_pauli(self.four())
    }

    /// The positive-Hermitian boost `S ∈ SL(2,ℂ)` with `S S† = √2 p#/m`.
    pub fn boost(&self) -> Result<Matrix2<Cx<T>>> {
        if self.m <= T::zero() {
            return Err(Error::MasslessSplitting);
        }
        let sig = pauli_matrices::<T>();
        let p0 = self.p0();
        let mut num = sig[0] * cr(self.m + p0);
        for i in 0..3 {
            num += sig[i + 1] * cr(self.p[i]);
        }
        let den = (T::lit(2.0) * self.m * (self.m + p0)).sqrt();
        Ok(num / cr(den))
    }
}

/// `P± = ½(𝟙 ± γ[p#]/m)`.
pub fn dirac_projectors<T: Real>(
    p: &OnShellMomentum<T>,
) -> Result<(DiracOperator<T>, DiracOperator<T>)> {
    if p.m <= T::zero() {
        return Err(Error::MasslessSplitting);
    }
    let g = clifford(&p.sharp()) * cr(T::one() / p.m);
    let half = cr(T::lit(0.5));
    let id = DiracOperator::identity();
    Ok(((id + g) * half, (id - g) * half))
}

/// A k-orthonormal frame `(u_1, u_2, v_1, v_2)` adapted to `W⁺_p ⊕ W⁻_p`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct DiracFrame<T: Real> {
    pub u: [DiracSpinor<T>; 2],
    pub v: [DiracSpinor<T>; 2],
}

impl<T: Real> DiracFrame<T> {
    /// Frame built from a unimodular 2-spinor frame whose columns `ζ'_A`
    /// satisfy `τ'_0 = p#/m`:
    /// `u_A = (ζ'_A, ζ̄'^A)/√2`, `v_A = (ζ'_A, −ζ̄'^A)/√2`.
    pub fn from_spinor_frame(s: &Matrix2<Cx<T>>) -> Result<Self> {
        let inv = s.try_inverse().ok_or(Error::DegenerateSpinor)?;
        let r = cr(frac_1_sqrt2::<T>());
        let make = |a: usize, sign: T| {
            let col = TwoSpinor::new(s[(0, a)], s[(1, a)]);
            let dual = ConjCoSpinor::new(inv[(a, 0)].conj(), inv[(a, 1)].conj());
            DiracSpinor::new(col, dual.scaled(cr(sign))) * r
        };
        let one = T::one();
        Ok(Self { u: [make(0, one), make(1, one)], v: [make(0, -one), make(1, -one)] })
    }

    /// Projectors onto the spans of `u_A` and `v_A`, assembled from the
    /// frame vectors and the pairing (`k(u,u) = 1`, `k(v,v) = −1`).
    pub fn projectors(&self) -> (DiracOperator<T>, DiracOperator<T>) {
        let k = crate::spinor::pairing_matrix::<T>();
        let mut pp = Matrix4::zeros();
        let mut pm = Matrix4::zeros();
        for a in 0..2 {
            let u = self.u[a].weyl();
            let v = self.v[a].weyl();
            pp += u * (u.adjoint() * k);
            pm -= v * (v.adjoint() * k);
        }
        (DiracOperator::new(pp), DiracOperator::new(pm))
    }

    pub fn vector(&self, species: FermionSpecies, a: usize) -> DiracSpinor<T> {
        match species {
            FermionSpecies::Electron => self.u[a],
            FermionSpecies::Positron => self.v[a],
        }
    }
}

/// Dirac frame at `p`, using the positive-Hermitian boost of the fixed basis.
pub fn dirac_frame_at<T: Real>(p: &OnShellMomentum<T>) -> Result<DiracFrame<T>> {
    DiracFrame::from_spinor_frame(&p.boost()?)
}

/// `⟨λ, u⟩` for `ψ = (u, λ̄)`.
pub fn lambda_u<T: Real>(psi: &DiracSpinor<T>) -> Cx<T> {
    psi.lambda().pair(&psi.u)
}

/// `τ(ψ) = (u⊗ū + λ#⊗λ̄#) / (√2 |⟨λ,u⟩|)`.
pub fn tau_of<T: Real>(psi: &DiracSpinor<T>) -> Result<ComplexHVector<T>> {
    let lu = cabs(lambda_u(psi));
    let scale = psi.u.norm_sqr() + psi.lbar.norm_sqr();
    if lu <= T::default_epsilon() * T::lit(16.0) * scale || lu == T::zero() {
        return Err(Error::DegenerateSpinor);
    }
    let s = EpsilonForm::default().sharp(&psi.lambda());
    let m = ComplexHVector::tensor(&psi.u, &psi.u).m + ComplexHVector::tensor(&s, &s).m;
    Ok(ComplexHVector::new(m * cr(frac_1_sqrt2::<T>() / lu)))
}

/// Species of a Dirac eigenstate, read off the sign of the real `⟨λ,u⟩`.
pub fn state_species<T: Real>(psi: &DiracSpinor<T>) -> Result<FermionSpecies> {
    let z = lambda_u(psi);
    if cabs(z) == T::zero() {
        return Err(Error::DegenerateSpinor);
    }
    if z.im.abs() > T::lit(REALITY_TOL) * cabs(z) {
        return Err(Error::NonRealPairing { re: z.re.to_f64_lossy(), im: z.im.to_f64_lossy() });
    }
    Ok(if z.re > T::zero() { FermionSpecies::Electron } else { FermionSpecies::Positron })
}

/// `p = m τ(ψ)`, the unique mass-`m` momentum whose splitting contains `ψ`.
/// Positron states give the positive-energy shell point as well.
pub fn momentum_from_state<T: Real>(psi: &DiracSpinor<T>, m: T) -> Result<OnShellMomentum<T>> {
    state_species(psi)?;
    let tau = tau_of(psi)?;
    let c = tau.real_pauli_components();
    OnShellMomentum::new(m, [m * c[1], m * c[2], m * c[3]])
}

/// `e^{−i p₀ t}`.
pub fn frame_phase<T: Real>(p0: T, t: T) -> Cx<T> {
    let a = -p0 * t;
    Cx::new(a.cos(), a.sin())
}

/// Label of a generalized electron (`A_{pA}`) or positron (`C_{pȦ}`) frame
/// element.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct GeneralizedFermionLabel<T: Real> {
    pub species: FermionSpecies,
    pub index: [i32; 3],
    pub momentum: OnShellMomentum<T>,
    pub spin: usize,
}

impl<T: Real> GeneralizedFermionLabel<T> {
    /// The frame spinor carried by the label at time `t`.
    pub fn spinor_at(&self, t: T) -> Result<DiracSpinor<T>> {
        let frame = dirac_frame_at(&self.momentum)?;
        Ok(frame.vector(self.species, self.spin) * generalized_frame_phase(self, t))
    }
}

pub fn generalized_frame_phase<T: Real>(label: &GeneralizedFermionLabel<T>, t: T) -> Cx<T> {
    frame_phase(label.momentum.p0(), t)
}
