//! The QED point interaction `ℓ_int(φ̄, A, ψ) = −e ⟨φ̄, γ[A#] ψ⟩`, its
//! two-spinor form, the annihilator of the amplitude functional, the
//! `k`-vertex identities and the propagator projector factors.

use nalgebra::{DVector, Vector4};
use serde::{Deserialize, Serialize};

use crate::dirac_split::{
    dirac_projectors, lambda_u, momentum_from_state, state_species, FermionSpecies,
    OnShellMomentum,
};
use crate::error::{Error, Result};
use crate::scalar::{cabs, cr, sqrt2, Cx, Real};
use crate::spinor::{
    clifford, dirac_pairing, ComplexHVector, DiracOperator, DiracSpinor, EpsilonForm,
};

/// Charge `e` of the positron.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct VertexCoupling<T: Real> {
    pub e: T,
}

impl<T: Real> Default for VertexCoupling<T> {
    fn default() -> Self {
        Self { e: T::one() }
    }
}

/// Amplitude together with a basis of the potentials it annihilates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct VertexResult<T: Real> {
    pub amplitude: Cx<T>,
    pub kernel_basis: Vec<ComplexHVector<T>>,
}

/// `ℓ_int(φ̄, A, ψ) = −e k(φ, γ[A#] ψ)`; `a` is the vector `A#`.
pub fn ell_int<T: Real>(
    coupling: &VertexCoupling<T>,
    phi: &DiracSpinor<T>,
    a: &ComplexHVector<T>,
    psi: &DiracSpinor<T>,
) -> Cx<T> {
    -dirac_pairing(phi, &clifford(a).apply(psi)) * cr(coupling.e)
}

/// `w = u⊗v̄ + μ#⊗λ̄#` for `φ = (v, μ̄)`, `ψ = (u, λ̄)`.
pub fn amplitude_vector<T: Real>(phi: &DiracSpinor<T>, psi: &DiracSpinor<T>) -> ComplexHVector<T> {
    let eps = EpsilonForm::default();
    let mu_sharp = eps.sharp(&phi.lambda());
    let lam_sharp = eps.sharp(&psi.lambda());
    ComplexHVector::tensor(&psi.u, &phi.u) + ComplexHVector::tensor(&mu_sharp, &lam_sharp)
}

/// `⟨φ̄, γ[A#] ψ⟩ = √2 g(A#, u⊗v̄ + μ#⊗λ̄#)`.
pub fn vertex_two_spinor<T: Real>(
    phi: &DiracSpinor<T>,
    a: &ComplexHVector<T>,
    psi: &DiracSpinor<T>,
) -> Cx<T> {
    a.g_raw(&amplitude_vector(phi, psi)) * cr(sqrt2::<T>())
}

/// Frobenius-orthonormal basis of `{A : g(A, w) = 0}`, a 3-dimensional
/// subspace of `ℂ ⊗ H`.
pub fn vertex_kernel<T: Real>(
    phi: &DiracSpinor<T>,
    psi: &DiracSpinor<T>,
) -> Result<[ComplexHVector<T>; 3]> {
    let w = amplitude_vector(phi, psi);
    let scale = T::one() + phi.norm() * psi.norm();
    if w.norm() <= T::lit(1e-12) * scale {
        return Err(Error::DegenerateVertex);
    }
    // g(A, w) = Σ A_ij c_ij; the kernel is the Frobenius complement of c̄.
    let m = w.m;
    let c = Vector4::new(m[(1, 1)], -m[(1, 0)], -m[(0, 1)], m[(0, 0)]);
    let n = c.map(|z| z.conj()).normalize();
    let mut basis: Vec<DVector<Cx<T>>> = vec![DVector::from_column_slice(n.as_slice())];
    let mut candidates: Vec<DVector<Cx<T>>> = (0..4)
        .map(|i| {
            let mut e = DVector::zeros(4);
            e[i] = cr(T::one());
            e
        })
        .collect();
    while basis.len() < 4 {
        let mut best: Option<(usize, T, DVector<Cx<T>>)> = None;
        for (i, e) in candidates.iter().enumerate() {
            let mut r = e.clone();
            for b in &basis {
                let proj = b.dotc(&r);
                r -= b * proj;
            }
            let nr = r.norm();
            if best.as_ref().is_none_or(|(_, bn, _)| nr > *bn) {
                best = Some((i, nr, r));
            }
        }
        let (i, nr, r) = best.expect("candidates available");
        basis.push(r / cr(nr));
        candidates.swap_remove(i);
    }
    let to_h = |v: &DVector<Cx<T>>| {
        ComplexHVector::new(nalgebra::Matrix2::new(v[0], v[1], v[2], v[3]))
    };
    Ok([to_h(&basis[1]), to_h(&basis[2]), to_h(&basis[3])])
}

pub fn evaluate_vertex<T: Real>(
    coupling: &VertexCoupling<T>,
    phi: &DiracSpinor<T>,
    a: &ComplexHVector<T>,
    psi: &DiracSpinor<T>,
) -> Result<VertexResult<T>> {
    Ok(VertexResult {
        amplitude: ell_int(coupling, phi, a, psi),
        kernel_basis: vertex_kernel(phi, psi)?.to_vec(),
    })
}

/// Relative sign in `k ∝ τ(ψ) ± τ(φ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KSign {
    Plus,
    Minus,
}

impl KSign {
    fn value<T: Real>(self) -> T {
        match self {
            KSign::Plus => T::one(),
            KSign::Minus => -T::one(),
        }
    }

    /// The sign for which the identity vanishes on a pair of species.
    pub fn vanishing_for(a: FermionSpecies, b: FermionSpecies) -> Self {
        if a == b {
            KSign::Minus
        } else {
            KSign::Plus
        }
    }
}

/// `(1/m) ⟨φ̄, γ[k#] ψ⟩` for `k = (m/√2)[((u⊗ū)♭ + λ⊗λ̄)/|⟨λ,u⟩| ± ((v⊗v̄)♭ + μ⊗μ̄)/|⟨μ,v⟩|]`,
/// evaluated through its two-spinor expansion
/// `⟨μ,u⟩(⟨λ̄,ū⟩/|⟨λ,u⟩| ± ⟨μ̄,v̄⟩/|⟨μ,v⟩|) + ⟨λ̄,v̄⟩(⟨λ,u⟩/|⟨λ,u⟩| ± ⟨μ,v⟩/|⟨μ,v⟩|)`.
pub fn k_vertex_theorem<T: Real>(
    phi: &DiracSpinor<T>,
    psi: &DiracSpinor<T>,
    sign: KSign,
) -> Result<Cx<T>> {
    let lu = lambda_u(psi);
    let mv = lambda_u(phi);
    let (nlu, nmv) = (cabs(lu), cabs(mv));
    if nlu == T::zero() || nmv == T::zero() {
        return Err(Error::DegenerateSpinor);
    }
    let s = cr(sign.value::<T>());
    let mu = phi.lambda();
    let mu_u = mu.pair(&psi.u);
    let lbar_vbar = psi.lbar.pair(&phi.u.conj());
    let first = mu_u * (lu.conj() / cr(nlu) + s * mv.conj() / cr(nmv));
    let second = lbar_vbar * (lu / cr(nlu) + s * mv / cr(nmv));
    Ok(first + second)
}

/// The same quantity through the matrix route, `⟨φ̄, γ[τ(ψ) ± τ(φ)] ψ⟩`.
pub fn k_vertex_matrix<T: Real>(
    phi: &DiracSpinor<T>,
    psi: &DiracSpinor<T>,
    sign: KSign,
) -> Result<Cx<T>> {
    let k = crate::dirac_split::tau_of(psi)? + crate::dirac_split::tau_of(phi)? * sign.value::<T>();
    Ok(dirac_pairing(phi, &clifford(&k).apply(psi)))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct GaugeShift<T: Real> {
    /// `k# = p_ψ ∓ p_φ`, the shift direction.
    pub k: ComplexHVector<T>,
    pub amplitude: Cx<T>,
    pub amplitude_shifted: Cx<T>,
}

/// Amplitudes before and after `A → A + c k` with `k` the momentum
/// combination for which the `k`-vertex identity vanishes.
pub fn gauge_shift_invariance<T: Real>(
    coupling: &VertexCoupling<T>,
    phi: &DiracSpinor<T>,
    psi: &DiracSpinor<T>,
    a: &ComplexHVector<T>,
    c: Cx<T>,
    m: T,
) -> Result<GaugeShift<T>> {
    let p_psi = momentum_from_state(psi, m)?;
    let p_phi = momentum_from_state(phi, m)?;
    let sign = KSign::vanishing_for(state_species(psi)?, state_species(phi)?);
    let k = p_psi.sharp() + p_phi.sharp() * sign.value::<T>();
    let shifted = *a + k * c;
    Ok(GaugeShift {
        k,
        amplitude: ell_int(coupling, phi, a, psi),
        amplitude_shifted: ell_int(coupling, phi, &shifted, psi),
    })
}

/// `𝟙 ± γ[E_m(p) + p]/m`, i.e. `2P±` at the on-shell point.
pub fn propagator_factor<T: Real>(
    p: [T; 3],
    m: T,
    species: FermionSpecies,
) -> Result<DiracOperator<T>> {
    let q = OnShellMomentum::new(m, p)?;
    let (pp, pm) = dirac_projectors(&q)?;
    let two = cr(T::lit(2.0));
    Ok(match species {
        FermionSpecies::Electron => pp * two,
        FermionSpecies::Positron => pm * two,
    })
}

/// Role of the `φ̄` slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutSlot {
    EmitElectron,
    AbsorbPositron,
}

/// Role of the `ψ` slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InSlot {
    AbsorbElectron,
    EmitPositron,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PhotonLeg {
    Absorb,
    Emit,
}

/// One of the eight ways of reading a factor `ℓ_int` as absorption or
/// emission of each of its three legs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexDescriptor {
    pub out_slot: OutSlot,
    pub photon: PhotonLeg,
    pub in_slot: InSlot,
}

impl VertexDescriptor {
    /// Net charge change (units of the positron charge); always zero.
    pub fn charge_change(&self) -> i32 {
        let out = match self.out_slot {
            OutSlot::EmitElectron => -1,
            OutSlot::AbsorbPositron => -1,
        };
        let inn = match self.in_slot {
            InSlot::AbsorbElectron => 1,
            InSlot::EmitPositron => 1,
        };
        out + inn
    }

    /// Hermitian-adjoint process: every leg swaps absorption and emission.
    pub fn adjoint(&self) -> Self {
        Self {
            out_slot: match self.in_slot {
                InSlot::AbsorbElectron => OutSlot::EmitElectron,
                InSlot::EmitPositron => OutSlot::AbsorbPositron,
            },
            photon: match self.photon {
                PhotonLeg::Absorb => PhotonLeg::Emit,
                PhotonLeg::Emit => PhotonLeg::Absorb,
            },
            in_slot: match self.out_slot {
                OutSlot::EmitElectron => InSlot::AbsorbElectron,
                OutSlot::AbsorbPositron => InSlot::EmitPositron,
            },
        }
    }

    /// Number of emitted legs (created particles).
    pub fn emitted(&self) -> usize {
        usize::from(self.out_slot == OutSlot::EmitElectron)
            + usize::from(self.photon == PhotonLeg::Emit)
            + usize::from(self.in_slot == InSlot::EmitPositron)
    }

    /// Sign from normal ordering the fermion bilinear: `−1` when both
    /// fermion legs are positron operators.
    pub fn normal_order_sign(&self) -> i32 {
        if self.out_slot == OutSlot::AbsorbPositron && self.in_slot == InSlot::EmitPositron {
            -1
        } else {
            1
        }
    }

    pub fn label(&self) -> String {
        let o = match self.out_slot {
            OutSlot::EmitElectron => "emit e-",
            OutSlot::AbsorbPositron => "absorb e+",
        };
        let p = match self.photon {
            PhotonLeg::Absorb => "absorb photon",
            PhotonLeg::Emit => "emit photon",
        };
        let i = match self.in_slot {
            InSlot::AbsorbElectron => "absorb e-",
            InSlot::EmitPositron => "emit e+",
        };
        format!("{o}, {p}, {i}")
    }
}

/// The eight point interactions of QED.
pub fn enumerate_vertices() -> [VertexDescriptor; 8] {
    let mut out = [VertexDescriptor {
        out_slot: OutSlot::EmitElectron,
        photon: PhotonLeg::Absorb,
        in_slot: InSlot::AbsorbElectron,
    }; 8];
    let mut i = 0;
    for o in [OutSlot::EmitElectron, OutSlot::AbsorbPositron] {
        for p in [PhotonLeg::Absorb, PhotonLeg::Emit] {
            for n in [InSlot::AbsorbElectron, InSlot::EmitPositron] {
                out[i] = VertexDescriptor { out_slot: o, photon: p, in_slot: n };
                i += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac_split::dirac_frame_at;
    use crate::scalar::cx;
    use crate::spinor::pauli_basis;

    #[test]
    fn rest_frame_amplitude() {
        let f = dirac_frame_at(&OnShellMomentum::at_rest(1.0).unwrap()).unwrap();
        let c = VertexCoupling { e: 0.3 };
        let tau = pauli_basis::<f64>();
        let amp = ell_int(&c, &f.u[0], &tau[0], &f.u[0]);
        assert!((amp - cx(-0.3, 0.0)).norm() < 1e-15);
        assert_eq!(ell_int(&c, &f.u[0], &ComplexHVector::zero(), &f.u[0]), cx(0.0, 0.0));
    }

    #[test]
    fn rest_kernel_contains_transverse_directions() {
        let f = dirac_frame_at(&OnShellMomentum::at_rest(1.0).unwrap()).unwrap();
        let tau = pauli_basis::<f64>();
        let c = VertexCoupling::default();
        for t in [tau[1], tau[2]] {
            assert!(ell_int(&c, &f.u[0], &t, &f.u[0]).norm() < 1e-15);
        }
        let ker = vertex_kernel(&f.u[0], &f.u[0]).unwrap();
        for k in &ker {
            assert!(ell_int(&c, &f.u[0], k, &f.u[0]).norm() < 1e-14);
        }
    }

    #[test]
    fn eight_vertices() {
        let v = enumerate_vertices();
        assert_eq!(v.len(), 8);
        assert!(v.iter().all(|d| d.charge_change() == 0));
        for d in &v {
            assert_eq!(d.adjoint().adjoint(), *d);
            assert_eq!(d.emitted() + d.adjoint().emitted(), 3);
        }
    }

    #[test]
    fn degenerate_kernel() {
        let z = DiracSpinor::<f64>::zero();
        assert!(matches!(vertex_kernel(&z, &z), Err(Error::DegenerateVertex)));
    }
}
