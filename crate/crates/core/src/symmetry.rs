//! Higgs vacuum, the induced splittings of `F_L` and `𝔏_L`, and the Higgs potential.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sample::Sampler;
use crate::scalar::{cr, Cx, Real};

type Mat<T> = DMatrix<Cx<T>>;

/// Tolerance on the conformal isometry condition of a vacuum.
pub const CONFORMAL_TOL: f64 = 1e-12;

/// Fibres `F_R`, `F_L` with their Hermitian metrics.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct InternalSpaces<T: Real> {
    pub n_r: usize,
    pub n_l: usize,
    pub h_r: Mat<T>,
    pub h_l: Mat<T>,
}

fn check_metric<T: Real>(h: &Mat<T>, n: usize) -> Result<()> {
    if h.shape() != (n, n) {
        return Err(Error::DimensionMismatch(format!("metric is {:?}, expected {n}x{n}", h.shape())));
    }
    let herm = (h - h.adjoint()).norm();
    if herm > T::lit(1e-12) * (T::one() + h.norm()) {
        return Err(Error::BadMetric);
    }
    if h.clone().symmetric_eigenvalues().iter().any(|&e| e <= T::zero()) {
        return Err(Error::BadMetric);
    }
    Ok(())
}

/// `C` with `h = C† C` (upper triangular).
fn cholesky_factor<T: Real>(h: &Mat<T>) -> Result<Mat<T>> {
    Ok(h.clone().cholesky().ok_or(Error::BadMetric)?.l().adjoint())
}

fn inverse<T: Real>(m: &Mat<T>) -> Result<Mat<T>> {
    m.clone().try_inverse().ok_or(Error::RankDeficient)
}

impl<T: Real> InternalSpaces<T> {
    pub fn new(h_r: Mat<T>, h_l: Mat<T>) -> Result<Self> {
        let (n_r, n_l) = (h_r.nrows(), h_l.nrows());
        check_metric(&h_r, n_r)?;
        check_metric(&h_l, n_l)?;
        Ok(Self { n_r, n_l, h_r, h_l })
    }

    pub fn identity(n_r: usize, n_l: usize) -> Self {
        Self { n_r, n_l, h_r: Mat::identity(n_r, n_r), h_l: Mat::identity(n_l, n_l) }
    }

    /// Random positive-definite metrics `A A† + 𝟙`.
    pub fn random(n_r: usize, n_l: usize, s: &mut Sampler) -> Self {
        let mut metric = |n| {
            let a = s.dmatrix::<T>(n, n);
            &a * a.adjoint() + Mat::identity(n, n)
        };
        let h_r = metric(n_r);
        let h_l = metric(n_l);
        Self { n_r, n_l, h_r, h_l }
    }

    /// The `h_L`-adjoint `h_L⁻¹ X† h_L` of an endomorphism of `F_L`.
    pub fn adjoint_l(&self, x: &Mat<T>) -> Result<Mat<T>> {
        Ok(inverse(&self.h_l)? * x.adjoint() * &self.h_l)
    }

    /// Full contraction `⟨φ̄, φ⟩ = tr(h_R⁻¹ φ† h_L φ)` for `φ : F_R → F_L`.
    pub fn contraction(&self, phi: &Mat<T>) -> Result<T> {
        self.check_map(phi)?;
        Ok((inverse(&self.h_r)? * phi.adjoint() * &self.h_l * phi).trace().re)
    }

    fn check_map(&self, phi: &Mat<T>) -> Result<()> {
        if phi.shape() != (self.n_l, self.n_r) {
            return Err(Error::DimensionMismatch(format!(
                "map is {:?}, expected {}x{}",
                phi.shape(),
                self.n_l,
                self.n_r
            )));
        }
        Ok(())
    }
}

/// `H₀ : F_R → F_L` with `H₀† h_L H₀ = (μ²/n_R) h_R`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct HiggsVacuum<T: Real> {
    pub spaces: InternalSpaces<T>,
    pub h0: Mat<T>,
    pub mu: T,
}

impl<T: Real> HiggsVacuum<T> {
    /// Validates rank and the conformal isometry condition to `tol` (relative to μ²).
    pub fn new(spaces: InternalSpaces<T>, h0: Mat<T>, mu: T, tol: T) -> Result<Self> {
        if spaces.n_r > spaces.n_l {
            return Err(Error::RightExceedsLeft { n_r: spaces.n_r, n_l: spaces.n_l });
        }
        spaces.check_map(&h0)?;
        let vac = Self { spaces, h0, mu };
        let gram = vac.gram();
        let min_sv = gram.singular_values().min();
        if min_sv <= T::default_epsilon() * (T::one() + gram.norm()) * T::lit(100.0) {
            return Err(Error::RankDeficient);
        }
        let r = vac.conformal_residual();
        if r > tol * (T::one() + mu * mu) {
            return Err(Error::NotConformal(r.to_f64_lossy()));
        }
        Ok(vac)
    }

    fn gram(&self) -> Mat<T> {
        self.h0.adjoint() * &self.spaces.h_l * &self.h0
    }

    /// `‖H₀† h_L H₀ − (μ²/n_R) h_R‖`.
    pub fn conformal_residual(&self) -> T {
        let c = self.mu * self.mu / T::lit(self.spaces.n_r as f64);
        (self.gram() - &self.spaces.h_r * cr(c)).norm()
    }

    /// The isometry `J = H₀ √n_R / μ`, with `J† h_L J = h_R`.
    pub fn isometry(&self) -> Mat<T> {
        &self.h0 * cr(T::lit(self.spaces.n_r as f64).sqrt() / self.mu)
    }
}

/// Random vacuum: an `h`-isometry built from a random orthonormal frame, scaled by `μ/√n_R`.
pub fn make_vacuum<T: Real>(spaces: &InternalSpaces<T>, mu: T, seed: u64) -> Result<HiggsVacuum<T>> {
    let (n_r, n_l) = (spaces.n_r, spaces.n_l);
    if n_r > n_l {
        return Err(Error::RightExceedsLeft { n_r, n_l });
    }
    let mut s = Sampler::new(seed);
    let q = s.dmatrix::<T>(n_l, n_r).qr().q();
    let c_l = cholesky_factor(&spaces.h_l)?;
    let c_r = cholesky_factor(&spaces.h_r)?;
    let h0 = inverse(&c_l)? * q * c_r * cr(mu / T::lit(n_r as f64).sqrt());
    HiggsVacuum::new(spaces.clone(), h0, mu, T::lit(CONFORMAL_TOL))
}

/// `h_L`-orthogonal projectors onto `F′_R = H₀(F_R)` and its complement.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct FlSplitting<T: Real> {
    pub p_prime: Mat<T>,
    pub p_perp: Mat<T>,
}

pub fn split_fl<T: Real>(vac: &HiggsVacuum<T>) -> Result<FlSplitting<T>> {
    let h_l = &vac.spaces.h_l;
    let g = vac.h0.adjoint() * h_l * &vac.h0;
    let p_prime = &vac.h0 * inverse(&g)? * vac.h0.adjoint() * h_l;
    let p_perp = Mat::identity(vac.spaces.n_l, vac.spaces.n_l) - &p_prime;
    Ok(FlSplitting { p_prime, p_perp })
}

/// `Ψ = (Ψ_R, Ψ_L)` with `Ψ_R` in `F_R⊗U` (`n_R×2`) and `Ψ_L` in `F_L⊗Ū*` (`n_L×2`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct MatterMultiplet<T: Real> {
    pub psi_r: Mat<T>,
    pub psi_l: Mat<T>,
}

/// `ψ = (Ψ_R, Ψ′_R)` and the left-handed remainder `ν = Ψ⊥_R`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct MatterDecomposition<T: Real> {
    pub psi_r: Mat<T>,
    pub psi_r_prime: Mat<T>,
    pub nu: Mat<T>,
}

impl<T: Real> MatterDecomposition<T> {
    /// `Ψ_L = J Ψ′_R + ν`.
    pub fn recompose(&self, vac: &HiggsVacuum<T>) -> MatterMultiplet<T> {
        MatterMultiplet { psi_r: self.psi_r.clone(), psi_l: vac.isometry() * &self.psi_r_prime + &self.nu }
    }
}

pub fn decompose_matter<T: Real>(psi: &MatterMultiplet<T>, vac: &HiggsVacuum<T>) -> Result<MatterDecomposition<T>> {
    let sp = &vac.spaces;
    if psi.psi_r.shape() != (sp.n_r, 2) || psi.psi_l.shape() != (sp.n_l, 2) {
        return Err(Error::DimensionMismatch(format!(
            "multiplet blocks {:?}, {:?} for (n_R, n_L) = ({}, {})",
            psi.psi_r.shape(),
            psi.psi_l.shape(),
            sp.n_r,
            sp.n_l
        )));
    }
    let split = split_fl(vac)?;
    let j = vac.isometry();
    let psi_r_prime = inverse(&sp.h_r)? * j.adjoint() * &sp.h_l * &psi.psi_l;
    let nu = &split.p_perp * &psi.psi_l;
    Ok(MatterDecomposition { psi_r: psi.psi_r.clone(), psi_r_prime, nu })
}

/// `ξ = ξ′ + ξ⁺ + ξ⁻ + ξ⊥` with `ξ′ = P′ξP′`, `ξ⁺ = P⊥ξP′`, `ξ⁻ = P′ξP⊥`, `ξ⊥ = P⊥ξP⊥`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct LieDecomposition<T: Real> {
    pub xi_prime: Mat<T>,
    pub xi_plus: Mat<T>,
    pub xi_minus: Mat<T>,
    pub xi_perp: Mat<T>,
}

impl<T: Real> LieDecomposition<T> {
    pub fn recompose(&self) -> Mat<T> {
        &self.xi_prime + &self.xi_plus + &self.xi_minus + &self.xi_perp
    }

    /// `‖(ξ⁻)† + ξ⁺‖` with the `h_L`-adjoint.
    pub fn adjoint_residual(&self, spaces: &InternalSpaces<T>) -> Result<T> {
        Ok((spaces.adjoint_l(&self.xi_minus)? + &self.xi_plus).norm())
    }
}

/// Residual of `h_L`-anti-Hermiticity, `‖h_L ξ + ξ† h_L‖`.
pub fn anti_hermitian_residual<T: Real>(xi: &Mat<T>, h_l: &Mat<T>) -> T {
    (h_l * xi + xi.adjoint() * h_l).norm()
}

/// Random element of `𝔏_L`: `h_L⁻¹ A` with `A` anti-Hermitian.
pub fn random_lie_element<T: Real>(spaces: &InternalSpaces<T>, s: &mut Sampler) -> Result<Mat<T>> {
    let a = s.dmatrix::<T>(spaces.n_l, spaces.n_l);
    let a = (&a - a.adjoint()) * cr(T::lit(0.5));
    Ok(inverse(&spaces.h_l)? * a)
}

pub fn decompose_lie<T: Real>(xi: &Mat<T>, vac: &HiggsVacuum<T>, tol: T) -> Result<LieDecomposition<T>> {
    let n = vac.spaces.n_l;
    if xi.shape() != (n, n) {
        return Err(Error::DimensionMismatch(format!("element is {:?}, expected {n}x{n}", xi.shape())));
    }
    let r = anti_hermitian_residual(xi, &vac.spaces.h_l);
    if r > tol * (T::one() + xi.norm() * vac.spaces.h_l.norm()) {
        return Err(Error::NotAntiHermitian(r.to_f64_lossy()));
    }
    let FlSplitting { p_prime: p, p_perp: q } = split_fl(vac)?;
    Ok(LieDecomposition {
        xi_prime: &p * xi * &p,
        xi_plus: &q * xi * &p,
        xi_minus: &p * xi * &q,
        xi_perp: &q * xi * &q,
    })
}

/// `V(φ) = λ(2μ²⟨φ̄,φ⟩ − ⟨φ̄,φ⟩²)`.
pub fn higgs_potential<T: Real>(phi: &Mat<T>, vac: &HiggsVacuum<T>, lambda: T) -> Result<T> {
    let c = vac.spaces.contraction(phi)?;
    let two = T::lit(2.0);
    Ok(lambda * (two * vac.mu * vac.mu * c - c * c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn electroweak_shape() {
        let sp = InternalSpaces::<f64>::identity(1, 2);
        let h0 = Mat::from_column_slice(2, 1, &[cr(0.0), cr(1.0)]);
        let vac = HiggsVacuum::new(sp, h0, 1.0, 1e-12).unwrap();
        let split = split_fl(&vac).unwrap();
        let want = Mat::from_diagonal(&nalgebra::DVector::from_vec(vec![cr(0.0), cr(1.0)]));
        assert!((split.p_prime - want).norm() < 1e-15);
    }

    #[test]
    fn rejects_bad_shapes() {
        let sp = InternalSpaces::<f64>::identity(3, 2);
        assert!(matches!(make_vacuum(&sp, 1.0, 1), Err(Error::RightExceedsLeft { .. })));
        let sp = InternalSpaces::<f64>::identity(1, 2);
        assert!(matches!(HiggsVacuum::new(sp.clone(), Mat::zeros(2, 1), 1.0, 1e-12), Err(Error::RankDeficient)));
        let h0 = Mat::from_column_slice(2, 1, &[cr(0.0), cr(2.0)]);
        assert!(matches!(HiggsVacuum::new(sp, h0, 1.0, 1e-12), Err(Error::NotConformal(_))));
        let bad = Mat::from_diagonal(&nalgebra::DVector::from_vec(vec![cr(1.0), cr(-1.0)]));
        assert!(matches!(InternalSpaces::new(Mat::identity(1, 1), bad), Err(Error::BadMetric)));
    }
}
