use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::grid::{pair_index, Grid4, PAIRS};
use super::lie::{anti_hermitian_part, commutator};
use crate::error::{Error, Result};
use crate::sample::Sampler;
use crate::scalar::{cr, Cx, Real};
use crate::spinor::ETA;

/// Grid-sampled coefficients `α_a(x)` of an `𝔏`-valued 1-form; the zero
/// field is the flat connection `γ₀` of the chosen frame.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct ConnectionField<T: Real> {
    pub grid: Grid4<T>,
    /// Matrix dimension `n` of the fibre.
    pub n: usize,
    /// `data[4 * node + a] = α_a(node)`.
    pub data: Vec<DMatrix<Cx<T>>>,
}

impl<T: Real> ConnectionField<T> {
    pub fn zeros(grid: Grid4<T>, n: usize) -> Self {
        Self { grid, n, data: vec![DMatrix::zeros(n, n); 4 * grid.len()] }
    }

    pub fn from_fn(
        grid: Grid4<T>,
        n: usize,
        mut f: impl FnMut([T; 4], usize) -> DMatrix<Cx<T>>,
    ) -> Self {
        let mut data = Vec::with_capacity(4 * grid.len());
        for node in 0..grid.len() {
            let x = grid.coords(node);
            for a in 0..4 {
                data.push(f(x, a));
            }
        }
        Self { grid, n, data }
    }

    pub fn at(&self, node: usize, a: usize) -> &DMatrix<Cx<T>> {
        &self.data[4 * node + a]
    }

    /// Largest `‖α + α†‖` over the grid.
    pub fn anti_hermitian_residual(&self) -> T {
        self.data.iter().map(|m| (m + m.adjoint()).norm()).fold(T::zero(), |a, b| a.max(b))
    }

    /// Central difference `∂_b α_a` at `node`.
    fn derivative(&self, node: usize, a: usize, b: usize) -> DMatrix<Cx<T>> {
        let fwd = self.grid.shift(node, b, 1);
        let bwd = self.grid.shift(node, b, -1);
        (self.at(fwd, a) - self.at(bwd, a)) * cr(T::one() / (T::lit(2.0) * self.grid.h))
    }
}

/// A grid of unitary matrices `K(x)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct GaugeTransformField<T: Real> {
    pub grid: Grid4<T>,
    pub n: usize,
    pub data: Vec<DMatrix<Cx<T>>>,
}

impl<T: Real> GaugeTransformField<T> {
    pub fn new(grid: Grid4<T>, n: usize, data: Vec<DMatrix<Cx<T>>>, tol: T) -> Result<Self> {
        if data.len() != grid.len() {
            return Err(Error::GridMismatch);
        }
        let id = DMatrix::<Cx<T>>::identity(n, n);
        for k in &data {
            if k.nrows() != n || k.ncols() != n {
                return Err(Error::DimensionMismatch(format!("expected {n}x{n} matrices")));
            }
            let r = (k.adjoint() * k - &id).norm();
            if r > tol {
                return Err(Error::NotUnitary(r.to_f64_lossy()));
            }
        }
        Ok(Self { grid, n, data })
    }

    /// The same unitary at every node.
    pub fn constant(grid: Grid4<T>, k: DMatrix<Cx<T>>, tol: T) -> Result<Self> {
        let n = k.nrows();
        Self::new(grid, n, vec![k; grid.len()], tol)
    }

    pub fn identity(grid: Grid4<T>, n: usize) -> Self {
        Self { grid, n, data: vec![DMatrix::identity(n, n); grid.len()] }
    }
}

/// Curvature components `F_ab(x)` for `a < b`; `F_ba = −F_ab`, `F_aa = 0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct FieldStrength<T: Real> {
    pub grid: Grid4<T>,
    pub n: usize,
    /// `data[6 * node + pair_index(a, b)]`.
    pub data: Vec<DMatrix<Cx<T>>>,
}

impl<T: Real> FieldStrength<T> {
    pub fn get(&self, node: usize, a: usize, b: usize) -> DMatrix<Cx<T>> {
        use std::cmp::Ordering::*;
        match a.cmp(&b) {
            Equal => DMatrix::zeros(self.n, self.n),
            Less => self.data[6 * node + pair_index(a, b)].clone(),
            Greater => -self.data[6 * node + pair_index(b, a)].clone(),
        }
    }

    /// Largest Frobenius norm of any component.
    pub fn max_norm(&self) -> T {
        self.data.iter().map(|m| m.norm()).fold(T::zero(), |a, b| a.max(b))
    }
}

/// `F_ab = ∂_b α_a − ∂_a α_b + [α_a, α_b]` with central differences.
///
/// This is `[D_a, D_b]` for `D = ∂ − α`, the sign convention under which
/// `F` transforms as `K F K⁻¹` when `α' = K α K⁻¹ + (∂K) K⁻¹`.
pub fn curvature<T: Real>(alpha: &ConnectionField<T>) -> Result<FieldStrength<T>> {
    let grid = Grid4::new(alpha.grid.dims, alpha.grid.h)?;
    let mut data = Vec::with_capacity(6 * grid.len());
    for node in 0..grid.len() {
        for &(a, b) in &PAIRS {
            let f = alpha.derivative(node, a, b) - alpha.derivative(node, b, a)
                + commutator(alpha.at(node, a), alpha.at(node, b));
            data.push(f);
        }
    }
    Ok(FieldStrength { grid, n: alpha.n, data })
}

/// `α'_a = K α_a K⁻¹ + (∂_a K) K⁻¹`, re-projected onto anti-Hermitian
/// matrices.
pub fn gauge_transform<T: Real>(
    alpha: &ConnectionField<T>,
    k: &GaugeTransformField<T>,
) -> Result<ConnectionField<T>> {
    alpha.grid.ensure_same(&k.grid)?;
    if alpha.n != k.n {
        return Err(Error::DimensionMismatch(format!("{} vs {}", alpha.n, k.n)));
    }
    let grid = Grid4::new(alpha.grid.dims, alpha.grid.h)?;
    let inv2h = cr(T::one() / (T::lit(2.0) * grid.h));
    let mut data = Vec::with_capacity(alpha.data.len());
    for node in 0..grid.len() {
        let kx = &k.data[node];
        let kinv = kx.adjoint();
        for a in 0..4 {
            let dk = (&k.data[grid.shift(node, a, 1)] - &k.data[grid.shift(node, a, -1)]) * inv2h;
            let m = kx * alpha.at(node, a) * &kinv + dk * &kinv;
            data.push(anti_hermitian_part(&m));
        }
    }
    Ok(ConnectionField { grid, n: alpha.n, data })
}

/// `s(x) = Σ_ab η^{aa} η^{bb} Re tr(F_ab F_ab)`.
pub fn invariant_scalar<T: Real>(f: &FieldStrength<T>) -> Vec<T> {
    let eta = ETA.map(T::lit);
    (0..f.grid.len())
        .map(|node| {
            let mut s = T::zero();
            for &(a, b) in &PAIRS {
                let fab = &f.data[6 * node + pair_index(a, b)];
                // Both orderings (a,b) and (b,a) contribute equally.
                s += T::lit(2.0) * eta[a] * eta[b] * (fab * fab).trace().re;
            }
            s
        })
        .collect()
}

/// Random anti-Hermitian `n×n` matrix with unit Frobenius norm.
pub fn random_anti_hermitian<T: Real>(s: &mut Sampler, n: usize) -> DMatrix<Cx<T>> {
    let m = anti_hermitian_part(&s.dmatrix::<T>(n, n));
    let norm = m.norm();
    m / cr(norm)
}

/// Smooth periodic connection built from one Fourier mode per axis pair:
/// `α_a(x) = Σ_b ξ_ab sin(x_b + φ_ab)` with random anti-Hermitian `ξ_ab`.
pub fn smooth_connection<T: Real>(grid: Grid4<T>, n: usize, amplitude: T, seed: u64) -> ConnectionField<T> {
    let mut s = Sampler::new(seed);
    let modes: Vec<(DMatrix<Cx<T>>, T)> = (0..16)
        .map(|_| (random_anti_hermitian::<T>(&mut s, n) * cr(amplitude), s.uniform(0.0, std::f64::consts::TAU)))
        .collect();
    ConnectionField::from_fn(grid, n, |x, a| {
        let mut m = DMatrix::zeros(n, n);
        for b in 0..4 {
            let (xi, ph) = &modes[4 * a + b];
            m += xi * cr((x[b] + *ph).sin());
        }
        m
    })
}

/// Smooth periodic unitary field `K(x) = exp(Σ_a c_a sin(x_a + φ_a) ξ_a)`.
pub fn smooth_unitary_field<T: Real>(grid: Grid4<T>, n: usize, amplitude: T, seed: u64) -> GaugeTransformField<T> {
    let mut s = Sampler::new(seed);
    let modes: Vec<(DMatrix<Cx<T>>, T)> = (0..4)
        .map(|_| (random_anti_hermitian::<T>(&mut s, n) * cr(amplitude), s.uniform(0.0, std::f64::consts::TAU)))
        .collect();
    let data = (0..grid.len())
        .map(|node| {
            let x = grid.coords(node);
            let mut gen = DMatrix::zeros(n, n);
            for (a, (xi, ph)) in modes.iter().enumerate() {
                gen += xi * cr((x[a] + *ph).sin());
            }
            gen.exp()
        })
        .collect();
    GaugeTransformField { grid, n, data }
}
