use nalgebra::Matrix2;
use serde::{Deserialize, Serialize};

use super::grid::{pair_index, Grid4, PAIRS};
use crate::error::{Error, Result};
use crate::scalar::{Cx, Real};
use crate::spinor::{ConnectionParts, SpinorConnectionCoefficients};

/// Spinor-connection coefficients `Γ_a(x)` sampled on a grid.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct SpinorConnectionGrid<T: Real> {
    pub grid: Grid4<T>,
    /// `gamma[4 * node + a] = Γ_a(node)`.
    pub gamma: Vec<Matrix2<Cx<T>>>,
}

impl<T: Real> SpinorConnectionGrid<T> {
    pub fn from_fn(grid: Grid4<T>, mut f: impl FnMut([T; 4], usize) -> Matrix2<Cx<T>>) -> Self {
        let mut gamma = Vec::with_capacity(4 * grid.len());
        for node in 0..grid.len() {
            let x = grid.coords(node);
            for a in 0..4 {
                gamma.push(f(x, a));
            }
        }
        Self { grid, gamma }
    }
}

/// Dilaton `G`, electromagnetic potential `Y`, and derived 2-forms.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct DilatonEmFields<T: Real> {
    /// `g[4 * node + a] = G_a`.
    pub g: Vec<T>,
    pub y: Vec<T>,
    pub gamma_tilde: Vec<Matrix2<Cx<T>>>,
    /// `(dG)_ab` for `a < b`, six per node.
    pub dg: Vec<T>,
    /// `F_em = 2 dY`, six per node.
    pub f_em: Vec<T>,
    /// `max |dG|`, the obstruction to gauging the dilaton away.
    pub dg_residual: T,
}

impl<T: Real> DilatonEmFields<T> {
    pub fn recompose(&self, grid: Grid4<T>) -> SpinorConnectionGrid<T> {
        let parts = ConnectionParts { g: self.g.clone(), y: self.y.clone(), gamma_tilde: self.gamma_tilde.clone() };
        SpinorConnectionGrid { grid, gamma: parts.recompose().gamma }
    }
}

fn exterior_derivative<T: Real>(grid: &Grid4<T>, field: &[T]) -> Vec<T> {
    let inv2h = T::one() / (T::lit(2.0) * grid.h);
    let d = |node: usize, a: usize, b: usize| {
        (field[4 * grid.shift(node, b, 1) + a] - field[4 * grid.shift(node, b, -1) + a]) * inv2h
    };
    let mut out = vec![T::zero(); 6 * grid.len()];
    for node in 0..grid.len() {
        for &(a, b) in &PAIRS {
            out[6 * node + pair_index(a, b)] = d(node, b, a) - d(node, a, b);
        }
    }
    out
}

/// Per-node decomposition `Γ_a = (G_a + i Y_a) 𝟙 + ½ Γ̃_a`, with
/// `(dG)_ab = ∂_a G_b − ∂_b G_a` and `F_em = 2 dY` by central differences.
pub fn decompose_internal_dilaton_em<T: Real>(gamma: &SpinorConnectionGrid<T>) -> Result<DilatonEmFields<T>> {
    let grid = Grid4::new(gamma.grid.dims, gamma.grid.h)?;
    if gamma.gamma.len() != 4 * grid.len() {
        return Err(Error::GridMismatch);
    }
    let parts = SpinorConnectionCoefficients::new(gamma.gamma.clone()).decompose();
    let dg = exterior_derivative(&grid, &parts.g);
    let f_em: Vec<T> = exterior_derivative(&grid, &parts.y).into_iter().map(|v| v * T::lit(2.0)).collect();
    let dg_residual = dg.iter().fold(T::zero(), |m, v| m.max(v.abs()));
    Ok(DilatonEmFields { g: parts.g, y: parts.y, gamma_tilde: parts.gamma_tilde, dg, f_em, dg_residual })
}
