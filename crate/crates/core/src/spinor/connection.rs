//! Decomposition of spinor-connection coefficients.

use nalgebra::Matrix2;
use serde::{Deserialize, Serialize};

use crate::scalar::{cr, Cx, Real};

/// Coefficients `Γ_a`, one 2×2 complex matrix per spacetime index.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct SpinorConnectionCoefficients<T: Real> {
    pub gamma: Vec<Matrix2<Cx<T>>>,
}

/// `Γ_a = (G_a + i Y_a) 𝟙 + ½ Γ̃_a` with `tr Γ̃_a = 0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct ConnectionParts<T: Real> {
    pub g: Vec<T>,
    pub y: Vec<T>,
    pub gamma_tilde: Vec<Matrix2<Cx<T>>>,
}

impl<T: Real> SpinorConnectionCoefficients<T> {
    pub fn new(gamma: Vec<Matrix2<Cx<T>>>) -> Self {
        Self { gamma }
    }

    pub fn decompose(&self) -> ConnectionParts<T> {
        decompose_spinor_connection(self)
    }
}

pub fn decompose_spinor_connection<T: Real>(
    coeffs: &SpinorConnectionCoefficients<T>,
) -> ConnectionParts<T> {
    let half = T::lit(0.5);
    let mut parts = ConnectionParts { g: vec![], y: vec![], gamma_tilde: vec![] };
    for ga in &coeffs.gamma {
        let tr = ga.trace() * cr(half);
        parts.g.push(tr.re);
        parts.y.push(tr.im);
        parts.gamma_tilde.push((ga - Matrix2::identity() * tr) * cr(T::lit(2.0)));
    }
    parts
}

impl<T: Real> ConnectionParts<T> {
    pub fn recompose(&self) -> SpinorConnectionCoefficients<T> {
        let gamma = self
            .g
            .iter()
            .zip(&self.y)
            .zip(&self.gamma_tilde)
            .map(|((&g, &y), gt)| Matrix2::identity() * Cx::new(g, y) + gt * cr(T::lit(0.5)))
            .collect();
        SpinorConnectionCoefficients { gamma }
    }
}
