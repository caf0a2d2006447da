use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{cr, Cx, Real};
use crate::spinor::pauli_matrices;

pub fn commutator<T: Real>(a: &DMatrix<Cx<T>>, b: &DMatrix<Cx<T>>) -> DMatrix<Cx<T>> {
    a * b - b * a
}

/// `(X − X†)/2`.
pub fn anti_hermitian_part<T: Real>(x: &DMatrix<Cx<T>>) -> DMatrix<Cx<T>> {
    (x - x.adjoint()) * cr(T::lit(0.5))
}

/// An element of the Lie algebra of `U(n)`: an anti-Hermitian `n×n` matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct LieAlgebraElement<T: Real> {
    pub m: DMatrix<Cx<T>>,
}

impl<T: Real> LieAlgebraElement<T> {
    pub fn new(m: DMatrix<Cx<T>>, tol: T) -> Result<Self> {
        let r = (&m + m.adjoint()).norm();
        if r > tol * (T::one() + m.norm()) {
            return Err(Error::NotAntiHermitian(r.to_f64_lossy()));
        }
        Ok(Self { m })
    }

    /// Anti-Hermitian projection of an arbitrary square matrix.
    pub fn project(m: &DMatrix<Cx<T>>) -> Self {
        Self { m: anti_hermitian_part(m) }
    }

    pub fn zero(n: usize) -> Self {
        Self { m: DMatrix::zeros(n, n) }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn bracket(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(format!("{} vs {}", self.dim(), other.dim())));
        }
        Ok(Self { m: commutator(&self.m, &other.m) })
    }
}

/// A real basis `𝔩_i` of a matrix Lie algebra.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct LieBasis<T: Real> {
    pub elements: Vec<DMatrix<Cx<T>>>,
}

impl<T: Real> LieBasis<T> {
    /// `𝔩_i = −(i/2) σ_i`, so that `[𝔩_j, 𝔩_k] = ε_{ijk} 𝔩_i`.
    pub fn su2() -> Self {
        let sig = pauli_matrices::<T>();
        let f = Cx::new(T::zero(), -T::lit(0.5));
        let elements = (1..4)
            .map(|i| DMatrix::from_fn(2, 2, |r, c| sig[i][(r, c)] * f))
            .collect();
        Self { elements }
    }

    /// `𝔩 = i` acting on `ℂ`.
    pub fn u1() -> Self {
        Self { elements: vec![DMatrix::from_element(1, 1, Cx::new(T::zero(), T::one()))] }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn matrix_dim(&self) -> usize {
        self.elements.first().map_or(0, |e| e.nrows())
    }

    /// Real coordinates of `x` in the basis (least squares for the real
    /// inner product `Re tr(A† B)`).
    pub fn coords(&self, x: &DMatrix<Cx<T>>) -> Vec<T> {
        let n = self.len();
        let ip = |a: &DMatrix<Cx<T>>, b: &DMatrix<Cx<T>>| a.dotc(b).re;
        let gram = DMatrix::from_fn(n, n, |i, j| ip(&self.elements[i], &self.elements[j]));
        let rhs = DVector::from_fn(n, |i, _| ip(&self.elements[i], x));
        let sol = gram.lu().solve(&rhs).expect("basis elements are independent");
        sol.iter().copied().collect()
    }

    pub fn combine(&self, coeffs: &[T]) -> DMatrix<Cx<T>> {
        let d = self.matrix_dim();
        let mut out = DMatrix::zeros(d, d);
        for (c, e) in coeffs.iter().zip(&self.elements) {
            out += e * cr(*c);
        }
        out
    }

    /// `c[i][j][k]` with `[𝔩_j, 𝔩_k] = c^i_{jk} 𝔩_i`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<T>>> {
        let n = self.len();
        let mut c = vec![vec![vec![T::zero(); n]; n]; n];
        for j in 0..n {
            for k in 0..n {
                let br = commutator(&self.elements[j], &self.elements[k]);
                for (i, v) in self.coords(&br).into_iter().enumerate() {
                    c[i][j][k] = v;
                }
            }
        }
        c
    }
}

/// `(α⊼β)_{ab} = [α_a, β_b]` for `𝔏`-valued covectors.
pub fn barwedge<T: Real>(
    alpha: &[DMatrix<Cx<T>>; 4],
    beta: &[DMatrix<Cx<T>>; 4],
) -> Result<[[DMatrix<Cx<T>>; 4]; 4]> {
    let n = alpha[0].nrows();
    if alpha.iter().chain(beta.iter()).any(|m| m.nrows() != n || m.ncols() != n) {
        return Err(Error::DimensionMismatch("covector coefficients differ in size".into()));
    }
    Ok(std::array::from_fn(|a| std::array::from_fn(|b| commutator(&alpha[a], &beta[b]))))
}

/// `(α⊼β)^i_{ab} = c^i_{jk} α^j_a β^k_b` from structure constants; inputs
/// are basis coordinates `alpha[a][j]`.
pub fn barwedge_structure<T: Real>(
    c: &[Vec<Vec<T>>],
    alpha: &[Vec<T>; 4],
    beta: &[Vec<T>; 4],
) -> Result<[[Vec<T>; 4]; 4]> {
    let n = c.len();
    if alpha.iter().chain(beta.iter()).any(|v| v.len() != n) {
        return Err(Error::DimensionMismatch(format!("expected {n} coordinates")));
    }
    Ok(std::array::from_fn(|a| {
        std::array::from_fn(|b| {
            (0..n)
                .map(|i| {
                    let mut s = T::zero();
                    for j in 0..n {
                        for k in 0..n {
                            s += c[i][j][k] * alpha[a][j] * beta[b][k];
                        }
                    }
                    s
                })
                .collect()
        })
    }))
}
