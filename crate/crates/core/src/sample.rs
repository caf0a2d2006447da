//! Seeded random generators for test inputs and the verification harness.

use nalgebra::{DMatrix, Matrix2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::scalar::{Cx, Real};
use crate::spinor::{ComplexHVector, ConjCoSpinor, DiracSpinor, TwoSpinor};

/// Deterministic generator shared by tests and the CLI.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn normal<T: Real>(&mut self) -> T {
        let x: f64 = self.rng.sample(StandardNormal);
        T::lit(x)
    }

    pub fn uniform<T: Real>(&mut self, lo: f64, hi: f64) -> T {
        T::lit(self.rng.random_range(lo..hi))
    }

    pub fn complex<T: Real>(&mut self) -> Cx<T> {
        Cx::new(self.normal(), self.normal())
    }

    pub fn two_spinor<T: Real>(&mut self) -> TwoSpinor<T> {
        TwoSpinor::new(self.complex(), self.complex())
    }

    pub fn dirac_spinor<T: Real>(&mut self) -> DiracSpinor<T> {
        DiracSpinor::new(self.two_spinor(), ConjCoSpinor::new(self.complex(), self.complex()))
    }

    pub fn matrix2<T: Real>(&mut self) -> Matrix2<Cx<T>> {
        Matrix2::from_fn(|_, _| self.complex())
    }

    pub fn complex_hvector<T: Real>(&mut self) -> ComplexHVector<T> {
        ComplexHVector::new(self.matrix2())
    }

    /// Random Hermitian element of `H` with O(1) entries.
    pub fn hermitian_hvector<T: Real>(&mut self) -> ComplexHVector<T> {
        let m = self.matrix2::<T>();
        ComplexHVector::new((m + m.adjoint()) * Cx::new(T::lit(0.5), T::zero()))
    }

    pub fn dmatrix<T: Real>(&mut self, rows: usize, cols: usize) -> DMatrix<Cx<T>> {
        DMatrix::from_fn(rows, cols, |_, _| self.complex())
    }

    /// Spatial momentum with components uniform in `[-r, r]`.
    pub fn momentum3<T: Real>(&mut self, r: f64) -> [T; 3] {
        [self.uniform(-r, r), self.uniform(-r, r), self.uniform(-r, r)]
    }
}
