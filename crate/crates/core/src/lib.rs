//! Two-spinor geometry of classical and quantum fields, numerically.
//!
//! All numerics are generic over [`Real`] (`f32` or `f64`); the `*F64`
//! aliases below fix the scalar type for everyday use.

pub mod dirac_split;
pub mod error;
pub mod fock;
pub mod gauge;
pub mod photon;
pub mod sample;
pub mod vertex;
pub mod scalar;
pub mod spinor;
pub mod symmetry;

pub use error::{Error, Result};
pub use scalar::{cabs, cr, cx, Cx, Real, Scale, ScaledValue};

pub type TwoSpinorF64 = spinor::TwoSpinor<f64>;
pub type TwoSpinorF32 = spinor::TwoSpinor<f32>;
pub type ComplexHVectorF64 = spinor::ComplexHVector<f64>;
pub type ComplexHVectorF32 = spinor::ComplexHVector<f32>;
pub type DiracSpinorF64 = spinor::DiracSpinor<f64>;
pub type DiracSpinorF32 = spinor::DiracSpinor<f32>;
pub type DiracOperatorF64 = spinor::DiracOperator<f64>;
pub type DiracOperatorF32 = spinor::DiracOperator<f32>;
