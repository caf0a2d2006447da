//! Fiberwise two-spinor algebra: ε forms, the Lorentz metric on `ℂ ⊗ H`,
//! Pauli and Weyl bases, the Clifford map and Dirac adjunction.

pub mod connection;
pub mod dirac;
pub mod hvector;
pub mod two;

pub use connection::{decompose_spinor_connection, ConnectionParts, SpinorConnectionCoefficients};
pub use dirac::{
    clifford, dirac_adjoint, dirac_pairing, pairing_matrix, pairing_signature, CoDiracSpinor,
    DiracOperator, DiracSpinor,
};
pub use hvector::{
    metric_g, pauli_basis, pauli_basis_in_frame, pauli_matrices, ComplexHVector, ETA,
};
pub use two::{ConjCoSpinor, ConjSpinor, CoSpinor, EpsilonForm, TwoSpinor};

/// `ε(θ)`, the symplectic form with phase `e^{iθ}`.
pub fn make_epsilon<T: crate::Real>(theta: T) -> EpsilonForm<T> {
    EpsilonForm::new(theta)
}
