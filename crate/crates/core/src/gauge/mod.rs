//! Classical gauge freedom on a periodic 4D grid: connection forms,
//! gauge transformations, curvature, invariant scalars and radiative classes.

pub mod dilaton;
pub mod field;
pub mod grid;
pub mod io;
pub mod lie;
pub mod radiative;

pub use dilaton::{decompose_internal_dilaton_em, DilatonEmFields, SpinorConnectionGrid};
pub use field::{
    curvature, gauge_transform, invariant_scalar, random_anti_hermitian, smooth_connection,
    smooth_unitary_field, ConnectionField, FieldStrength, GaugeTransformField,
};
pub use grid::{pair_index, Grid4, PAIRS};
pub use lie::{barwedge, barwedge_structure, commutator, LieAlgebraElement, LieBasis};
pub use radiative::{
    class_equivalent, class_residual, rho, rho_discrepancy, RadiativeGaugeClass,
};
