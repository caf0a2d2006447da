//! Desk-scale Fock engine on a momentum lattice: modes, ladder algebra, the
//! `Λ⁽³⁾` kernel, assembly of `𝔥(t)`, evolution and scattering amplitudes.

pub mod evolve;
pub mod hamiltonian;
pub mod kernel;
pub mod lattice;
pub mod modes;
pub mod scatter;
pub mod scenario;
pub mod state;

pub use evolve::{
    dyson_second_order, evolve, evolve_state, nested_time_integral, time_integral, EvolutionOperator,
    TimeDependentOperator,
};
pub use hamiltonian::{
    assemble_hamiltonian, build_basis, AssembledHamiltonian, FockBasis, QedModel, SparseTimeOperator, Transition,
};
pub use kernel::{build_kernel, InteractionKernel, Leg};
pub use lattice::{generalized_contract, leray_weight, LatticeDensity, MomentumLattice, Site};
pub use modes::{Mode, ModeTable, SpeciesKind};
pub use scatter::{log_log_slope, ScatteringProblem, WindowAmplitude};
pub use scenario::{config_of, run_scenario, ModeSpec, Scenario, ScatterReport};
pub use state::{apply_string, FockConfig, FockState, Ladder, ModeIndex, Statistics};
