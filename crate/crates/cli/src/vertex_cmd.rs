//! `vertex`: both evaluation paths of the point interaction for one triple.

use nalgebra::Vector4;
use serde::{Deserialize, Serialize};
use twospinor::dirac_split::{dirac_frame_at, state_species, FermionSpecies, OnShellMomentum};
use twospinor::spinor::{ComplexHVector, DiracSpinor};
use twospinor::vertex::{ell_int, k_vertex_theorem, vertex_kernel, vertex_two_spinor, KSign, VertexCoupling};
use twospinor::Cx;

use crate::report::{complex, Check};
use crate::CliError;

const TOL: f64 = 1e-12;

fn one() -> f64 {
    1.0
}

/// A Dirac spinor given either by Weyl components or as a frame vector on the mass shell.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpinorInput {
    Weyl(Vec<[f64; 2]>),
    OnShell { species: FermionSpecies, mass: f64, momentum: [f64; 3], spin: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexInput {
    #[serde(default = "one")]
    pub coupling: f64,
    pub phi: SpinorInput,
    pub psi: SpinorInput,
    /// Pauli components of `A#`.
    pub a: Vec<[f64; 2]>,
}

fn four(name: &str, v: &[[f64; 2]]) -> Result<[Cx<f64>; 4], CliError> {
    if v.len() != 4 {
        return Err(CliError::Input(format!("{name} has {} components, expected 4", v.len())));
    }
    Ok(std::array::from_fn(|i| Cx::new(v[i][0], v[i][1])))
}

fn spinor(name: &str, s: &SpinorInput) -> Result<DiracSpinor<f64>, CliError> {
    match s {
        SpinorInput::Weyl(c) => Ok(DiracSpinor::from_weyl(Vector4::from(four(name, c)?))),
        SpinorInput::OnShell { species, mass, momentum, spin } => {
            if *spin > 1 {
                return Err(CliError::Input(format!("{name}: spin index {spin} out of range")));
            }
            let p = OnShellMomentum::new(*mass, *momentum).map_err(|e| CliError::Input(format!("{name}: {e}")))?;
            let f = dirac_frame_at(&p).map_err(|e| CliError::Input(format!("{name}: {e}")))?;
            Ok(match species {
                FermionSpecies::Electron => f.u[*spin],
                FermionSpecies::Positron => f.v[*spin],
            })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexReport {
    pub coupling: f64,
    pub amplitude: [f64; 2],
    pub amplitude_two_spinor: [f64; 2],
    /// Pauli components of a basis of potentials with zero amplitude.
    pub kernel_basis: Option<Vec<[[f64; 2]; 4]>>,
    pub phi_species: Option<FermionSpecies>,
    pub psi_species: Option<FermionSpecies>,
    pub k_plus: Option<[f64; 2]>,
    pub k_minus: Option<[f64; 2]>,
    pub k_plus_vanishes: Option<bool>,
    pub k_minus_vanishes: Option<bool>,
    pub checks: Vec<Check>,
    pub passed: bool,
}

pub fn run(input: &VertexInput) -> Result<VertexReport, CliError> {
    let phi = spinor("phi", &input.phi)?;
    let psi = spinor("psi", &input.psi)?;
    let a = ComplexHVector::from_pauli(four("a", &input.a)?);
    let c = VertexCoupling { e: input.coupling };
    let amp = ell_int(&c, &phi, &a, &psi);
    let two = vertex_two_spinor(&phi, &a, &psi) * Cx::new(-input.coupling, 0.0);
    let scale = 1.0 + phi.norm() * psi.norm() * (1.0 + a.norm());
    let mut checks = vec![Check::bound(
        "vertex.two_paths",
        "matrix and two-spinor vertex agree",
        TOL,
        (amp - two).norm() / scale,
    )];

    let kernel = vertex_kernel(&phi, &psi).ok();
    if let Some(ker) = &kernel {
        let worst = ker.iter().map(|k| ell_int(&c, &phi, k, &psi).norm()).fold(0.0, f64::max);
        checks.push(Check::bound(
            "vertex.kernel_annihilated",
            "kernel basis annihilates the amplitude",
            TOL,
            worst / (1.0 + phi.norm() * psi.norm()),
        ));
    }

    let norm = phi.norm() * psi.norm();
    let k_val = |sign| k_vertex_theorem(&phi, &psi, sign).ok();
    let (kp, km) = (k_val(KSign::Plus), k_val(KSign::Minus));
    let vanishes = |v: Option<Cx<f64>>| v.map(|z| z.norm() <= TOL * norm);
    let (phi_species, psi_species) = (state_species(&phi).ok(), state_species(&psi).ok());
    if let (Some(a), Some(b)) = (psi_species, phi_species) {
        let v = match KSign::vanishing_for(a, b) {
            KSign::Plus => kp,
            KSign::Minus => km,
        };
        if let Some(v) = v {
            checks.push(Check::bound("vertex.k_vanishing", "k-vertex identity vanishes on shell", TOL, v.norm() / norm));
        }
    }

    let passed = !checks.iter().any(Check::failed);
    Ok(VertexReport {
        coupling: input.coupling,
        amplitude: complex(amp),
        amplitude_two_spinor: complex(two),
        kernel_basis: kernel.map(|k| k.iter().map(|b| b.pauli_components().map(complex)).collect()),
        phi_species,
        psi_species,
        k_plus: kp.map(complex),
        k_minus: km.map(complex),
        k_plus_vanishes: vanishes(kp),
        k_minus_vanishes: vanishes(km),
        checks,
        passed,
    })
}
