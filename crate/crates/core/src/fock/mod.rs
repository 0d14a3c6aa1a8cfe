//! The weight ≤ 2 part of a lattice vertex algebra V_L over ℚ(ζ): sparse
//! states, the general mode product a_n b, the Griess product a₁b and the
//! pairing a₃b, Virasoro and Ising vectors, the Sugawara element, and the
//! automorphisms ρ and θ.

mod axes;
mod engine;
mod state;
mod voa;

use thiserror::Error;

use crate::cocycle::CocycleError;
use crate::lattice::LatticeError;
use crate::numerics::NumericsError;

pub use axes::*;
pub use state::{FockMonomial, FockState, Osc};
pub use voa::{cycle_blocks, rho_twist, theta, twist, virasoro_of_subspace, LatticeVoa};

#[derive(Debug, Error)]
pub enum FockError {
    #[error("result would have weight {0}, above the cap of 2")]
    WeightOverflow(i64),
    #[error("expected weight {expected}, found {found}")]
    WeightMismatch { expected: i64, found: i64 },
    #[error("state is not homogeneous")]
    Inhomogeneous,
    #[error("exponent not in the lattice: {0}")]
    NotInLattice(String),
    #[error("degenerate subspace: {0}")]
    Degenerate(String),
    #[error("{label} is not a copy of √2E8 ({roots} roots, {norm4} vectors of norm 4)")]
    WrongShell { label: String, roots: usize, norm4: usize },
    #[error("malformed state: {0}")]
    Malformed(String),
    #[error("{0} is not idempotent")]
    NotIdempotent(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}
