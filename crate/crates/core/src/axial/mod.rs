//! Finite-dimensional Griess algebras given by structure constants.
//!
//! Holds the 3C algebra and the nine-dimensional algebra spanned by the
//! lattice axes, Virasoro certification, adjoint spectra, Miyamoto
//! involutions, matrix-group closure and central-charge bookkeeping.

mod algebra;
mod charges;
mod group;
mod maps;
mod named;

pub use algebra::{build_3c, build_g9, g9_index, isomorphism_check, StructureAlgebra, Vector};
pub use charges::{affine_central_charge, parafermion_central_charge, LieType};
pub use group::{group_closure, MatrixGroup, DEFAULT_CLOSURE_BOUND};
pub use maps::{adjoint, certify_axis, certify_virasoro, highest_weight_check, miyamoto_sigma, miyamoto_tau, AxisCertificate, LinearEndo};
pub use named::{a_vectors, b1, check_a_products, frame, g9_omega, AProductReport};

use thiserror::Error;

use crate::numerics::{NumericsError, Rational};

#[derive(Debug, Error)]
pub enum AxialError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("product table is not commutative at ({0},{1})")]
    NotCommutative(usize, usize),
    #[error("gram matrix is not symmetric")]
    AsymmetricForm,
    #[error("malformed algebra text: {0:?}")]
    Parse(String),
    #[error("vector is not idempotent (v·v ≠ 2v)")]
    NotIdempotent,
    #[error("central charge {found} where {expected} was required")]
    WrongCentralCharge { expected: Rational, found: Rational },
    #[error("eigenspaces for {{2, 0, 1/2, 1/16}} span {found} of {dim} dimensions")]
    UnexpectedEigenvalues { found: usize, dim: usize },
    #[error("map does not preserve {0}")]
    NotAutomorphism(&'static str),
    #[error("closure exceeded {0} elements")]
    ClosureBound(usize),
    #[error("vector is not an eigenvector of frame element {0}")]
    NotEigenvector(usize),
    #[error("{0}")]
    Check(String),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}
