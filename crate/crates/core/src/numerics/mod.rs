//! Exact scalars and dense linear algebra.
//!
//! Everything here is exact: rationals are arbitrary precision and always
//! reduced, [`Eisenstein`] numbers live in the quadratic field generated by a
//! primitive cube root of unity, and matrix routines never round.

mod eisenstein;
mod matrix;
mod rational;

pub use eisenstein::Eisenstein;
pub use matrix::{Matrix, RatMatrix, Rref};
pub use rational::{int, parse_rational, rat, Rational};

use std::fmt::Debug;
use std::ops::{Neg, Sub};

use num_traits::{One, Zero};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumericsError {
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

/// The scalar operations needed by the elimination routines.
pub trait Field: Clone + PartialEq + Debug + Send + Sync + Zero + One + Sub<Output = Self> + Neg<Output = Self> {
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
}
