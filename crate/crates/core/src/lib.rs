//! Exact computations with finite-dimensional Hopf algebras and their partial
//! actions and coactions: axiom checkers, globalizations and smash products.
//!
//! Everything is generic over [`Scalar`]; [`Rational`] and [`Zp`] are the two
//! provided fields.

pub mod actions;
pub mod algebra;
pub mod coactions;
pub mod error;
pub mod examples;
pub mod globalization;
pub mod group;
pub mod io;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod smash;

pub use algebra::{AlgebraData, BimoduleAlgebra, HopfData};
pub use error::{Error, Result};
pub use group::GroupTable;
pub use linalg::{Mat, Subspace, Tensor3};
pub use report::{Failure, Report};
pub use scalar::{FieldSpec, Scalar, Zp};

/// Arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;

pub type QAlgebra = AlgebraData<Rational>;
pub type QHopf = HopfData<Rational>;
pub type FpAlgebra = AlgebraData<Zp>;
pub type FpHopf = HopfData<Zp>;
