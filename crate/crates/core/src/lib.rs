//! Exact Hochschild cohomology of finite-dimensional algebras.

pub mod algebra;
pub mod cochain;
pub mod combinat;
pub mod error;
pub mod exactmath;
pub mod les;
pub mod monogenic;

pub use error::{Error, Result};
pub use exactmath::{FieldSpec, Poly, Scalar, SparseMatrix, Subspace};
