//! Exact scalars, polynomials and sparse linear algebra.

pub mod markowitz;
pub mod matrix;
pub mod poly;
pub mod scalar;

pub use matrix::{
    dense_to_sparse, rank_of_rows, sparse_axpy, sparse_from_entries, sparse_scale, sparse_to_dense, Echelon,
    SparseMatrix, SparseVec, Subspace,
};
pub use markowitz::{eliminate, sparse_rank, Elimination};
pub use poly::Poly;
pub use scalar::{FieldSpec, Rational, Scalar};
