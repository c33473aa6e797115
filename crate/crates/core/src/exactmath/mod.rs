//! Exact arithmetic: prime fields, rationals and dense linear algebra.

pub mod enumerate;
pub mod field;
pub mod linalg;
pub mod matrix;

pub use enumerate::{enumerate_matrices, subspaces, Budget, MatrixEnumerator, VectorOdometer};
pub use field::{format_rational, parse_rational, q_power, rat, Field, PrimeField, Rational, RationalField};
pub use linalg::{inverse, rank, rank_kernel, rref, solve_linear, solve_matrix};
pub use matrix::{FpMatrix, Matrix, MatrixOps};
