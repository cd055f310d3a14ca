//! Exact rational linear algebra.

mod echelon;
mod matrix;
mod poly;
mod rational;
mod vector;

pub use echelon::{
    kernel, kernel_from_echelon, solve_linear, subspace_ops, EchelonBasis, Subspace, SubspaceOps,
};
pub use matrix::RatMatrix;
pub use poly::{charpoly, Irreducibility, Poly};
pub use rational::{
    as_i64, format_rational, is_nonneg_integer, one, parse_rational, q, qf, sign, zero, Rational,
};
pub use vector::SparseVec;
