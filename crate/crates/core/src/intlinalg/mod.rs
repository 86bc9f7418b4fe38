//! Exact integer linear algebra: Smith normal form, kernels, cokernels and
//! subquotient presentations.
//!
//! Orientation convention used throughout the crate: a presentation matrix has
//! one row per generator and one column per relation, and maps act on column
//! vectors.

mod lattice;
mod matrix;
mod smith;

pub use lattice::{
    kernel_basis, lattice_basis, lattice_contains, solve, subquotient, Solver, Subquotient,
};
pub use matrix::{Int, IntMatrix};
pub use smith::{cokernel_invariants, smith_diagonal, snf, SmithDecomposition};
