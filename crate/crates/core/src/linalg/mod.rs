//! Exact dense linear algebra over Q and over prime fields.

pub mod field;
pub mod fppoly;
pub mod gauss;
pub mod lattice;
pub mod mat;

pub use field::{FieldKind, FieldValue, FpElt, Scalar};
pub use gauss::{gauss, gauss_mat, kernel, rank, solve, spin, GaussResult, RowSpace};
pub use lattice::{hermite_normal_form, invariant_lattice, IntegerLattice};
pub use mat::{FMat, Mat, Matrix, QMat};
