//! Exact integer-matrix toolkit for the determinantal Diophantine equation
//! `det([A; X]) = ±d`.
//!
//! The crate covers the arithmetic substrate ([`matrix`]), elementary
//! column operations and unimodular transforms ([`unimodular`]), reduction to
//! Lower Triangular Form ([`ltf`]), the greatest divisor of a matrix
//! ([`divisor`]), the solvability test and witness construction ([`solver`]),
//! and the realization of linear forms as determinants ([`linearform`]).

pub mod divisor;
pub mod error;
pub mod linearform;
pub mod ltf;
pub mod matrix;
pub mod solver;
pub mod text;
pub mod unimodular;

pub use divisor::{
    greatest_divisor, greatest_divisor_ltf, greatest_divisor_minors, GreatestDivisor,
};
pub use error::{Error, Result};
pub use linearform::{
    cofactor_vector, complete_to_form, condition_equivalence_check, solve_linear, FormCompletion,
    LinearForm,
};
pub use ltf::{is_ltf, ltf_reduce, ltf_reduce_traced, LtfDecomposition, LtfTrace};
pub use matrix::{determinant, maximal_minors, multiply, rank, IntMat};
pub use solver::{
    is_solvable, solve, verify_solution, EquationInstance, Orientation, SolutionBlock,
};
pub use text::{format_matrix, parse_matrix};
pub use unimodular::{apply_col_op, is_unimodular, op_matrix, ElementaryColOp, TransformPair};

pub use num_bigint::BigInt;
