//! Complex zeros of a zero-dimensional polynomial ideal `I ⊂ ℚ[x]` that lie
//! on a second variety `V(J)`, with their multiplicities with respect to
//! `I`.
//!
//! The pipeline renames the constraints into fresh variables, computes a
//! standard basis in the localization at a mixed semigroup order, reads off
//! the standard monomials and a border basis, builds multiplication
//! matrices and extracts the zeros from a generic linear form. Everything
//! up to the characteristic polynomial is exact rational arithmetic.

pub mod border;
pub mod cli;
pub mod error;
pub mod matrix;
pub mod milnor;
pub mod order;
pub mod parse;
pub mod poly;
pub mod solver;
pub mod stdbasis;
pub mod transform;
pub mod univariate;

pub use border::{border, compute_border_basis, multiplication_matrices, BorderBasisResult, MultMatrices};
pub use error::{Error, OrderError, PolyError};
pub use milnor::{critical_sum, jacobian_ideal, milnor_report, MilnorReport, SingularPoint};
pub use order::{OrderSignature, TermOrder};
pub use parse::{parse_poly, print_poly};
pub use poly::{poly_arith, ArithOp, Monomial, PolyRing, Polynomial, Rational};
pub use solver::{chow_form, zeros_with_multiplicities, ChowForm, SolverConfig, ZeroEntry, ZeroSet};
pub use stdbasis::{
    compute_standard_basis, mora_normal_form, reduced_normal_form, standard_monomials, vdim, Limits, OrderIdealW,
    StandardBasis,
};
pub use transform::{extend, run_pipeline, solve_constrained, ConstrainedProblem, ExtendedSystem, PipelineOutput};
pub use univariate::{squarefree_factor, univariate_roots, UniPoly};
