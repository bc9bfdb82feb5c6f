//! Singular points of a hypersurface `V(f)` with their Milnor numbers.
//!
//! The Milnor number of a critical point is its multiplicity with respect
//! to the Jacobian ideal (not `⟨∂f, f⟩`). Singular points are the
//! critical points on `V(f)`, so they are the zeros of the Jacobian ideal
//! constrained to `V(f)`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::order::TermOrder;
use crate::poly::Polynomial;
use crate::solver::{SolverConfig, ZeroSet};
use crate::stdbasis::{compute_standard_basis_with_limits, vdim, Limits};
use crate::transform::{run_pipeline, ConstrainedProblem, PipelineOutput};

pub fn jacobian_ideal(f: &Polynomial) -> Result<Vec<Polynomial>> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    Ok((0..f.ring().nvars()).map(|i| f.partial_derivative(i)).collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct SingularPoint {
    pub coordinates: Vec<Complex64>,
    pub milnor_number: u32,
    /// `|f(p)|`
    pub value_residual: f64,
    /// `max_i |∂f/∂x_i(p)|`
    pub gradient_residual: f64,
}

#[derive(Clone, Debug)]
pub struct MilnorReport {
    pub f: Polynomial,
    pub milnor_sum: usize,
    pub points: Vec<SingularPoint>,
    pub zeros: ZeroSet,
}

pub fn milnor_report(f: &Polynomial, config: &SolverConfig) -> Result<MilnorReport> {
    milnor_pipeline(f, config, Limits::default()).map(|(report, _)| report)
}

/// The report together with the intermediate pipeline data.
pub fn milnor_pipeline(f: &Polynomial, config: &SolverConfig, limits: Limits) -> Result<(MilnorReport, PipelineOutput)> {
    let jac = jacobian_ideal(f)?;
    let problem = ConstrainedProblem::new(f.ring().clone(), jac.clone(), vec![f.clone()])?;
    let out = run_pipeline(&problem, None, config, limits)?;
    let points = out
        .zeros
        .entries
        .iter()
        .map(|e| SingularPoint {
            coordinates: e.coordinates.clone(),
            milnor_number: e.multiplicity,
            value_residual: f.eval_complex(&e.coordinates).norm(),
            gradient_residual: jac.iter().map(|g| g.eval_complex(&e.coordinates).norm()).fold(0.0, f64::max),
        })
        .collect();
    let report = MilnorReport { f: f.clone(), milnor_sum: out.vdim(), points, zeros: out.zeros.clone() };
    Ok((report, out))
}

/// Total Milnor number of all affine critical points.
pub fn critical_sum(f: &Polynomial) -> Result<usize> {
    critical_sum_with_limits(f, Limits::default())
}

pub fn critical_sum_with_limits(f: &Polynomial, limits: Limits) -> Result<usize> {
    let jac = jacobian_ideal(f)?;
    if jac.iter().all(Polynomial::is_zero) {
        return Err(Error::ConstantPolynomial);
    }
    let order = TermOrder::degrevlex(f.ring().nvars());
    let basis = compute_standard_basis_with_limits(&jac, &order, limits)?;
    vdim(&basis)
}
