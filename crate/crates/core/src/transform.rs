//! Zeros of `I` lying on `V(J)`.
//!
//! Each constraint `g_j` gets a fresh variable `u_j`; the ideal
//! `I' = I + ⟨g_j - u_j⟩` lives in the extended ring, and localizing at an
//! order with exactly the `u_j` below `1` discards every zero of `I'` with
//! a nonzero `u`-coordinate, i.e. every zero of `I` off `V(J)`, without
//! changing the multiplicities of the others.

use std::sync::Arc;
use std::time::Instant;

use crate::border::{compute_border_basis, multiplication_matrices, BorderBasisResult, MultMatrices};
use crate::error::{Error, PolyError, Result};
use crate::order::TermOrder;
use crate::poly::{PolyRing, Polynomial};
use crate::solver::{format_point, zeros_with_multiplicities, SolverConfig, ZeroSet};
use crate::stdbasis::{compute_standard_basis_with_limits, order_ideal, Limits, OrderIdealW, StandardBasis};

#[derive(Clone, Debug)]
pub struct ConstrainedProblem {
    pub base_ring: Arc<PolyRing>,
    pub ideal: Vec<Polynomial>,
    /// Generators of `J`; `[0]` means no constraint.
    pub constraints: Vec<Polynomial>,
}

impl ConstrainedProblem {
    pub fn new(base_ring: Arc<PolyRing>, ideal: Vec<Polynomial>, constraints: Vec<Polynomial>) -> Result<Self> {
        if ideal.is_empty() {
            return Err(Error::NoGenerators);
        }
        let constraints = if constraints.is_empty() { vec![Polynomial::zero(&base_ring)] } else { constraints };
        if ideal.iter().chain(&constraints).any(|p| p.ring() != &base_ring) {
            return Err(PolyError::RingMismatch.into());
        }
        Ok(ConstrainedProblem { base_ring, ideal, constraints })
    }
}

#[derive(Clone, Debug)]
pub struct ExtendedSystem {
    pub ring: Arc<PolyRing>,
    pub generators: Vec<Polynomial>,
    pub order: TermOrder,
}

fn fresh_names(taken: &[String], count: usize) -> Option<Vec<String>> {
    let schemes: [&dyn Fn(usize) -> String; 4] = [
        &|j| if count == 1 { "u".to_string() } else { format!("u{}", j + 1) },
        &|j| format!("u_{}", j + 1),
        &|j| format!("w_{}", j + 1),
        &|j| format!("_u{}", j + 1),
    ];
    schemes.iter().find_map(|scheme| {
        let names: Vec<String> = (0..count).map(scheme).collect();
        // a fresh name must not be a prefix-clash either, or the
        // single-letter exponent shorthand becomes ambiguous
        let clash = names.iter().any(|n| taken.iter().any(|t| t == n || t.starts_with(n.as_str()) || n.starts_with(t.as_str())));
        (!clash).then_some(names)
    })
}

pub fn extend(problem: &ConstrainedProblem) -> Result<ExtendedSystem> {
    let base = &problem.base_ring;
    let n = base.nvars();
    let u = problem.constraints.len();
    let names = fresh_names(base.variables(), u).ok_or(Error::NameCollision(u))?;
    let mut all = base.variables().to_vec();
    all.extend(names);
    let ring = PolyRing::with_constraints(all, n)?;
    let map: Vec<usize> = (0..n).collect();
    let mut generators: Vec<Polynomial> = problem.ideal.iter().map(|f| f.embed(&ring, &map)).collect();
    for (j, g) in problem.constraints.iter().enumerate() {
        generators.push(&g.embed(&ring, &map) - &Polynomial::var(&ring, n + j));
    }
    Ok(ExtendedSystem { ring, generators, order: TermOrder::plus_minus(n, u) })
}

/// Per-stage wall-clock times in milliseconds.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Timings {
    pub standard_basis: f64,
    pub border_basis: f64,
    pub zeros: f64,
}

/// Everything the pipeline produces on the way to the zeros.
#[derive(Clone, Debug)]
pub struct PipelineOutput {
    pub system: ExtendedSystem,
    pub basis: StandardBasis,
    pub order_ideal: OrderIdealW,
    pub border_basis: Option<BorderBasisResult>,
    pub matrices: Option<MultMatrices>,
    /// Zeros in the extended ring.
    pub extended_zeros: ZeroSet,
    /// Zeros projected to the original variables.
    pub zeros: ZeroSet,
    pub timings: Timings,
}

impl PipelineOutput {
    pub fn vdim(&self) -> usize {
        self.order_ideal.len()
    }
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// Run the full pipeline. `order` overrides the default extended order; it
/// must make exactly the constraint variables local.
pub fn run_pipeline(
    problem: &ConstrainedProblem,
    order: Option<&TermOrder>,
    config: &SolverConfig,
    limits: Limits,
) -> Result<PipelineOutput> {
    let mut system = extend(problem)?;
    if let Some(o) = order {
        if o.nvars() != system.ring.nvars() {
            return Err(crate::error::OrderError::RowLength {
                row: 0,
                expected: system.ring.nvars(),
                found: o.nvars(),
            }
            .into());
        }
        system.order = o.clone();
    }
    let n = problem.base_ring.nvars();
    let expected: Vec<bool> = (0..system.ring.nvars()).map(|i| i < n).collect();
    if system.order.signature().bits != expected {
        return Err(Error::BadSignature(system.order.to_string()));
    }

    let mut timings = Timings::default();
    let t = Instant::now();
    let basis = compute_standard_basis_with_limits(&system.generators, &system.order, limits)?;
    let w = order_ideal(&basis)?;
    timings.standard_basis = ms(t);

    if w.is_empty() {
        return Ok(PipelineOutput {
            system,
            basis,
            order_ideal: w,
            border_basis: None,
            matrices: None,
            extended_zeros: ZeroSet::default(),
            zeros: ZeroSet::default(),
            timings,
        });
    }

    let t = Instant::now();
    let bb = compute_border_basis(&basis)?;
    let mats = multiplication_matrices(&bb);
    timings.border_basis = ms(t);

    let t = Instant::now();
    let extended = zeros_with_multiplicities(&mats, &system.generators, config)?;
    timings.zeros = ms(t);
    for e in &extended.entries {
        for z in &e.coordinates[n..] {
            if z.norm() > config.residual_tol {
                return Err(Error::ConstraintCoordinate { value: z.norm(), point: format_point(&e.coordinates) });
            }
        }
    }
    let zeros = extended.project(n);
    Ok(PipelineOutput {
        system,
        basis,
        order_ideal: w,
        border_basis: Some(bb),
        matrices: Some(mats),
        extended_zeros: extended,
        zeros,
        timings,
    })
}

pub fn solve_constrained(problem: &ConstrainedProblem, config: &SolverConfig) -> Result<ZeroSet> {
    run_pipeline(problem, None, config, Limits::default()).map(|out| out.zeros)
}
