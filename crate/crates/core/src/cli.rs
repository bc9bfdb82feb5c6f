//! Command-line front end: problem files in, JSON out.
//!
//! A problem file is line-oriented text:
//!
//! ```text
//! # comment
//! vars: x, y
//! ideal: -8x3-4xy2+10xy, -4x2y+5x2+3y2-4y
//! constraints: -2x4-2x2y2+5x2y+y3-2y2
//! order: a(1,1,-1),dp
//! seed: 0
//! ```
//!
//! Lines without a `key:` prefix continue the previous list. A file whose
//! first non-blank character is `{` is read as JSON with the same keys
//! (solver settings may also be nested under `"solver"`).

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::milnor::{critical_sum_with_limits, milnor_pipeline};
use crate::order::TermOrder;
use crate::parse::{parse_poly, print_poly};
use crate::poly::{PolyRing, Polynomial, Rational};
use crate::solver::{SolverConfig, ZeroSet};
use crate::stdbasis::{compute_standard_basis_with_limits, standard_monomials, Limits, StandardBasis};
use crate::transform::{extend, run_pipeline, ConstrainedProblem, Timings};

#[derive(Parser, Debug)]
#[command(name = "locsolve", version, about = "Zeros of polynomial ideals on a constraint variety, with multiplicities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Zeros of I on V(J) with multiplicities, as JSON.
    Solve {
        problem: PathBuf,
        #[command(flatten)]
        flags: Flags,
    },
    /// Singular points of V(f) with their Milnor numbers, as JSON.
    Milnor {
        /// A polynomial, or a file holding one (or a problem file whose
        /// first ideal generator is f).
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Comma-separated variable names; inferred from the letters of f
        /// when absent.
        #[arg(long)]
        vars: Option<String>,
        #[command(flatten)]
        flags: Flags,
    },
    /// Reduced standard basis and leading ideal.
    Stdbasis {
        problem: PathBuf,
        #[command(flatten)]
        flags: Flags,
    },
}

#[derive(Args, Debug, Clone, Default)]
pub struct Flags {
    /// Term order, e.g. "a(1,1,-1),dp".
    #[arg(long)]
    pub order: Option<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Residual tolerance.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Cap on the number of standard monomials.
    #[arg(long)]
    pub max_dim: Option<usize>,
    /// JSON output for `stdbasis`.
    #[arg(long)]
    pub json: bool,
    /// Print only the quotient dimension.
    #[arg(long)]
    pub vdim: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Solve(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Solve(e) if e.is_precondition() => 2,
            _ => 1,
        }
    }
}

impl From<crate::error::PolyError> for CliError {
    fn from(e: crate::error::PolyError) -> Self {
        CliError::Solve(e.into())
    }
}

impl From<crate::error::OrderError> for CliError {
    fn from(e: crate::error::OrderError) -> Self {
        CliError::Solve(e.into())
    }
}

#[derive(Debug, Default, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolverSettings {
    pub seed: Option<u64>,
    pub cluster_tol: Option<f64>,
    pub residual_tol: Option<f64>,
    pub max_retries: Option<usize>,
}

/// A parsed but not yet interpreted problem file.
#[derive(Debug, Default, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub vars: Vec<String>,
    pub ideal: Vec<String>,
    #[serde(default)]
    pub constraints: Vec<String>,
    #[serde(default)]
    pub order: Option<String>,
    #[serde(default)]
    pub solver: SolverSettings,
}

fn split_list(s: &str) -> impl Iterator<Item = String> + '_ {
    s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(String::from)
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        if text.trim_start().starts_with('{') {
            let pf: ProblemFile = serde_json::from_str(text).map_err(|e| CliError::Usage(format!("problem file: {}", e)))?;
            pf.check()?;
            return Ok(pf);
        }
        let mut pf = ProblemFile::default();
        let mut section: Option<String> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| CliError::Usage(format!("problem file line {}: {}", lineno + 1, msg));
            let (key, rest) = match line.split_once(':') {
                Some((k, v)) if k.trim().chars().all(|c| c.is_ascii_alphanumeric() || c == '_') => {
                    (k.trim().to_string(), v.trim())
                }
                _ => match &section {
                    Some(k) => (k.clone(), line),
                    None => return Err(bad("expected `key: value`".into())),
                },
            };
            let num = |v: &str| -> Result<f64, CliError> { v.parse().map_err(|_| bad(format!("bad number {:?}", v))) };
            match key.as_str() {
                "vars" => pf.vars.extend(split_list(rest)),
                "ideal" => pf.ideal.extend(split_list(rest)),
                "constraints" => pf.constraints.extend(split_list(rest)),
                "order" => {
                    let o = pf.order.get_or_insert_with(String::new);
                    o.push_str(rest);
                }
                "seed" => pf.solver.seed = Some(rest.parse().map_err(|_| bad(format!("bad seed {:?}", rest)))?),
                "cluster_tol" => pf.solver.cluster_tol = Some(num(rest)?),
                "residual_tol" => pf.solver.residual_tol = Some(num(rest)?),
                "max_retries" => {
                    pf.solver.max_retries = Some(rest.parse().map_err(|_| bad(format!("bad count {:?}", rest)))?)
                }
                other => return Err(bad(format!("unknown key {:?}", other))),
            }
            section = Some(key);
        }
        pf.check()?;
        Ok(pf)
    }

    fn check(&self) -> Result<(), CliError> {
        if self.vars.is_empty() {
            return Err(CliError::Usage("problem file: `vars` is empty".into()));
        }
        if self.ideal.is_empty() {
            return Err(CliError::Usage("problem file: `ideal` is empty".into()));
        }
        Ok(())
    }

    pub fn problem(&self) -> Result<ConstrainedProblem, CliError> {
        let ring = PolyRing::new(&self.vars)?;
        let ideal = parse_all(&self.ideal, &ring, "ideal")?;
        let constraints = parse_all(&self.constraints, &ring, "constraints")?;
        Ok(ConstrainedProblem::new(ring, ideal, constraints)?)
    }

    pub fn config(&self, flags: &Flags) -> Result<SolverConfig, CliError> {
        let mut c = SolverConfig::default();
        let s = &self.solver;
        c.seed = flags.seed.or(s.seed).unwrap_or(c.seed);
        c.cluster_tol = s.cluster_tol.unwrap_or(c.cluster_tol);
        c.residual_tol = flags.tol.or(s.residual_tol).unwrap_or(c.residual_tol);
        c.max_retries = s.max_retries.unwrap_or(c.max_retries);
        c.validate().map_err(CliError::Usage)?;
        Ok(c)
    }
}

fn parse_all(items: &[String], ring: &Arc<PolyRing>, what: &str) -> Result<Vec<Polynomial>, CliError> {
    items
        .iter()
        .enumerate()
        .map(|(i, s)| {
            parse_poly(s, ring).map_err(|e| CliError::Usage(format!("{}[{}] {:?}: {}", what, i + 1, s, e)))
        })
        .collect()
}

fn limits(flags: &Flags) -> Limits {
    let mut l = Limits::default();
    if let Some(m) = flags.max_dim {
        l.max_standard_monomials = m;
    }
    l
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

#[derive(Serialize, Debug, Clone, Copy, PartialEq)]
pub struct JsonComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for JsonComplex {
    fn from(z: Complex64) -> Self {
        JsonComplex { re: z.re, im: z.im }
    }
}

#[derive(Serialize, Debug)]
pub struct JsonZero {
    pub coordinates: Vec<JsonComplex>,
    /// Exact rational coordinates, when known.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<Vec<String>>,
    pub multiplicity: u32,
    pub residual: f64,
}

#[derive(Serialize, Debug)]
pub struct JsonTimings {
    pub standard_basis_ms: f64,
    pub border_basis_ms: f64,
    pub zeros_ms: f64,
}

impl From<&Timings> for JsonTimings {
    fn from(t: &Timings) -> Self {
        JsonTimings { standard_basis_ms: t.standard_basis, border_basis_ms: t.border_basis, zeros_ms: t.zeros }
    }
}

#[derive(Serialize, Debug)]
pub struct ResultDocument {
    pub variables: Vec<String>,
    pub order: String,
    pub vdim: usize,
    pub standard_monomials: Vec<String>,
    pub border_basis: Vec<String>,
    pub zeros: Vec<JsonZero>,
    pub timings: JsonTimings,
}

fn show_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn json_zeros(zs: &ZeroSet) -> Vec<JsonZero> {
    zs.entries
        .iter()
        .map(|e| JsonZero {
            coordinates: e.coordinates.iter().map(|&z| z.into()).collect(),
            exact: e.exact.as_ref().map(|x| x.iter().map(show_rational).collect()),
            multiplicity: e.multiplicity,
            residual: e.residual,
        })
        .collect()
}

pub fn cmd_solve(pf: &ProblemFile, flags: &Flags) -> Result<ResultDocument, CliError> {
    let problem = pf.problem()?;
    let config = pf.config(flags)?;
    let nvars = problem.base_ring.nvars() + problem.constraints.len();
    let order = match flags.order.as_ref().or(pf.order.as_ref()) {
        Some(o) => Some(TermOrder::parse(o, nvars)?),
        None => None,
    };
    let out = run_pipeline(&problem, order.as_ref(), &config, limits(flags))?;
    let names = out.system.ring.variables();
    let border_basis = match &out.border_basis {
        Some(bb) => bb.polynomials().iter().map(|h| print_poly(h, &out.system.order)).collect(),
        None => Vec::new(),
    };
    Ok(ResultDocument {
        variables: names.to_vec(),
        order: out.system.order.to_string(),
        vdim: out.vdim(),
        standard_monomials: out.order_ideal.monomials().iter().map(|m| m.display(names)).collect(),
        border_basis,
        zeros: json_zeros(&out.zeros),
        timings: (&out.timings).into(),
    })
}

#[derive(Serialize, Debug)]
pub struct JsonSingularPoint {
    pub coordinates: Vec<JsonComplex>,
    pub milnor_number: u32,
    pub value_residual: f64,
    pub gradient_residual: f64,
}

#[derive(Serialize, Debug)]
pub struct MilnorDocument {
    pub f: String,
    pub variables: Vec<String>,
    /// Sum of Milnor numbers over the singular points of `V(f)`.
    pub milnor_sum: usize,
    /// Sum over all critical points of `f`.
    pub critical_sum: usize,
    pub points: Vec<JsonSingularPoint>,
    pub timings: JsonTimings,
}

/// Variable names for a bare polynomial: every distinct letter, sorted.
pub fn infer_vars(text: &str) -> Vec<String> {
    let mut letters: Vec<char> = text.chars().filter(|c| c.is_ascii_alphabetic()).collect();
    letters.sort_unstable();
    letters.dedup();
    letters.into_iter().map(String::from).collect()
}

fn milnor_input(poly: &str, vars: Option<&str>) -> Result<(Vec<String>, String), CliError> {
    let path = Path::new(poly);
    let text = if path.is_file() { read(path)? } else { poly.to_string() };
    let looks_like_problem = text.trim_start().starts_with('{') || text.lines().any(|l| l.trim_start().starts_with("vars:"));
    if looks_like_problem {
        let pf = ProblemFile::parse(&text)?;
        let vars = match vars {
            Some(v) => split_list(v).collect(),
            None => pf.vars,
        };
        return Ok((vars, pf.ideal[0].clone()));
    }
    let f: String = text.lines().map(|l| l.split('#').next().unwrap()).collect::<Vec<_>>().join(" ").trim().to_string();
    let vars = match vars {
        Some(v) => split_list(v).collect(),
        None => infer_vars(&f),
    };
    if vars.is_empty() {
        return Err(CliError::Usage(format!("cannot infer variables from {:?}; pass --vars", f)));
    }
    Ok((vars, f))
}

pub fn cmd_milnor(poly: &str, vars: Option<&str>, flags: &Flags) -> Result<MilnorDocument, CliError> {
    let (vars, text) = milnor_input(poly, vars)?;
    let ring = PolyRing::new(&vars)?;
    let f = parse_poly(&text, &ring).map_err(|e| CliError::Usage(format!("{:?}: {}", text, e)))?;
    let config = ProblemFile::default().config(flags)?;
    let lim = limits(flags);
    let (report, out) = milnor_pipeline(&f, &config, lim)?;
    let critical_sum = critical_sum_with_limits(&f, lim)?;
    Ok(MilnorDocument {
        f: print_poly(&f, &TermOrder::degrevlex(ring.nvars())),
        variables: vars,
        milnor_sum: report.milnor_sum,
        critical_sum,
        points: report
            .points
            .iter()
            .map(|p| JsonSingularPoint {
                coordinates: p.coordinates.iter().map(|&z| z.into()).collect(),
                milnor_number: p.milnor_number,
                value_residual: p.value_residual,
                gradient_residual: p.gradient_residual,
            })
            .collect(),
        timings: (&out.timings).into(),
    })
}

#[derive(Serialize, Debug)]
pub struct BasisDocument {
    pub variables: Vec<String>,
    pub order: String,
    pub generators: Vec<String>,
    pub leading_ideal: Vec<String>,
    /// `null` when the quotient is not finite-dimensional within the cap.
    pub vdim: Option<usize>,
}

/// The standard basis of `I` (or of the extended ideal when the file has
/// constraints), under `--order`, the file's order, or the default.
pub fn cmd_stdbasis(pf: &ProblemFile, flags: &Flags) -> Result<StandardBasis, CliError> {
    let problem = pf.problem()?;
    let (gens, default_order) = if pf.constraints.is_empty() {
        let n = problem.base_ring.nvars();
        (problem.ideal.clone(), TermOrder::degrevlex(n))
    } else {
        let ext = extend(&problem)?;
        (ext.generators, ext.order)
    };
    let nvars = gens[0].ring().nvars();
    let order = match flags.order.as_ref().or(pf.order.as_ref()) {
        Some(o) => TermOrder::parse(o, nvars)?,
        None => default_order,
    };
    Ok(compute_standard_basis_with_limits(&gens, &order, limits(flags))?)
}

fn basis_vdim(basis: &StandardBasis, flags: &Flags) -> Result<usize, Error> {
    standard_monomials(basis, limits(flags).max_standard_monomials).map(|w| w.len())
}

pub fn basis_document(basis: &StandardBasis, flags: &Flags) -> Result<BasisDocument, CliError> {
    let names = basis.ring().variables();
    let vdim = match basis_vdim(basis, flags) {
        Ok(d) => Some(d),
        Err(Error::NotZeroDimensional { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(BasisDocument {
        variables: names.to_vec(),
        order: basis.order().to_string(),
        generators: basis.generators().iter().map(|g| print_poly(g, basis.order())).collect(),
        leading_ideal: basis.leading_ideal().iter().map(|m| m.display(names)).collect(),
        vdim,
    })
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("documents serialize")
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let w = |out: &mut dyn Write, s: String| {
        writeln!(out, "{}", s).map_err(|source| CliError::Io { path: "<stdout>".into(), source })
    };
    match cli.command {
        Command::Solve { problem, flags } => {
            let pf = ProblemFile::parse(&read(&problem)?)?;
            let doc = cmd_solve(&pf, &flags)?;
            if flags.vdim {
                w(out, doc.vdim.to_string())
            } else {
                w(out, to_json(&doc))
            }
        }
        Command::Milnor { poly, vars, flags } => {
            let doc = cmd_milnor(&poly, vars.as_deref(), &flags)?;
            w(out, to_json(&doc))
        }
        Command::Stdbasis { problem, flags } => {
            let pf = ProblemFile::parse(&read(&problem)?)?;
            let basis = cmd_stdbasis(&pf, &flags)?;
            if flags.vdim {
                let d = basis_vdim(&basis, &flags)?;
                return w(out, d.to_string());
            }
            let doc = basis_document(&basis, &flags)?;
            if flags.json {
                return w(out, to_json(&doc));
            }
            let mut text = format!("order: {}\n", doc.order);
            for (i, g) in doc.generators.iter().enumerate() {
                text.push_str(&format!("G[{}] = {}\n", i + 1, g));
            }
            text.push_str(&format!("leading ideal: {}", doc.leading_ideal.join(", ")));
            if let Some(d) = doc.vdim {
                text.push_str(&format!("\nvdim: {}", d));
            }
            w(out, text)
        }
    }
}

/// Run the CLI on `args` (including the program name) and return the exit
/// code: 0 success, 1 usage or parse error, 2 mathematical precondition.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 1;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            e.exit_code()
        }
    }
}
