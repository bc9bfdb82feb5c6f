//! Python bindings: polynomials, term orders, standard bases, the
//! constrained solver and the Milnor-number report.

use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyTypeError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use locsolve as ls;
use locsolve::{PolyRing, Rational};

create_exception!(locsolve_py, LocsolveError, PyException, "Base class of all locsolve errors.");
create_exception!(locsolve_py, ParseError, LocsolveError, "Malformed polynomial, order or argument.");
create_exception!(locsolve_py, PreconditionError, LocsolveError, "The input violates a mathematical precondition.");
create_exception!(locsolve_py, NotZeroDimensionalError, PreconditionError, "The localized quotient is infinite.");

fn err(e: ls::Error) -> PyErr {
    match e {
        ls::Error::NotZeroDimensional { .. } => NotZeroDimensionalError::new_err(e.to_string()),
        _ if e.is_precondition() => PreconditionError::new_err(e.to_string()),
        _ => ParseError::new_err(e.to_string()),
    }
}

fn poly_err(e: ls::PolyError) -> PyErr {
    err(e.into())
}

fn fraction<'py>(py: Python<'py>, q: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((q.numer().clone(), q.denom().clone()))
}

fn fractions<'py>(py: Python<'py>, qs: &[Rational]) -> PyResult<Vec<Bound<'py, PyAny>>> {
    qs.iter().map(|q| fraction(py, q)).collect()
}

/// Accepts Python `int` and `fractions.Fraction` (anything with integer
/// `numerator`/`denominator`).
fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if let Ok(n) = obj.extract::<BigInt>() {
        return Ok(Rational::from_integer(n));
    }
    let num: BigInt = obj.getattr("numerator")?.extract()?;
    let den: BigInt = obj.getattr("denominator")?.extract()?;
    if den == BigInt::from(0) {
        return Err(ParseError::new_err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

#[pyclass(name = "Polynomial", module = "locsolve_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyPolynomial {
    pub inner: ls::Polynomial,
}

impl PyPolynomial {
    fn wrap(inner: ls::Polynomial) -> Self {
        PyPolynomial { inner }
    }

    fn coerce(&self, other: &Bound<'_, PyAny>) -> PyResult<ls::Polynomial> {
        if let Ok(p) = other.cast::<PyPolynomial>() {
            let p = p.get();
            if p.inner.ring() != self.inner.ring() {
                return Err(ParseError::new_err("polynomials belong to different rings"));
            }
            return Ok(p.inner.clone());
        }
        match rational(other) {
            Ok(q) => Ok(ls::Polynomial::constant(self.inner.ring(), q)),
            Err(_) => Err(PyTypeError::new_err("expected a Polynomial, int or Fraction")),
        }
    }
}

#[pymethods]
impl PyPolynomial {
    /// Parse `text` over the variables `vars`, e.g.
    /// `Polynomial("-2x4 + 5x2y", ["x", "y"])`.
    #[new]
    fn new(text: &str, vars: Vec<String>) -> PyResult<Self> {
        let ring = PolyRing::new(&vars).map_err(poly_err)?;
        ls::parse_poly(text, &ring).map(Self::wrap).map_err(poly_err)
    }

    #[staticmethod]
    fn variable(name: &str, vars: Vec<String>) -> PyResult<Self> {
        let ring = PolyRing::new(&vars).map_err(poly_err)?;
        let i = ring.index_of(name).ok_or_else(|| ParseError::new_err(format!("unknown variable {:?}", name)))?;
        Ok(Self::wrap(ls::Polynomial::var(&ring, i)))
    }

    #[getter]
    fn vars(&self) -> Vec<String> {
        self.inner.ring().variables().to_vec()
    }

    fn __str__(&self) -> String {
        ls::print_poly(&self.inner, &ls::TermOrder::degrevlex(self.inner.ring().nvars()))
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({:?}, {:?})", self.__str__(), self.vars())
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        self.coerce(other).map(|p| p == self.inner).unwrap_or(false)
    }

    fn __add__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self::wrap(&self.inner + &self.coerce(other)?))
    }

    fn __radd__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__add__(other)
    }

    fn __sub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self::wrap(&self.inner - &self.coerce(other)?))
    }

    fn __rsub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self::wrap(&self.coerce(other)? - &self.inner))
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self::wrap(&self.inner * &self.coerce(other)?))
    }

    fn __rmul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__mul__(other)
    }

    fn __neg__(&self) -> Self {
        Self::wrap(-&self.inner)
    }

    fn __pow__(&self, exponent: u32, modulo: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        if modulo.is_some() {
            return Err(PyTypeError::new_err("modular powers are not supported"));
        }
        Ok(Self::wrap(self.inner.pow(exponent)))
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn total_degree(&self) -> Option<u64> {
        self.inner.total_degree()
    }

    /// `[(exponents, Fraction)]` in increasing exponent-vector order.
    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Vec<(Vec<u32>, Bound<'py, PyAny>)>> {
        self.inner.terms().map(|(m, c)| Ok((m.exponents().to_vec(), fraction(py, c)?))).collect()
    }

    /// Partial derivative by variable name.
    fn derivative(&self, var: &str) -> PyResult<Self> {
        let i = self
            .inner
            .ring()
            .index_of(var)
            .ok_or_else(|| ParseError::new_err(format!("unknown variable {:?}", var)))?;
        Ok(Self::wrap(self.inner.partial_derivative(i)))
    }

    fn evaluate(&self, point: Vec<Complex64>) -> PyResult<Complex64> {
        if point.len() != self.inner.ring().nvars() {
            return Err(ParseError::new_err(format!("expected {} coordinates", self.inner.ring().nvars())));
        }
        Ok(self.inner.eval_complex(&point))
    }
}

#[pyclass(name = "TermOrder", module = "locsolve_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyTermOrder {
    pub inner: ls::TermOrder,
}

#[pymethods]
impl PyTermOrder {
    /// Parse an order string such as `"a(1,1,-1),dp"` for `nvars` variables.
    #[new]
    fn new(spec: &str, nvars: usize) -> PyResult<Self> {
        ls::TermOrder::parse(spec, nvars).map(|inner| PyTermOrder { inner }).map_err(|e| err(e.into()))
    }

    #[staticmethod]
    fn degrevlex(nvars: usize) -> Self {
        PyTermOrder { inner: ls::TermOrder::degrevlex(nvars) }
    }

    /// Weight `+1` on the first `n_global` variables, `-1` on the rest.
    #[staticmethod]
    fn plus_minus(n_global: usize, n_local: usize) -> Self {
        PyTermOrder { inner: ls::TermOrder::plus_minus(n_global, n_local) }
    }

    #[staticmethod]
    fn from_weights(rows: Vec<Vec<i64>>) -> PyResult<Self> {
        let n = rows.first().map_or(0, Vec::len);
        ls::TermOrder::new(rows, n).map(|inner| PyTermOrder { inner }).map_err(|e| err(e.into()))
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<i64>> {
        self.inner.rows().to_vec()
    }

    #[getter]
    fn nvars(&self) -> usize {
        self.inner.nvars()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("TermOrder({:?}, {})", self.inner.to_string(), self.inner.nvars())
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        other.cast::<PyTermOrder>().map(|o| o.get().inner == self.inner).unwrap_or(false)
    }

    /// `signature()[i]` is true when variable `i` compares above 1.
    fn signature(&self) -> Vec<bool> {
        self.inner.signature().bits
    }

    fn is_global(&self) -> bool {
        self.inner.is_global()
    }

    /// -1, 0 or 1 comparing two exponent vectors.
    fn compare(&self, a: Vec<u32>, b: Vec<u32>) -> PyResult<i8> {
        if a.len() != self.inner.nvars() || b.len() != self.inner.nvars() {
            return Err(ParseError::new_err(format!("exponent vectors must have length {}", self.inner.nvars())));
        }
        Ok(self.inner.compare(&ls::Monomial::new(a), &ls::Monomial::new(b)) as i8)
    }

    fn leading_monomial(&self, p: &PyPolynomial) -> PyResult<Vec<u32>> {
        self.check(p)?;
        self.inner.leading_monomial(&p.inner).map(|m| m.exponents().to_vec()).map_err(poly_err)
    }

    fn ecart(&self, p: &PyPolynomial) -> PyResult<u64> {
        self.check(p)?;
        self.inner.ecart(&p.inner).map_err(poly_err)
    }
}

impl PyTermOrder {
    fn check(&self, p: &PyPolynomial) -> PyResult<()> {
        if p.inner.ring().nvars() != self.inner.nvars() {
            return Err(ParseError::new_err("order and polynomial have different numbers of variables"));
        }
        Ok(())
    }
}

#[pyclass(name = "StandardBasis", module = "locsolve_py", frozen, skip_from_py_object)]
pub struct PyStandardBasis {
    inner: ls::StandardBasis,
}

#[pymethods]
impl PyStandardBasis {
    #[getter]
    fn generators(&self) -> Vec<PyPolynomial> {
        self.inner.generators().iter().cloned().map(PyPolynomial::wrap).collect()
    }

    #[getter]
    fn leading_ideal(&self) -> Vec<Vec<u32>> {
        self.inner.leading_ideal().iter().map(|m| m.exponents().to_vec()).collect()
    }

    #[getter]
    fn order(&self) -> PyTermOrder {
        PyTermOrder { inner: self.inner.order().clone() }
    }

    fn is_reduced(&self) -> bool {
        self.inner.is_reduced()
    }

    /// Dimension of the localized quotient; raises
    /// `NotZeroDimensionalError` when it is infinite.
    fn vdim(&self) -> PyResult<usize> {
        ls::vdim(&self.inner).map_err(err)
    }

    fn standard_monomials(&self) -> PyResult<Vec<Vec<u32>>> {
        let w = ls::stdbasis::order_ideal(&self.inner).map_err(err)?;
        Ok(w.monomials().iter().map(|m| m.exponents().to_vec()).collect())
    }

    /// The unique representative supported on the standard monomials.
    fn normal_form(&self, p: &PyPolynomial) -> PyResult<PyPolynomial> {
        self.check(p)?;
        ls::reduced_normal_form(&p.inner, &self.inner).map(PyPolynomial::wrap).map_err(err)
    }

    /// Membership in the ideal of the localization.
    fn contains(&self, p: &PyPolynomial) -> PyResult<bool> {
        self.check(p)?;
        Ok(ls::mora_normal_form(&p.inner, self.inner.generators(), self.inner.order()).is_zero())
    }

    fn __len__(&self) -> usize {
        self.inner.generators().len()
    }

    fn __repr__(&self) -> String {
        format!("<StandardBasis of {} generators under {}>", self.inner.generators().len(), self.inner.order())
    }
}

impl PyStandardBasis {
    fn check(&self, p: &PyPolynomial) -> PyResult<()> {
        if p.inner.ring() != self.inner.ring() {
            return Err(ParseError::new_err("polynomial is not in the ring of the basis"));
        }
        Ok(())
    }
}

#[pyclass(name = "Zero", module = "locsolve_py", frozen, skip_from_py_object)]
pub struct PyZero {
    #[pyo3(get)]
    coordinates: Vec<Complex64>,
    #[pyo3(get)]
    multiplicity: u32,
    #[pyo3(get)]
    residual: f64,
    exact: Option<Vec<Rational>>,
}

#[pymethods]
impl PyZero {
    /// Exact rational coordinates, or `None` when the zero is irrational.
    #[getter]
    fn exact<'py>(&self, py: Python<'py>) -> PyResult<Option<Vec<Bound<'py, PyAny>>>> {
        self.exact.as_ref().map(|x| fractions(py, x)).transpose()
    }

    fn __repr__(&self) -> String {
        format!("Zero({}, multiplicity={})", ls::solver::format_point(&self.coordinates), self.multiplicity)
    }
}

fn zeros(zs: &ls::ZeroSet) -> Vec<PyZero> {
    zs.entries
        .iter()
        .map(|e| PyZero {
            coordinates: e.coordinates.clone(),
            multiplicity: e.multiplicity,
            residual: e.residual,
            exact: e.exact.clone(),
        })
        .collect()
}

#[pyclass(name = "Solution", module = "locsolve_py", frozen, skip_from_py_object)]
pub struct PySolution {
    out: ls::PipelineOutput,
    config: ls::SolverConfig,
}

#[pymethods]
impl PySolution {
    /// Base variables followed by one fresh variable per constraint.
    #[getter]
    fn variables(&self) -> Vec<String> {
        self.out.system.ring.variables().to_vec()
    }

    #[getter]
    fn order(&self) -> PyTermOrder {
        PyTermOrder { inner: self.out.system.order.clone() }
    }

    #[getter]
    fn vdim(&self) -> usize {
        self.out.vdim()
    }

    #[getter]
    fn standard_monomials(&self) -> Vec<String> {
        let names = self.out.system.ring.variables();
        self.out.order_ideal.monomials().iter().map(|m| m.display(names)).collect()
    }

    #[getter]
    fn standard_basis(&self) -> PyStandardBasis {
        PyStandardBasis { inner: self.out.basis.clone() }
    }

    #[getter]
    fn border_basis(&self) -> Vec<PyPolynomial> {
        match &self.out.border_basis {
            Some(bb) => bb.polynomials().iter().cloned().map(PyPolynomial::wrap).collect(),
            None => Vec::new(),
        }
    }

    /// Zeros in the original variables.
    #[getter]
    fn zeros(&self) -> Vec<PyZero> {
        zeros(&self.out.zeros)
    }

    /// Zeros including the constraint coordinates (all zero).
    #[getter]
    fn extended_zeros(&self) -> Vec<PyZero> {
        zeros(&self.out.extended_zeros)
    }

    /// One matrix per variable, rows of `Fraction`; row `i` of the matrix of
    /// `v` holds the coordinates of `v` times the `i`-th standard monomial.
    fn multiplication_matrices<'py>(&self, py: Python<'py>) -> PyResult<Vec<Vec<Vec<Bound<'py, PyAny>>>>> {
        let Some(m) = &self.out.matrices else { return Ok(Vec::new()) };
        m.matrices().iter().map(|a| a.to_rows().iter().map(|row| fractions(py, row)).collect()).collect()
    }

    /// `det(v0 I + Σ v_i M_i)` as a polynomial in `v0, ..., vm`.
    fn chow_form(&self) -> PyResult<PyPolynomial> {
        let m = self.out.matrices.as_ref().ok_or_else(|| PreconditionError::new_err("no zeros, no Chow form"))?;
        ls::chow_form(m, &self.config).map(|c| PyPolynomial::wrap(c.poly)).map_err(err)
    }

    /// Per-stage wall-clock times in milliseconds.
    fn timings<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        d.set_item("standard_basis", self.out.timings.standard_basis)?;
        d.set_item("border_basis", self.out.timings.border_basis)?;
        d.set_item("zeros", self.out.timings.zeros)?;
        Ok(d)
    }

    fn __repr__(&self) -> String {
        format!("<Solution vdim={} zeros={}>", self.out.vdim(), self.out.zeros.len())
    }
}

#[derive(FromPyObject)]
enum PolyLike {
    Poly(PolyArg),
    Text(String),
}

/// Borrowed-or-cloned polynomial argument.
struct PolyArg(ls::Polynomial);

impl<'a, 'py> FromPyObject<'a, 'py> for PolyArg {
    type Error = PyErr;

    fn extract(obj: Borrowed<'a, 'py, PyAny>) -> PyResult<Self> {
        Ok(PolyArg(obj.cast::<PyPolynomial>()?.get().inner.clone()))
    }
}

/// Resolve a mixed list of strings and polynomials into one ring.
fn resolve(items: &[&[PolyLike]], vars: Option<Vec<String>>) -> PyResult<Vec<Vec<ls::Polynomial>>> {
    let ring: Arc<PolyRing> = match vars {
        Some(v) => PolyRing::new(&v).map_err(poly_err)?,
        None => {
            let from_poly = items.iter().flat_map(|l| l.iter()).find_map(|p| match p {
                PolyLike::Poly(p) => Some(p.0.ring().clone()),
                PolyLike::Text(_) => None,
            });
            match from_poly {
                Some(r) => r,
                None => {
                    let text: Vec<&str> = items
                        .iter()
                        .flat_map(|l| l.iter())
                        .filter_map(|p| match p {
                            PolyLike::Text(s) => Some(s.as_str()),
                            PolyLike::Poly(_) => None,
                        })
                        .collect();
                    let names = ls::cli::infer_vars(&text.join(" "));
                    if names.is_empty() {
                        return Err(ParseError::new_err("cannot infer variables; pass vars="));
                    }
                    PolyRing::new(&names).map_err(poly_err)?
                }
            }
        }
    };
    items
        .iter()
        .map(|list| {
            list.iter()
                .map(|p| match p {
                    PolyLike::Text(s) => ls::parse_poly(s, &ring).map_err(poly_err),
                    PolyLike::Poly(p) if p.0.ring() == &ring => Ok(p.0.clone()),
                    PolyLike::Poly(p) if p.0.ring().variables() == ring.variables() => {
                        let map: Vec<usize> = (0..ring.nvars()).collect();
                        Ok(p.0.embed(&ring, &map))
                    }
                    PolyLike::Poly(_) => Err(ParseError::new_err("polynomials belong to different rings")),
                })
                .collect()
        })
        .collect()
}

fn limits(max_dim: usize) -> ls::Limits {
    ls::Limits { max_standard_monomials: max_dim, ..ls::Limits::default() }
}

#[pyfunction]
fn parse_poly(text: &str, vars: Vec<String>) -> PyResult<PyPolynomial> {
    PyPolynomial::new(text, vars)
}

/// Reduced standard basis of `generators` under `order` (default `dp`).
#[pyfunction]
#[pyo3(signature = (generators, order=None, vars=None, max_dim=10_000))]
fn standard_basis(
    generators: Vec<PolyLike>,
    order: Option<&Bound<'_, PyAny>>,
    vars: Option<Vec<String>>,
    max_dim: usize,
) -> PyResult<PyStandardBasis> {
    let gens = resolve(&[&generators], vars)?.remove(0);
    let n = gens.first().ok_or_else(|| err(ls::Error::NoGenerators))?.ring().nvars();
    let order = match order {
        None => ls::TermOrder::degrevlex(n),
        Some(o) => match o.cast::<PyTermOrder>() {
            Ok(t) => t.get().inner.clone(),
            Err(_) => ls::TermOrder::parse(&o.extract::<String>()?, n).map_err(|e| err(e.into()))?,
        },
    };
    if order.nvars() != n {
        return Err(ParseError::new_err(format!("order has {} variables, ring has {}", order.nvars(), n)));
    }
    let inner = ls::stdbasis::compute_standard_basis_with_limits(&gens, &order, limits(max_dim)).map_err(err)?;
    Ok(PyStandardBasis { inner })
}

/// Zeros of the ideal generated by `ideal` that lie on the variety of
/// `constraints`, with multiplicities.
#[pyfunction]
#[pyo3(signature = (
    ideal, constraints=Vec::new(), vars=None, order=None, seed=0,
    cluster_tol=1e-8, residual_tol=1e-6, max_retries=5, max_dim=10_000
))]
#[allow(clippy::too_many_arguments)]
fn solve(
    ideal: Vec<PolyLike>,
    constraints: Vec<PolyLike>,
    vars: Option<Vec<String>>,
    order: Option<String>,
    seed: u64,
    cluster_tol: f64,
    residual_tol: f64,
    max_retries: usize,
    max_dim: usize,
) -> PyResult<PySolution> {
    let mut lists = resolve(&[&ideal, &constraints], vars)?;
    let cons = lists.pop().unwrap();
    let gens = lists.pop().unwrap();
    let ring = gens.first().ok_or_else(|| err(ls::Error::NoGenerators))?.ring().clone();
    let problem = ls::ConstrainedProblem::new(ring.clone(), gens, cons).map_err(err)?;
    let config = ls::SolverConfig { seed, cluster_tol, residual_tol, max_retries, ..ls::SolverConfig::default() };
    config.validate().map_err(ParseError::new_err)?;
    let order = match order {
        Some(o) => {
            let n = ring.nvars() + problem.constraints.len();
            Some(ls::TermOrder::parse(&o, n).map_err(|e| err(e.into()))?)
        }
        None => None,
    };
    let out = ls::run_pipeline(&problem, order.as_ref(), &config, limits(max_dim)).map_err(err)?;
    Ok(PySolution { out, config })
}

#[pyclass(name = "SingularPoint", module = "locsolve_py", frozen, skip_from_py_object)]
pub struct PySingularPoint {
    #[pyo3(get)]
    coordinates: Vec<Complex64>,
    #[pyo3(get)]
    milnor_number: u32,
    #[pyo3(get)]
    value_residual: f64,
    #[pyo3(get)]
    gradient_residual: f64,
}

#[pymethods]
impl PySingularPoint {
    fn __repr__(&self) -> String {
        format!("SingularPoint({}, milnor_number={})", ls::solver::format_point(&self.coordinates), self.milnor_number)
    }
}

#[pyclass(name = "MilnorReport", module = "locsolve_py", frozen, skip_from_py_object)]
pub struct PyMilnorReport {
    #[pyo3(get)]
    f: PyPolynomial,
    #[pyo3(get)]
    milnor_sum: usize,
    points: Vec<(Vec<Complex64>, u32, f64, f64)>,
}

#[pymethods]
impl PyMilnorReport {
    #[getter]
    fn points(&self) -> Vec<PySingularPoint> {
        self.points
            .iter()
            .map(|(c, m, v, g)| PySingularPoint {
                coordinates: c.clone(),
                milnor_number: *m,
                value_residual: *v,
                gradient_residual: *g,
            })
            .collect()
    }

    fn __repr__(&self) -> String {
        format!("<MilnorReport milnor_sum={} points={}>", self.milnor_sum, self.points.len())
    }
}

fn single(f: PolyLike, vars: Option<Vec<String>>) -> PyResult<ls::Polynomial> {
    Ok(resolve(&[&[f]], vars)?.remove(0).remove(0))
}

/// Singular points of `V(f)` with their Milnor numbers.
#[pyfunction]
#[pyo3(signature = (f, vars=None, seed=0, max_dim=10_000))]
fn milnor(f: PolyLike, vars: Option<Vec<String>>, seed: u64, max_dim: usize) -> PyResult<PyMilnorReport> {
    let f = single(f, vars)?;
    let config = ls::SolverConfig { seed, ..ls::SolverConfig::default() };
    let (report, _) = ls::milnor::milnor_pipeline(&f, &config, limits(max_dim)).map_err(err)?;
    Ok(PyMilnorReport {
        f: PyPolynomial::wrap(report.f),
        milnor_sum: report.milnor_sum,
        points: report
            .points
            .into_iter()
            .map(|p| (p.coordinates, p.milnor_number, p.value_residual, p.gradient_residual))
            .collect(),
    })
}

/// Total Milnor number over all critical points of `f`.
#[pyfunction]
#[pyo3(signature = (f, vars=None, max_dim=10_000))]
fn critical_sum(f: PolyLike, vars: Option<Vec<String>>, max_dim: usize) -> PyResult<usize> {
    ls::milnor::critical_sum_with_limits(&single(f, vars)?, limits(max_dim)).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (f, vars=None))]
fn jacobian(f: PolyLike, vars: Option<Vec<String>>) -> PyResult<Vec<PyPolynomial>> {
    let f = single(f, vars)?;
    Ok(ls::jacobian_ideal(&f).map_err(err)?.into_iter().map(PyPolynomial::wrap).collect())
}

#[pymodule]
pub fn locsolve_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyTermOrder>()?;
    m.add_class::<PyStandardBasis>()?;
    m.add_class::<PyZero>()?;
    m.add_class::<PySolution>()?;
    m.add_class::<PySingularPoint>()?;
    m.add_class::<PyMilnorReport>()?;
    m.add_function(wrap_pyfunction!(parse_poly, m)?)?;
    m.add_function(wrap_pyfunction!(standard_basis, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(milnor, m)?)?;
    m.add_function(wrap_pyfunction!(critical_sum, m)?)?;
    m.add_function(wrap_pyfunction!(jacobian, m)?)?;
    m.add("LocsolveError", py.get_type::<LocsolveError>())?;
    m.add("ParseError", py.get_type::<ParseError>())?;
    m.add("PreconditionError", py.get_type::<PreconditionError>())?;
    m.add("NotZeroDimensionalError", py.get_type::<NotZeroDimensionalError>())?;
    Ok(())
}
