//! Zeros with multiplicities from commuting multiplication matrices.
//!
//! The characteristic polynomial of a generic combination
//! `L = Σ c_v M_v` is computed exactly and split into squarefree factors;
//! the exponent of a factor is the multiplicity of every zero whose
//! `L`-value is a root of it. Whether `L` separates the zeros is certified
//! exactly: the number of distinct zeros is the rank of the trace form
//! `(a, b) ↦ tr(M_{t_a t_b})`, and it must equal the number of distinct
//! eigenvalues of `L`.
//!
//! Coordinates come from the exact spectral projector `P` onto the
//! generalized eigenspaces belonging to one squarefree factor `f` of
//! degree `d` and exponent `e`: the traces `tr(M_v L^k P) / e`,
//! `k < d`, are power sums of the coordinate weighted by the roots of `f`,
//! which pins the coordinate down as a polynomial in the root.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::border::MultMatrices;
use crate::error::{Error, Result};
use crate::matrix::{berkowitz, QMatrix};
use crate::poly::{rat, rational_to_f64, Monomial, PolyRing, Polynomial, Rational};
use crate::univariate::{squarefree_factor, univariate_roots, UniPoly};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolverConfig {
    pub seed: u64,
    /// Relative distance below which two roots of the generic form are
    /// considered unseparated.
    pub cluster_tol: f64,
    pub residual_tol: f64,
    pub max_retries: usize,
    /// Largest quotient dimension for the symbolic Chow form.
    pub chow_cap: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { seed: 0, cluster_tol: 1e-8, residual_tol: 1e-6, max_retries: 5, chow_cap: 12 }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> std::result::Result<(), String> {
        if !(self.cluster_tol > 0.0) || !(self.residual_tol > 0.0) {
            return Err("tolerances must be positive".into());
        }
        if self.max_retries < 1 {
            return Err("max_retries must be at least 1".into());
        }
        Ok(())
    }
}

/// One zero of the ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroEntry {
    pub coordinates: Vec<Complex64>,
    /// Exact coordinates when the zero is rational.
    pub exact: Option<Vec<Rational>>,
    pub multiplicity: u32,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct ZeroSet {
    pub entries: Vec<ZeroEntry>,
    pub total: usize,
}

impl ZeroSet {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Keep the first `n` coordinates of every entry.
    pub fn project(&self, n: usize) -> ZeroSet {
        ZeroSet {
            entries: self
                .entries
                .iter()
                .map(|e| ZeroEntry {
                    coordinates: e.coordinates[..n].to_vec(),
                    exact: e.exact.as_ref().map(|x| x[..n].to_vec()),
                    multiplicity: e.multiplicity,
                    residual: e.residual,
                })
                .collect(),
            total: self.total,
        }
    }
}

pub fn format_point(p: &[Complex64]) -> String {
    let parts: Vec<String> = p
        .iter()
        .map(|z| if z.im == 0.0 { format!("{}", z.re) } else { format!("{}{:+}i", z.re, z.im) })
        .collect();
    format!("({})", parts.join(", "))
}

/// Maximum absolute value of the generators at `point`.
pub fn residual(generators: &[Polynomial], point: &[Complex64]) -> f64 {
    generators.iter().map(|g| g.eval_complex(point).norm()).fold(0.0, f64::max)
}

/// Number of distinct zeros: rank of the trace form on the quotient.
pub fn distinct_zero_count(m: &MultMatrices) -> usize {
    let mats: Vec<QMatrix> = m.basis().iter().map(|w| m.of_monomial(w)).collect();
    let mu = m.mu();
    let mut h = QMatrix::zeros(mu, mu);
    for a in 0..mu {
        for b in a..mu {
            let t = mats[a].trace_of_product(&mats[b]);
            h[(b, a)] = t.clone();
            h[(a, b)] = t;
        }
    }
    h.rank()
}

enum Attempt {
    Degenerate,
    Residual(f64, String),
}

pub fn zeros_with_multiplicities(
    m: &MultMatrices,
    generators: &[Polynomial],
    config: &SolverConfig,
) -> Result<ZeroSet> {
    if !m.commute() {
        return Err(Error::NotCommuting);
    }
    let mu = m.mu();
    if mu == 0 {
        return Ok(ZeroSet::default());
    }
    let distinct = distinct_zero_count(m);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut last = Attempt::Degenerate;
    for attempt in 0..config.max_retries {
        let span = 10 * (attempt as i64 + 1);
        let coeffs: Vec<Rational> = (0..m.nvars())
            .map(|_| {
                let c: i64 = rng.gen_range(1..=span);
                rat(if rng.gen::<bool>() { c } else { -c })
            })
            .collect();
        match try_generic_form(m, generators, config, &coeffs, distinct)? {
            Ok(zs) => return Ok(zs),
            Err(a) => last = a,
        }
    }
    match last {
        Attempt::Degenerate => Err(Error::GenericFormDegenerate { retries: config.max_retries }),
        Attempt::Residual(residual, point) => Err(Error::Residual { residual, point }),
    }
}

fn try_generic_form(
    m: &MultMatrices,
    generators: &[Polynomial],
    config: &SolverConfig,
    coeffs: &[Rational],
    distinct: usize,
) -> Result<std::result::Result<ZeroSet, Attempt>> {
    let l = m.linear_combination(coeffs);
    let p = l.char_poly();
    let factors = squarefree_factor(&p);
    if factors.iter().map(|(f, _)| f.degree().unwrap()).sum::<usize>() != distinct {
        return Ok(Err(Attempt::Degenerate));
    }

    let mut roots_per_factor = Vec::with_capacity(factors.len());
    for (f, _) in &factors {
        roots_per_factor.push(univariate_roots(f, config.seed)?);
    }
    let all: Vec<Complex64> = roots_per_factor.iter().flatten().copied().collect();
    for (i, a) in all.iter().enumerate() {
        for b in &all[i + 1..] {
            if (a - b).norm() <= config.cluster_tol * a.norm().max(b.norm()).max(1.0) {
                return Ok(Err(Attempt::Degenerate));
            }
        }
    }

    let mut entries = Vec::new();
    for ((f, e), roots) in factors.iter().zip(&roots_per_factor) {
        let coords = factor_coordinates(m, &l, &p, f, *e);
        let d = f.degree().unwrap();
        for lam in roots {
            let point: Vec<Complex64> = coords
                .iter()
                .map(|a| a.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * lam + rational_to_f64(c)))
                .collect();
            let point: Vec<Complex64> = point.into_iter().map(snap).collect();
            let exact = (d == 1).then(|| coords.iter().map(|a| a.first().cloned().unwrap_or_else(Rational::zero)).collect());
            let res = residual(generators, &point);
            if !(res <= config.residual_tol) {
                return Ok(Err(Attempt::Residual(res, format_point(&point))));
            }
            entries.push(ZeroEntry { coordinates: point, exact, multiplicity: *e, residual: res });
        }
    }
    entries.sort_by(|a, b| {
        a.coordinates
            .iter()
            .zip(&b.coordinates)
            .flat_map(|(x, y)| [approx_cmp(x.re, y.re), approx_cmp(x.im, y.im)])
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let total = entries.iter().map(|e| e.multiplicity as usize).sum();
    debug_assert_eq!(total, m.mu());
    Ok(Ok(ZeroSet { entries, total }))
}

/// Zero out real or imaginary parts that are rounding noise.
fn snap(z: Complex64) -> Complex64 {
    let tiny = |t: f64| if t.abs() <= 1e-13 * z.norm().max(1.0) { 0.0 } else { t };
    Complex64::new(tiny(z.re), tiny(z.im))
}

/// Order coordinates, treating values closer than rounding noise as equal
/// so that the order of zeros does not depend on the random linear form.
fn approx_cmp(a: f64, b: f64) -> std::cmp::Ordering {
    if (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0) {
        std::cmp::Ordering::Equal
    } else {
        a.total_cmp(&b)
    }
}

/// For the squarefree factor `f` (exponent `e`) of `charpoly(L) = p`,
/// return for every variable the coefficients of the polynomial `r_v`
/// with `ζ_v = r_v(λ)` at every root `λ` of `f`.
fn factor_coordinates(m: &MultMatrices, l: &QMatrix, p: &UniPoly, f: &UniPoly, e: u32) -> Vec<Vec<Rational>> {
    let d = f.degree().unwrap();
    let fe = f.pow(e);
    let rest = p.exact_div(&fe);
    let (_, _, t) = fe.ext_gcd(&rest);
    let idempotent = t.mul(&rest).div_rem(p).1;
    let proj = l.eval_poly(&idempotent);

    let scale = Rational::one() / rat(e as i64);
    let mut powers = Vec::with_capacity(2 * d - 1);
    powers.push(proj);
    for k in 1..(2 * d - 1) {
        let next = l * &powers[k - 1];
        powers.push(next);
    }
    let sums: Vec<Rational> = powers.iter().map(|x| x.trace() * &scale).collect();
    let hankel = QMatrix::from_rows((0..d).map(|k| (0..d).map(|j| sums[k + j].clone()).collect()).collect());
    m.matrices()
        .iter()
        .map(|mv| {
            let rhs: Vec<Rational> = (0..d).map(|k| mv.trace_of_product(&powers[k]) * &scale).collect();
            hankel.solve(&rhs).expect("Hankel matrix of a squarefree factor is nonsingular")
        })
        .collect()
}

/// `det(v_0 I + Σ v_i M_{x_i})` as a polynomial in `v_0, …, v_m`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChowForm {
    pub poly: Polynomial,
}

impl ChowForm {
    pub fn degree(&self) -> u64 {
        self.poly.total_degree().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let d = self.degree();
        self.poly.terms().all(|(m, _)| m.degree() == d)
    }
}

pub fn chow_form(m: &MultMatrices, config: &SolverConfig) -> Result<ChowForm> {
    let mu = m.mu();
    if mu > config.chow_cap {
        return Err(Error::ChowCap { mu, cap: config.chow_cap });
    }
    let names: Vec<String> = (0..=m.nvars()).map(|i| format!("v{}", i)).collect();
    let ring = PolyRing::new(&names)?;
    if mu == 0 {
        return Ok(ChowForm { poly: Polynomial::one(&ring) });
    }
    // A = -Σ v_i M_i, so det(λI - A) evaluated at λ = v_0 is the Chow form
    let entries: Vec<Vec<Polynomial>> = (0..mu)
        .map(|r| {
            (0..mu)
                .map(|c| {
                    let mut p = Polynomial::zero(&ring);
                    for (i, mv) in m.matrices().iter().enumerate() {
                        let a = &mv[(r, c)];
                        if !a.is_zero() {
                            p.add_term(Monomial::var(ring.nvars(), i + 1), -a);
                        }
                    }
                    p
                })
                .collect()
        })
        .collect();
    let coeffs = berkowitz(&entries);
    let v0 = Polynomial::var(&ring, 0);
    let mut out = Polynomial::zero(&ring);
    for (k, c) in coeffs.iter().enumerate() {
        out = &out + &(c * &v0.pow((mu - k) as u32));
    }
    Ok(ChowForm { poly: out })
}

/// Expand `Π (v_0 + Σ ζ_i v_i)^{m_ζ}` numerically.
pub fn chow_from_zeros(zs: &ZeroSet, nvars: usize) -> BTreeMap<Monomial, Complex64> {
    let mut acc: BTreeMap<Monomial, Complex64> = BTreeMap::new();
    acc.insert(Monomial::one(nvars + 1), Complex64::new(1.0, 0.0));
    for entry in &zs.entries {
        let mut linear = vec![(Monomial::var(nvars + 1, 0), Complex64::new(1.0, 0.0))];
        for (i, z) in entry.coordinates.iter().enumerate() {
            linear.push((Monomial::var(nvars + 1, i + 1), *z));
        }
        for _ in 0..entry.multiplicity {
            let mut next: BTreeMap<Monomial, Complex64> = BTreeMap::new();
            for (m, c) in &acc {
                for (lm, lc) in &linear {
                    *next.entry(m.mul(lm)).or_default() += c * lc;
                }
            }
            acc = next;
        }
    }
    acc
}

/// Largest coefficient difference between the exact Chow form and the
/// product rebuilt from a zero set, relative to the largest coefficient.
pub fn chow_relative_error(chow: &ChowForm, zs: &ZeroSet) -> f64 {
    let nvars = chow.poly.ring().nvars() - 1;
    let rebuilt = chow_from_zeros(zs, nvars);
    let mut keys: Vec<&Monomial> = rebuilt.keys().collect();
    keys.extend(chow.poly.terms().map(|(m, _)| m));
    let mut max_diff = 0.0f64;
    let mut max_coef = 0.0f64;
    for k in keys {
        let exact = Complex64::new(rational_to_f64(&chow.poly.coeff(k)), 0.0);
        let approx = rebuilt.get(k).copied().unwrap_or_default();
        max_diff = max_diff.max((exact - approx).norm());
        max_coef = max_coef.max(exact.norm());
    }
    max_diff / max_coef.max(f64::MIN_POSITIVE)
}
