//! Univariate rational polynomials: Euclidean arithmetic, Yun's squarefree
//! decomposition and Aberth–Ehrlich simultaneous root iteration.

use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{rat, rational_to_f64, Rational};

/// Dense polynomial, coefficients lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly { coeffs: vec![Rational::one()] }
    }

    /// `x - a`
    pub fn linear(a: Rational) -> Self {
        UniPoly::new(vec![-a, Rational::one()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(lc) => {
                let inv = lc.recip();
                UniPoly { coeffs: self.coeffs.iter().map(|c| c * &inv).collect() }
            }
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + rational_to_f64(c))
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * rat(i as i64)).collect())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Rational::zero();
        UniPoly::new(
            (0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z)).collect(),
        )
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Rational::zero();
        UniPoly::new(
            (0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) - other.coeffs.get(i).unwrap_or(&z)).collect(),
        )
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        (0..e).fold(UniPoly::one(), |acc, _| acc.mul(self))
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let Some(n) = self.degree().filter(|&n| n >= dd) else {
            return (UniPoly::zero(), self.clone());
        };
        let mut quot = vec![Rational::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = &rem[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Exact quotient; debug-asserts a zero remainder.
    pub fn exact_div(&self, d: &UniPoly) -> UniPoly {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*other = g = gcd(self, other)`, `g` monic.
    pub fn ext_gcd(&self, other: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UniPoly::one(), UniPoly::zero());
        let (mut t0, mut t1) = (UniPoly::zero(), UniPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = UniPoly::new(vec![lc.recip()]);
                (r0.mul(&inv), s0.mul(&inv), t0.mul(&inv))
            }
        }
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly{:?}", self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>())
    }
}

/// Yun's squarefree decomposition: monic, squarefree, pairwise coprime
/// factors with their exponents, in increasing exponent order.
pub fn squarefree_factor(p: &UniPoly) -> Vec<(UniPoly, u32)> {
    assert!(!p.is_zero(), "squarefree_factor of zero");
    let f = p.monic();
    if f.degree() == Some(0) {
        return vec![];
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0);
    let c = df.exact_div(&a0);
    let mut d = c.sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        let b_next = b.exact_div(&a);
        let c_next = d.exact_div(&a);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        d = c_next.sub(&b_next.derivative());
        b = b_next;
        i += 1;
    }
    out
}

const ABERTH_MAX_ITERS: usize = 1000;

/// All complex roots of a squarefree polynomial of degree ≥ 1.
///
/// Starting points lie on a circle whose phase is derived from `seed`.
pub fn univariate_roots(p: &UniPoly, seed: u64) -> Result<Vec<Complex64>> {
    let d = p.degree().filter(|&d| d >= 1).expect("univariate_roots needs degree >= 1");
    let monic = p.monic();
    if d == 1 {
        return Ok(vec![Complex64::new(rational_to_f64(&-&monic.coeffs[0]), 0.0)]);
    }
    let coeffs: Vec<Complex64> = monic.coeffs.iter().map(|c| Complex64::new(rational_to_f64(c), 0.0)).collect();
    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut v = Complex64::new(0.0, 0.0);
        let mut dv = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            dv = dv * z + v;
            v = v * z + c;
        }
        (v, dv)
    };

    // Fujiwara-style radius bound
    let radius = (0..d)
        .map(|i| coeffs[i].norm().powf(1.0 / (d - i) as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3);
    let phase = 0.4 + (seed % 997) as f64 * 1e-3;
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| Complex64::from_polar(radius, phase + std::f64::consts::TAU * k as f64 / d as f64))
        .collect();

    let mut converged = false;
    for _ in 0..ABERTH_MAX_ITERS {
        let mut max_step = 0.0f64;
        for k in 0..d {
            let (v, dv) = eval(z[k]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / dv;
            let repulsion: Complex64 = (0..d).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / z[k].norm().max(1.0));
            }
        }
        if max_step < 1e-15 {
            converged = true;
            break;
        }
    }
    // Newton polish; a few extra steps cost nothing at these degrees
    for zk in z.iter_mut() {
        for _ in 0..3 {
            let (v, dv) = eval(*zk);
            if dv.norm() > 0.0 {
                let step = v / dv;
                if step.is_finite() {
                    *zk -= step;
                }
            }
        }
    }
    let scale = coeffs.iter().map(|c| c.norm()).fold(1.0f64, f64::max);
    let ok = z.iter().all(|zk| {
        let (v, _) = eval(*zk);
        let mag = zk.norm().max(1.0).powi(d as i32);
        v.norm() <= 1e-9 * scale * mag
    });
    if !(converged || ok) || z.iter().any(|zk| !zk.is_finite()) {
        return Err(Error::RootsDidNotConverge { degree: d });
    }
    // snap negligible imaginary parts of real roots
    for zk in z.iter_mut() {
        if zk.im.abs() <= 1e-14 * zk.norm().max(1.0) {
            zk.im = 0.0;
        }
    }
    z.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(z)
}
