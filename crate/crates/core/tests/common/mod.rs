//! Test-only oracles and seeded generators, written without the library's
//! reduction code.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use locsolve::{ConstrainedProblem, Monomial, PolyRing, Polynomial, Rational};
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn qq(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Plain sparse polynomial for the oracle: exponent vector -> coefficient.
pub type OPoly = BTreeMap<Vec<u32>, Rational>;

/// Degree reverse lexicographic comparison, straight from the definition.
pub fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

fn lead(f: &OPoly) -> (&Vec<u32>, &Rational) {
    f.iter().max_by(|x, y| grevlex(x.0, y.0)).unwrap()
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn add_scaled(f: &mut OPoly, g: &OPoly, c: &Rational, shift: &[u32]) {
    for (m, a) in g {
        let e: Vec<u32> = m.iter().zip(shift).map(|(x, y)| x + y).collect();
        let v = f.entry(e.clone()).or_insert_with(Rational::zero);
        *v += a * c;
        if v.is_zero() {
            f.remove(&e);
        }
    }
}

/// Full reduction of `f` by `g` (all terms, not just the head).
fn reduce(mut f: OPoly, g: &[OPoly]) -> OPoly {
    let mut rem = OPoly::new();
    while !f.is_empty() {
        let (m, c) = {
            let (m, c) = lead(&f);
            (m.clone(), c.clone())
        };
        match g.iter().find(|h| divides(lead(h).0, &m)) {
            Some(h) => {
                let (hm, hc) = lead(h);
                let shift: Vec<u32> = m.iter().zip(hm).map(|(x, y)| x - y).collect();
                let factor = -(&c / hc);
                add_scaled(&mut f, h, &factor, &shift);
            }
            None => {
                f.remove(&m);
                rem.insert(m, c);
            }
        }
    }
    rem
}

fn monic(mut f: OPoly) -> OPoly {
    let c = lead(&f).1.recip();
    for v in f.values_mut() {
        *v *= &c;
    }
    f
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Textbook Buchberger with the normal selection strategy and the
/// coprime-leading-monomial criterion, then minimalization. Returns the
/// leading monomials of the reduced Gröbner basis under grevlex.
pub fn buchberger_leading_ideal(gens: &[OPoly]) -> BTreeSet<Vec<u32>> {
    let mut g: Vec<OPoly> = gens.iter().filter(|f| !f.is_empty()).cloned().map(monic).collect();
    let mut pairs: Vec<(usize, usize)> = (0..g.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while !pairs.is_empty() {
        let k = (0..pairs.len())
            .min_by(|&a, &b| {
                let la = lcm(lead(&g[pairs[a].0]).0, lead(&g[pairs[a].1]).0);
                let lb = lcm(lead(&g[pairs[b].0]).0, lead(&g[pairs[b].1]).0);
                grevlex(&la, &lb)
            })
            .unwrap();
        let (i, j) = pairs.swap_remove(k);
        let (mi, ci) = lead(&g[i]);
        let (mj, cj) = lead(&g[j]);
        if mi.iter().zip(mj).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        let l = lcm(mi, mj);
        let si: Vec<u32> = l.iter().zip(mi).map(|(a, b)| a - b).collect();
        let sj: Vec<u32> = l.iter().zip(mj).map(|(a, b)| a - b).collect();
        let mut s = OPoly::new();
        add_scaled(&mut s, &g[i], &ci.recip(), &si);
        add_scaled(&mut s, &g[j], &-cj.recip(), &sj);
        let r = reduce(s, &g);
        if !r.is_empty() {
            let k = g.len();
            g.push(monic(r));
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    let mut lms: Vec<Vec<u32>> = g.iter().map(|f| lead(f).0.clone()).collect();
    lms.sort();
    lms.dedup();
    let minimal: BTreeSet<Vec<u32>> =
        lms.iter().filter(|m| !lms.iter().any(|d| d != *m && divides(d, m))).cloned().collect();
    minimal
}

/// Number of monomials outside the monomial ideal generated by `gens`,
/// or `None` if that set is infinite.
pub fn staircase_size(gens: &BTreeSet<Vec<u32>>, nvars: usize) -> Option<usize> {
    let mut bound = vec![0u32; nvars];
    for (i, b) in bound.iter_mut().enumerate() {
        let pure = gens.iter().filter(|m| m.iter().enumerate().all(|(j, e)| j == i || *e == 0) && m[i] > 0);
        *b = pure.map(|m| m[i]).min()?;
    }
    let mut count = 0;
    let mut e = vec![0u32; nvars];
    loop {
        if !gens.iter().any(|g| divides(g, &e)) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == nvars {
                return Some(count);
            }
            e[k] += 1;
            if e[k] < bound[k] {
                break;
            }
            e[k] = 0;
            k += 1;
        }
    }
}

pub fn to_opoly(f: &Polynomial) -> OPoly {
    f.terms().map(|(m, c)| (m.exponents().to_vec(), c.clone())).collect()
}

pub fn from_opoly(f: &OPoly, ring: &Arc<PolyRing>) -> Polynomial {
    Polynomial::from_terms(ring, f.iter().map(|(m, c)| (Monomial::new(m.clone()), c.clone())))
}

fn random_tail(r: &mut ChaCha8Rng, nvars: usize, k: usize, dk: u32, out: &mut OPoly) {
    // terms of total degree <= 3 in x_k, ..., x_{n-1} with x_k-degree < dk
    for _ in 0..r.gen_range(1..=4) {
        let mut e = vec![0u32; nvars];
        let mut budget = r.gen_range(0..=3u32);
        e[k] = r.gen_range(0..dk).min(budget);
        budget -= e[k];
        for slot in e.iter_mut().skip(k + 1) {
            let t = r.gen_range(0..=budget);
            *slot = t;
            budget -= t;
        }
        let c = q(r.gen_range(-5..=5));
        let v = out.entry(e.clone()).or_insert_with(Rational::zero);
        *v += c;
        if v.is_zero() {
            out.remove(&e);
        }
    }
}

/// A zero-dimensional ideal from a triangular set: generator `k` is monic
/// of degree `d_k <= 3` in `x_k` with coefficients in the later variables.
/// The generators are then mixed by a random unipotent constant matrix.
/// Returns the generators and `Π d_k`, the global quotient dimension.
pub fn triangular_ideal(seed: u64, nvars: usize) -> (Vec<OPoly>, usize) {
    let mut r = rng(seed);
    let mut tri = Vec::new();
    let mut prod = 1;
    for k in 0..nvars {
        let dk = r.gen_range(1..=3u32);
        prod *= dk as usize;
        let mut g = OPoly::new();
        let mut lead = vec![0u32; nvars];
        lead[k] = dk;
        g.insert(lead, q(1));
        random_tail(&mut r, nvars, k, dk, &mut g);
        tri.push(g);
    }
    let mut mixed = tri.clone();
    for i in 0..nvars {
        for j in 0..i {
            let c = q(r.gen_range(-2..=2));
            if !c.is_zero() {
                let zero = vec![0u32; nvars];
                add_scaled(&mut mixed[i], &tri[j], &c, &zero);
            }
        }
    }
    (mixed, prod)
}

/// A two-variable constrained problem with known structure:
/// `I = ⟨Π (y - a_i)^{m_i}, (x - b)^k + c (y - a_0)⟩` and `J` through
/// some of its zeros. Also returns the quotient dimension without
/// constraint.
pub fn constrained_problem(seed: u64) -> (ConstrainedProblem, usize) {
    let mut r = rng(seed);
    let ring = PolyRing::new(&["x", "y"]).unwrap();
    let x = Polynomial::var(&ring, 0);
    let y = Polynomial::var(&ring, 1);
    let c = |v: i64| Polynomial::constant(&ring, q(v));
    let a0 = r.gen_range(-3..=3);
    let m0 = r.gen_range(1..=2u32);
    let mut roots = vec![a0];
    let mut gy = (&y - &c(a0)).pow(m0);
    let mut deg_y = m0;
    let a1 = r.gen_range(-3..=3);
    if a1 != a0 && r.gen_bool(0.6) {
        roots.push(a1);
        gy = &gy * &(&y - &c(a1));
        deg_y += 1;
    }
    let b = r.gen_range(-2..=2);
    let k = r.gen_range(1..=2u32);
    let cc = r.gen_range(-2..=2);
    let gx = &(&x - &c(b)).pow(k) + &(&c(cc) * &(&y - &c(roots[0])));
    let constraint = match r.gen_range(0..4) {
        0 => &y - &c(roots[0]),
        1 => &x - &c(b),
        2 => &(&x - &c(b)) * &(&y - &c(*roots.last().unwrap())),
        _ => Polynomial::zero(&ring),
    };
    let p = ConstrainedProblem::new(ring.clone(), vec![gy, gx], vec![constraint]).unwrap();
    (p, deg_y as usize * k as usize)
}

/// Random polynomial in `ring` with small integer coefficients.
pub fn random_poly(r: &mut ChaCha8Rng, ring: &Arc<PolyRing>, max_deg: u32, terms: usize) -> Polynomial {
    let n = ring.nvars();
    Polynomial::from_terms(
        ring,
        (0..terms).map(|_| {
            let e: Vec<u32> = (0..n).map(|_| r.gen_range(0..=max_deg)).collect();
            (Monomial::new(e), q(r.gen_range(-6..=6)))
        }),
    )
}
