//! Standard bases of ideals in the localization of a polynomial ring at a
//! semigroup order.
//!
//! The localization is never built explicitly. Its elements are represented
//! by polynomials, and ideal membership is decided with Mora's normal form,
//! which may implicitly multiply the input by a unit `1 + g`, `lt(g) < 1`.
//!
//! Once the quotient is known to be finite dimensional, the reduced normal
//! form no longer needs Mora's trick: every local variable is nilpotent in
//! the quotient, with nilpotency index at most the dimension `μ`, so any
//! monomial with a local exponent `≥ μ` lies in the ideal and can be
//! discarded. Plain division with that truncation terminates and yields the
//! unique representative supported on the standard monomials.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::order::TermOrder;
use crate::poly::{Monomial, PolyRing, Polynomial, Rational};

/// Resource caps for the basis computation and the staircase walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_pairs: usize,
    pub max_standard_monomials: usize,
    pub max_reduction_steps: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_pairs: 100_000, max_standard_monomials: 10_000, max_reduction_steps: 1_000_000 }
    }
}

/// A reducer with its cached leading data.
#[derive(Clone, Debug)]
struct Reducer {
    poly: Polynomial,
    lc: Rational,
    lm: Monomial,
    ecart: u64,
}

impl Reducer {
    fn new(poly: Polynomial, order: &TermOrder) -> Self {
        let (lc, lm) = order.leading_term(&poly).expect("reducer must be nonzero");
        let (lc, lm) = (lc.clone(), lm.clone());
        let ecart = poly.total_degree().unwrap() - lm.degree();
        Reducer { poly, lc, lm, ecart }
    }

    fn monic(poly: Polynomial, order: &TermOrder) -> Self {
        let lc = order.leading_term(&poly).expect("reducer must be nonzero").0.clone();
        Self::new(poly.scale(&lc.recip()), order)
    }
}

/// S-polynomial of `f` and `g`, cancelling the lcm of their leading terms.
pub fn spoly(f: &Polynomial, g: &Polynomial, order: &TermOrder) -> Polynomial {
    let (cf, mf) = order.leading_term(f).expect("nonzero");
    let (cg, mg) = order.leading_term(g).expect("nonzero");
    let l = mf.lcm(mg);
    let a = f.mul_term(&cf.recip(), &mf.quotient_of(&l).unwrap());
    let b = g.mul_term(&cg.recip(), &mg.quotient_of(&l).unwrap());
    &a - &b
}

/// Mora's weak normal form of `f` against `gens`.
///
/// The result `h` satisfies `unit * f ≡ h` modulo the ideal of `gens`, and
/// either `h = 0` or no leading monomial of `gens` divides `lt(h)`.
pub fn mora_normal_form(f: &Polynomial, gens: &[Polynomial], order: &TermOrder) -> Polynomial {
    mora_normal_form_with_limit(f, gens, order, Limits::default().max_reduction_steps)
        .expect("Mora reduction step limit exceeded")
}

pub fn mora_normal_form_with_limit(
    f: &Polynomial,
    gens: &[Polynomial],
    order: &TermOrder,
    max_steps: usize,
) -> Result<Polynomial> {
    let reducers: Vec<Reducer> =
        gens.iter().filter(|g| !g.is_zero()).map(|g| Reducer::new(g.clone(), order)).collect();
    mora_reduce(f.clone(), reducers, order, max_steps)
}

fn mora_reduce(mut h: Polynomial, mut t: Vec<Reducer>, order: &TermOrder, max_steps: usize) -> Result<Polynomial> {
    let mut steps = 0;
    loop {
        if h.is_zero() {
            return Ok(h);
        }
        let (lc_h, lm_h) = {
            let (c, m) = order.leading_term(&h).unwrap();
            (c.clone(), m.clone())
        };
        // minimal écart, then smaller leading monomial, then earlier index
        let choice = t
            .iter()
            .enumerate()
            .filter(|(_, r)| r.lm.divides(&lm_h))
            .min_by(|(i, a), (j, b)| {
                a.ecart.cmp(&b.ecart).then_with(|| order.compare(&a.lm, &b.lm)).then_with(|| i.cmp(j))
            })
            .map(|(i, _)| i);
        let Some(idx) = choice else {
            return Ok(h);
        };
        steps += 1;
        if steps > max_steps {
            return Err(Error::ResourceLimit(format!("Mora reduction exceeded {} steps", max_steps)));
        }
        let h_ecart = h.total_degree().unwrap() - lm_h.degree();
        let g = t[idx].clone();
        if g.ecart > h_ecart {
            t.push(Reducer { poly: h.clone(), lc: lc_h.clone(), lm: lm_h.clone(), ecart: h_ecart });
        }
        let q = g.lm.quotient_of(&lm_h).unwrap();
        h.sub_mul_term(&(&lc_h / &g.lc), &q, &g.poly);
    }
}

/// Division with every reducible term removed, largest first. Monomials
/// whose exponent in some variable of `truncate` reaches `bound` are
/// dropped. Terminates when the order restricted to bounded local
/// exponents is a well-order, i.e. always once `truncate` holds every
/// local variable.
fn reduce_fully(
    f: &Polynomial,
    reducers: &[Reducer],
    order: &TermOrder,
    truncate: &[usize],
    bound: u32,
    max_steps: usize,
) -> Result<Polynomial> {
    let too_big = |m: &Monomial| truncate.iter().any(|&i| m.exponents()[i] >= bound);
    let mut h = f.clone();
    h.retain_terms(|m| !too_big(m));
    let mut rem = Polynomial::zero(f.ring());
    let mut steps = 0;
    while !h.is_zero() {
        let (lc, lm) = {
            let (c, m) = order.leading_term(&h).unwrap();
            (c.clone(), m.clone())
        };
        match reducers.iter().find(|r| r.lm.divides(&lm)) {
            Some(r) => {
                steps += 1;
                if steps > max_steps {
                    return Err(Error::ResourceLimit(format!("reduction exceeded {} steps", max_steps)));
                }
                let q = r.lm.quotient_of(&lm).unwrap();
                h.sub_mul_term(&(&lc / &r.lc), &q, &r.poly);
                h.retain_terms(|m| !too_big(m));
            }
            None => {
                h.remove_term(&lm);
                rem.add_term(lm, lc);
            }
        }
    }
    Ok(rem)
}

/// Finite order ideal of standard monomials, sorted increasingly by the
/// order it was computed under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderIdealW {
    monomials: Vec<Monomial>,
    order: TermOrder,
}

impl OrderIdealW {
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    /// True for the zero quotient (unit ideal).
    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.monomials.iter().position(|w| w == m)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.index_of(m).is_some()
    }
}

/// A reduced, monic standard basis of `⟨gens⟩` in the localization.
#[derive(Clone, Debug)]
pub struct StandardBasis {
    ring: Arc<PolyRing>,
    order: TermOrder,
    generators: Vec<Polynomial>,
    leading_ideal: Vec<Monomial>,
    staircase: Option<OrderIdealW>,
    reduced: bool,
    limits: Limits,
}

impl StandardBasis {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    /// Generators sorted increasingly by leading monomial.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Minimal generators of the leading ideal, in the same order as
    /// [`generators`](Self::generators).
    pub fn leading_ideal(&self) -> &[Monomial] {
        &self.leading_ideal
    }

    /// False only when the quotient is infinite dimensional under a
    /// non-global order; tails are then left as computed.
    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_unit(&self) -> bool {
        self.leading_ideal.iter().any(Monomial::is_one)
    }

    fn reducers(&self) -> Vec<Reducer> {
        self.generators.iter().map(|g| Reducer::new(g.clone(), &self.order)).collect()
    }
}

pub fn compute_standard_basis(gens: &[Polynomial], order: &TermOrder) -> Result<StandardBasis> {
    compute_standard_basis_with_limits(gens, order, Limits::default())
}

pub fn compute_standard_basis_with_limits(
    gens: &[Polynomial],
    order: &TermOrder,
    limits: Limits,
) -> Result<StandardBasis> {
    let ring = match gens.iter().find(|g| !g.is_zero()) {
        Some(g) => g.ring().clone(),
        None => return Err(Error::NoGenerators),
    };
    if gens.iter().any(|g| g.ring() != &ring) {
        return Err(crate::error::PolyError::RingMismatch.into());
    }
    assert_eq!(order.nvars(), ring.nvars(), "order and ring disagree on variable count");

    let mut basis: Vec<Reducer> =
        gens.iter().filter(|g| !g.is_zero()).map(|g| Reducer::monic(g.clone(), order)).collect();
    if basis.iter().any(|r| r.lm.is_one()) {
        return Ok(unit_basis(&ring, order, limits));
    }

    let mut pairs: Vec<(usize, usize)> =
        (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut processed = 0;
    while !pairs.is_empty() {
        // normal strategy: smallest lcm first
        let pick = (0..pairs.len())
            .min_by(|&a, &b| {
                let la = basis[pairs[a].0].lm.lcm(&basis[pairs[a].1].lm);
                let lb = basis[pairs[b].0].lm.lcm(&basis[pairs[b].1].lm);
                order.compare(&la, &lb).then_with(|| pairs[a].cmp(&pairs[b]))
            })
            .unwrap();
        let (i, j) = pairs.remove(pick);
        processed += 1;
        if processed > limits.max_pairs {
            return Err(Error::ResourceLimit(format!("more than {} critical pairs", limits.max_pairs)));
        }
        let s = spoly(&basis[i].poly, &basis[j].poly, order);
        let h = mora_reduce(s, basis.clone(), order, limits.max_reduction_steps)?;
        if h.is_zero() {
            continue;
        }
        let r = Reducer::monic(h, order);
        if r.lm.is_one() {
            return Ok(unit_basis(&ring, order, limits));
        }
        let k = basis.len();
        pairs.extend((0..k).map(|i| (i, k)));
        basis.push(r);
    }

    // keep one element per minimal leading monomial
    let minimal: Vec<Reducer> = basis
        .iter()
        .enumerate()
        .filter(|(i, r)| {
            !basis
                .iter()
                .enumerate()
                .any(|(j, s)| j != *i && s.lm.divides(&r.lm) && (s.lm != r.lm || j < *i))
        })
        .map(|(_, r)| r.clone())
        .collect();
    let mut leading: Vec<Monomial> = minimal.iter().map(|r| r.lm.clone()).collect();
    leading.sort_by(|a, b| order.compare(a, b));

    let staircase = walk_staircase(&leading, order, limits.max_standard_monomials).ok();
    let truncation = truncation_for(order, staircase.as_ref());
    let (generators, reduced) = match truncation {
        Some((locals, bound)) => {
            let gens = leading
                .iter()
                .map(|m| {
                    let mono = Polynomial::term(&ring, Rational::one(), m.clone());
                    let r = reduce_fully(&mono, &minimal, order, &locals, bound, limits.max_reduction_steps)?;
                    Ok(&mono - &r)
                })
                .collect::<Result<Vec<_>>>()?;
            (gens, true)
        }
        None => {
            let mut sorted = minimal;
            sorted.sort_by(|a, b| order.compare(&a.lm, &b.lm));
            (sorted.into_iter().map(|r| r.poly).collect(), false)
        }
    };

    Ok(StandardBasis {
        ring,
        order: order.clone(),
        generators,
        leading_ideal: leading,
        staircase,
        reduced,
        limits,
    })
}

/// Local variables and the exponent at which monomials vanish in the
/// quotient; `None` when plain division cannot be guaranteed to stop.
fn truncation_for(order: &TermOrder, staircase: Option<&OrderIdealW>) -> Option<(Vec<usize>, u32)> {
    let locals: Vec<usize> = order.signature().local_variables().collect();
    if locals.is_empty() {
        return Some((locals, u32::MAX));
    }
    let mu = staircase?.len();
    Some((locals, mu.max(1) as u32))
}

fn unit_basis(ring: &Arc<PolyRing>, order: &TermOrder, limits: Limits) -> StandardBasis {
    StandardBasis {
        ring: ring.clone(),
        order: order.clone(),
        generators: vec![Polynomial::one(ring)],
        leading_ideal: vec![Monomial::one(ring.nvars())],
        staircase: Some(OrderIdealW { monomials: vec![], order: order.clone() }),
        reduced: true,
        limits,
    }
}

fn walk_staircase(leading: &[Monomial], order: &TermOrder, cap: usize) -> Result<OrderIdealW> {
    let nvars = order.nvars();
    let in_ideal = |m: &Monomial| leading.iter().any(|l| l.divides(m));
    let one = Monomial::one(nvars);
    let mut found = Vec::new();
    if !in_ideal(&one) {
        let mut seen: HashSet<Monomial> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(one.clone());
        queue.push_back(one);
        while let Some(w) = queue.pop_front() {
            found.push(w.clone());
            if found.len() > cap {
                return Err(Error::NotZeroDimensional { cap });
            }
            for i in 0..nvars {
                let next = w.mul_var(i);
                if !in_ideal(&next) && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    found.sort_by(|a, b| order.compare(a, b));
    Ok(OrderIdealW { monomials: found, order: order.clone() })
}

/// Breadth-first closure of `1` under variable multiplication, staying
/// outside the leading ideal.
pub fn standard_monomials(basis: &StandardBasis, cap: usize) -> Result<OrderIdealW> {
    assert!(cap > 0, "cap must be positive");
    match &basis.staircase {
        Some(w) if w.len() <= cap => Ok(w.clone()),
        _ => walk_staircase(&basis.leading_ideal, &basis.order, cap),
    }
}

/// Standard monomials under the basis' own cap.
pub fn order_ideal(basis: &StandardBasis) -> Result<OrderIdealW> {
    standard_monomials(basis, basis.limits.max_standard_monomials)
}

/// Dimension of the localized quotient.
pub fn vdim(basis: &StandardBasis) -> Result<usize> {
    order_ideal(basis).map(|w| w.len())
}

/// The unique `r` supported on the standard monomials with `f - r` in the
/// localized ideal.
pub fn reduced_normal_form(f: &Polynomial, basis: &StandardBasis) -> Result<Polynomial> {
    if basis.is_unit() {
        return Ok(Polynomial::zero(&basis.ring));
    }
    let (locals, bound) = truncation_for(&basis.order, basis.staircase.as_ref()).ok_or(Error::NotZeroDimensional {
        cap: basis.limits.max_standard_monomials,
    })?;
    reduce_fully(f, &basis.reducers(), &basis.order, &locals, bound, basis.limits.max_reduction_steps)
}

/// Coordinates of a polynomial supported on `w` in the basis `w`.
pub fn coordinates(r: &Polynomial, w: &OrderIdealW) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); w.len()];
    for (m, c) in r.terms() {
        let i = w.index_of(m).expect("polynomial not supported on the order ideal");
        v[i] = c.clone();
    }
    v
}

/// Sorted distinct leading monomials, useful for comparing bases.
pub fn leading_set(basis: &StandardBasis) -> BTreeSet<Monomial> {
    basis.leading_ideal.iter().cloned().collect()
}

/// Sort helper shared with the border module.
pub(crate) fn sort_monomials(ms: &mut [Monomial], order: &TermOrder) {
    ms.sort_by(|a, b| order.compare(a, b));
}
