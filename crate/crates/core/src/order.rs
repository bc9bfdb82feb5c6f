//! Semigroup orders given by integer weight matrices.
//!
//! Monomials are compared by the lexicographic sequence of their dot
//! products with the weight rows, with ties broken by degree reverse
//! lexicographic order on the full exponent vector. Rows may contain
//! negative entries, so a variable can compare below `1`; such variables
//! are *local* and the others *global*.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{OrderError, PolyError};
use crate::poly::{Monomial, Polynomial, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TermOrder {
    rows: Vec<Vec<i64>>,
    nvars: usize,
}

impl TermOrder {
    pub fn new(rows: Vec<Vec<i64>>, nvars: usize) -> Result<Self, OrderError> {
        if rows.is_empty() {
            return Err(OrderError::EmptyMatrix);
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != nvars {
                return Err(OrderError::RowLength { row: i, expected: nvars, found: r.len() });
            }
        }
        Ok(TermOrder { rows, nvars })
    }

    /// The plain degree reverse lexicographic order (`dp`).
    pub fn degrevlex(nvars: usize) -> Self {
        TermOrder { rows: vec![vec![1; nvars]], nvars }
    }

    /// Weight `+1` on the first `global` variables and `-1` on the rest.
    pub fn plus_minus(global: usize, local: usize) -> Self {
        let mut row = vec![1; global];
        row.extend(std::iter::repeat(-1).take(local));
        TermOrder { rows: vec![row], nvars: global + local }
    }

    /// Parse `a(w1,...,wn),a(...),dp`. The final token must be `dp`; a
    /// bare `dp` is the degree reverse lexicographic order.
    pub fn parse(text: &str, nvars: usize) -> Result<Self, OrderError> {
        let bad = || OrderError::Syntax(text.to_string());
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = s.as_str();
        let mut rows = Vec::new();
        loop {
            if let Some(r) = rest.strip_prefix("a(") {
                let close = r.find(')').ok_or_else(bad)?;
                let row = r[..close]
                    .split(',')
                    .map(|w| w.parse::<i64>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>, _>>()?;
                rows.push(row);
                rest = r[close + 1..].strip_prefix(',').ok_or_else(bad)?;
            } else if rest == "dp" {
                break;
            } else {
                return Err(bad());
            }
        }
        if rows.is_empty() {
            return Ok(Self::degrevlex(nvars));
        }
        Self::new(rows, nvars)
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        for row in &self.rows {
            let wa: i128 = row.iter().zip(ea).map(|(w, &e)| *w as i128 * e as i128).sum();
            let wb: i128 = row.iter().zip(eb).map(|(w, &e)| *w as i128 * e as i128).sum();
            match wa.cmp(&wb) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        grevlex(ea, eb)
    }

    pub fn signature(&self) -> OrderSignature {
        let one = Monomial::one(self.nvars);
        let bits = (0..self.nvars)
            .map(|i| self.compare(&Monomial::var(self.nvars, i), &one) == Ordering::Greater)
            .collect();
        OrderSignature { bits }
    }

    pub fn is_global(&self) -> bool {
        self.signature().bits.iter().all(|&b| b)
    }

    /// Largest monomial of `f` with its coefficient.
    pub fn leading_term<'a>(&self, f: &'a Polynomial) -> Result<(&'a Rational, &'a Monomial), PolyError> {
        f.terms()
            .max_by(|a, b| self.compare(a.0, b.0))
            .map(|(m, c)| (c, m))
            .ok_or(PolyError::ZeroPolynomial)
    }

    pub fn leading_monomial<'a>(&self, f: &'a Polynomial) -> Result<&'a Monomial, PolyError> {
        self.leading_term(f).map(|(_, m)| m)
    }

    /// Total degree of `f` minus the degree of its leading monomial.
    pub fn ecart(&self, f: &Polynomial) -> Result<u64, PolyError> {
        let lm = self.leading_monomial(f)?;
        Ok(f.total_degree().unwrap_or(0) - lm.degree())
    }

    /// Terms of `f` sorted in decreasing order.
    pub fn sorted_terms<'a>(&self, f: &'a Polynomial) -> Vec<(&'a Monomial, &'a Rational)> {
        let mut v: Vec<_> = f.terms().collect();
        v.sort_by(|a, b| self.compare(b.0, a.0));
        v
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => {}
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

impl fmt::Debug for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == TermOrder::degrevlex(self.nvars) {
            return write!(f, "dp");
        }
        for row in &self.rows {
            let ws: Vec<String> = row.iter().map(|w| w.to_string()).collect();
            write!(f, "a({}),", ws.join(","))?;
        }
        write!(f, "dp")
    }
}

/// Which variables compare above `1`. Two orders with the same signature
/// localize a polynomial ring identically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderSignature {
    pub bits: Vec<bool>,
}

impl OrderSignature {
    pub fn local_variables(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().filter(|(_, &b)| !b).map(|(i, _)| i)
    }

    pub fn equivalent(&self, other: &OrderSignature) -> bool {
        self == other
    }
}
