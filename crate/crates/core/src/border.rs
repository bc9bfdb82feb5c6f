//! Border bases built from reduced normal forms, and the multiplication
//! matrices of the quotient they describe.

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::order::TermOrder;
use crate::poly::{Monomial, Polynomial, Rational};
use crate::stdbasis::{coordinates, order_ideal, reduced_normal_form, sort_monomials, OrderIdealW, StandardBasis};

/// `(x_1 W ∪ … ∪ x_m W) \ W`, sorted increasingly by `order`.
pub fn border(w: &OrderIdealW) -> Vec<Monomial> {
    border_under(w.monomials(), w.order())
}

fn border_under(w: &[Monomial], order: &TermOrder) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    for t in w {
        for i in 0..t.nvars() {
            let b = t.mul_var(i);
            if !w.contains(&b) && !out.contains(&b) {
                out.push(b);
            }
        }
    }
    sort_monomials(&mut out, order);
    out
}

#[derive(Clone, Debug)]
pub struct BorderBasisResult {
    w: OrderIdealW,
    border: Vec<Monomial>,
    /// `tails[j][i] = α_ij` in `b_j ≡ Σ_i α_ij t_i`.
    tails: Vec<Vec<Rational>>,
    h: Vec<Polynomial>,
}

impl BorderBasisResult {
    pub fn order_ideal(&self) -> &OrderIdealW {
        &self.w
    }

    pub fn border(&self) -> &[Monomial] {
        &self.border
    }

    /// `H_j = b_j - Σ α_ij t_i`, one per border monomial.
    pub fn polynomials(&self) -> &[Polynomial] {
        &self.h
    }

    pub fn tail(&self, j: usize) -> &[Rational] {
        &self.tails[j]
    }

    pub fn mu(&self) -> usize {
        self.w.len()
    }

    /// W-coordinates of the class of a monomial in `W ∪ ∂W`.
    fn coordinates_of(&self, m: &Monomial) -> Option<Vec<Rational>> {
        if let Some(i) = self.w.index_of(m) {
            let mut v = vec![Rational::from_integer(0.into()); self.mu()];
            v[i] = Rational::from_integer(1.into());
            return Some(v);
        }
        self.border.iter().position(|b| b == m).map(|j| self.tails[j].clone())
    }
}

pub fn compute_border_basis(basis: &StandardBasis) -> Result<BorderBasisResult> {
    let w = order_ideal(basis)?;
    if w.is_empty() {
        return Err(Error::EmptyQuotient);
    }
    let border = border(&w);
    let ring = basis.ring();
    let mut tails = Vec::with_capacity(border.len());
    let mut h = Vec::with_capacity(border.len());
    for b in &border {
        let mono = Polynomial::term(ring, Rational::from_integer(1.into()), b.clone());
        let r = reduced_normal_form(&mono, basis)?;
        tails.push(coordinates(&r, &w));
        h.push(&mono - &r);
    }
    Ok(BorderBasisResult { w, border, tails, h })
}

/// Matrices of multiplication by each ring variable on the quotient, in
/// the basis `W` (increasing order). Row `i` of `M_v` holds the
/// coordinates of `v * t_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct MultMatrices {
    matrices: Vec<QMatrix>,
    basis: Vec<Monomial>,
}

impl MultMatrices {
    pub fn new(matrices: Vec<QMatrix>, basis: Vec<Monomial>) -> Self {
        assert!(matrices.iter().all(|m| m.nrows() == basis.len() && m.ncols() == basis.len()));
        MultMatrices { matrices, basis }
    }

    pub fn get(&self, var: usize) -> &QMatrix {
        &self.matrices[var]
    }

    pub fn matrices(&self) -> &[QMatrix] {
        &self.matrices
    }

    pub fn nvars(&self) -> usize {
        self.matrices.len()
    }

    pub fn mu(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn commute(&self) -> bool {
        self.matrices
            .iter()
            .enumerate()
            .all(|(i, a)| self.matrices[i + 1..].iter().all(|b| &(a * b) == &(b * a)))
    }

    /// Matrix of multiplication by an arbitrary monomial.
    pub fn of_monomial(&self, m: &Monomial) -> QMatrix {
        let mut acc = QMatrix::identity(self.mu());
        for (v, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                acc = &acc * &self.matrices[v];
            }
        }
        acc
    }

    /// `Σ c_v M_v`.
    pub fn linear_combination(&self, c: &[Rational]) -> QMatrix {
        assert_eq!(c.len(), self.nvars());
        self.matrices
            .iter()
            .zip(c)
            .fold(QMatrix::zeros(self.mu(), self.mu()), |acc, (m, ci)| &acc + &m.scale(ci))
    }
}

pub fn multiplication_matrices(bb: &BorderBasisResult) -> MultMatrices {
    let mu = bb.mu();
    let w = bb.order_ideal().monomials();
    let nvars = w[0].nvars();
    let matrices = (0..nvars)
        .map(|v| {
            let rows = w
                .iter()
                .map(|t| bb.coordinates_of(&t.mul_var(v)).expect("v*t lies in W or its border"))
                .collect();
            let m = QMatrix::from_rows(rows);
            debug_assert_eq!(m.nrows(), mu);
            m
        })
        .collect();
    MultMatrices { matrices, basis: w.to_vec() }
}
