//! Dense exact matrices and the division-free characteristic polynomial.

use std::fmt;
use std::ops::{Add, Mul, Neg};

use num_traits::{One, Zero};

use crate::poly::{Polynomial, Rational};
use crate::univariate::UniPoly;

/// Minimal commutative-ring interface used by [`berkowitz`]. Polynomial
/// entries need a ring handle, so zero and one come from a prototype.
pub trait RingElement: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl RingElement for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl RingElement for Polynomial {
    fn zero_like(&self) -> Self {
        Polynomial::zero(self.ring())
    }
    fn one_like(&self) -> Self {
        Polynomial::one(self.ring())
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

/// Coefficients of `det(λI - A)`, highest degree first, by Berkowitz's
/// algorithm. Uses only ring operations, so it works for matrices of
/// polynomials as well as rationals.
pub fn berkowitz<T: RingElement>(a: &[Vec<T>]) -> Vec<T> {
    let n = a.len();
    assert!(n > 0 && a.iter().all(|r| r.len() == n), "square non-empty matrix required");
    let zero = a[0][0].zero_like();
    let one = a[0][0].one_like();
    let mut vect = vec![one.clone(), a[0][0].neg_ref()];
    for r in 1..n {
        // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C
        let mut t = Vec::with_capacity(r + 2);
        t.push(one.clone());
        t.push(a[r][r].neg_ref());
        let mut col: Vec<T> = (0..r).map(|i| a[i][r].clone()).collect();
        for _ in 0..r {
            let rc = (0..r).fold(zero.clone(), |acc, j| acc.add_ref(&a[r][j].mul_ref(&col[j])));
            t.push(rc.neg_ref());
            col = (0..r)
                .map(|i| (0..r).fold(zero.clone(), |acc, j| acc.add_ref(&a[i][j].mul_ref(&col[j]))))
                .collect();
        }
        let mut next = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut acc = zero.clone();
            for j in 0..=i.min(r) {
                acc = acc.add_ref(&t[i - j].mul_ref(&vect[j]));
            }
            next.push(acc);
        }
        vect = next;
    }
    vect
}

/// Square or rectangular rational matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> QMatrix {
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + &self[(i, i)])
    }

    /// `trace(self * other)` without forming the product.
    pub fn trace_of_product(&self, other: &QMatrix) -> Rational {
        assert_eq!((self.cols, self.rows), (other.rows, other.cols));
        let mut acc = Rational::zero();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if !a.is_zero() {
                    acc += a * &other[(k, i)];
                }
            }
        }
        acc
    }

    pub fn pow(&self, e: usize) -> QMatrix {
        let mut acc = QMatrix::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn char_poly(&self) -> UniPoly {
        char_poly(self)
    }

    /// Evaluate a univariate polynomial at this matrix (Horner).
    pub fn eval_poly(&self, p: &UniPoly) -> QMatrix {
        let n = self.rows;
        let mut acc = QMatrix::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = &(&acc * self) + &QMatrix::identity(n).scale(c);
        }
        acc
    }

    /// Rank by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.to_rows();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let inv = m[rank][col].recip();
            for r in 0..self.rows {
                if r != rank && !m[r][col].is_zero() {
                    let f = &m[r][col] * &inv;
                    for c in col..self.cols {
                        let d = &f * &m[rank][c];
                        m[r][c] -= d;
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Solve `self * x = b` for square nonsingular `self`.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        let n = self.rows;
        assert_eq!(n, self.cols);
        assert_eq!(b.len(), n);
        let mut m: Vec<Vec<Rational>> =
            (0..n).map(|i| self.row(i).iter().cloned().chain(std::iter::once(b[i].clone())).collect()).collect();
        for col in 0..n {
            let p = (col..n).find(|&r| !m[r][col].is_zero())?;
            m.swap(col, p);
            let inv = m[col][col].recip();
            for c in col..=n {
                m[col][c] *= &inv;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..=n {
                        let d = &f * &m[col][c];
                        m[r][c] -= d;
                    }
                }
            }
        }
        Some(m.into_iter().map(|row| row[n].clone()).collect())
    }
}

pub fn char_poly(m: &QMatrix) -> UniPoly {
    assert_eq!(m.rows, m.cols, "char_poly needs a square matrix");
    if m.rows == 0 {
        return UniPoly::one();
    }
    let mut c = berkowitz(&m.to_rows());
    c.reverse();
    UniPoly::new(c)
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Neg for &QMatrix {
    type Output = QMatrix;
    fn neg(self) -> QMatrix {
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|c| c.to_string()).collect();
            writeln!(f, "  {}", cells.join(", "))?;
        }
        write!(f, "]")
    }
}
