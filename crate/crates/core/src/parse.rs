//! Text form of polynomials.
//!
//! Accepted syntax: integers, `a/b` rationals (division by a nonzero
//! constant in general), variable names, `*` or juxtaposed products, `^`
//! powers, `+`, `-` and parentheses. A single-letter variable may carry its
//! exponent as trailing digits, so `-2x4-2x2y2+5x2y` reads as
//! `-2*x^4 - 2*x^2*y^2 + 5*x^2*y`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::PolyError;
use crate::order::TermOrder;
use crate::poly::{Monomial, PolyRing, Polynomial, Rational};

pub fn parse_poly(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial, PolyError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, ring };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty expression"));
    }
    let out = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error(&format!("unexpected {:?}", p.peek().unwrap() as char)));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

impl<'a> Parser<'a> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, msg: &str) -> PolyError {
        PolyError::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        self.skip_ws();
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.factor()?;
                    if !d.is_constant() {
                        return Err(PolyError::Syntax { pos: at, msg: "can only divide by a constant".into() });
                    }
                    let c = d.coeff(&Monomial::one(self.ring.nvars()));
                    if c.is_zero() {
                        return Err(PolyError::Syntax { pos: at, msg: "division by zero".into() });
                    }
                    acc = acc.scale(&c.recip());
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'_' || c == b'(' => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, PolyError> {
        self.skip_ws();
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                return Ok(-&self.factor()?);
            }
            Some(b'+') => {
                self.pos += 1;
                return self.factor();
            }
            _ => {}
        }
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.exponent()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<u32, PolyError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a non-negative integer exponent"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<u32>()
            .map_err(|_| PolyError::Syntax { pos: start, msg: "exponent too large".into() })
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n: BigInt = digits.parse().unwrap();
                Ok(Polynomial::constant(self.ring, Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.variable(),
            Some(c) => Err(self.error(&format!("unexpected {:?}", c as char))),
        }
    }

    /// Longest ring variable name at the cursor, then an optional digit
    /// exponent for single-letter names.
    fn variable(&mut self) -> Result<Polynomial, PolyError> {
        let start = self.pos;
        let rest = &self.src[start..];
        let best = self
            .ring
            .variables()
            .iter()
            .enumerate()
            .filter(|(_, name)| rest.starts_with(name.as_bytes()))
            .max_by_key(|(_, name)| name.len());
        let Some((idx, name)) = best else {
            let end = rest
                .iter()
                .position(|c| !(c.is_ascii_alphanumeric() || *c == b'_'))
                .unwrap_or(rest.len());
            return Err(PolyError::UnknownVariable {
                name: String::from_utf8_lossy(&rest[..end]).into_owned(),
                pos: start,
            });
        };
        self.pos += name.len();
        let mut e = 1;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            if name.len() != 1 {
                return Err(self.error(&format!(
                    "digits after multi-letter variable {:?}; write {}^k",
                    name, name
                )));
            }
            e = self.exponent()?;
        }
        Ok(Polynomial::var(self.ring, idx).pow(e))
    }
}

fn format_coeff(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Render with terms in decreasing order. The output parses back to the
/// same polynomial.
pub fn print_poly(f: &Polynomial, order: &TermOrder) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let names = f.ring().variables();
    let mut out = String::new();
    for (i, (m, c)) in order.sorted_terms(f).into_iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&format_coeff(&a));
        } else if a.is_one() {
            out.push_str(&m.display(names));
        } else {
            out.push_str(&format_coeff(&a));
            out.push('*');
            out.push_str(&m.display(names));
        }
    }
    out
}
