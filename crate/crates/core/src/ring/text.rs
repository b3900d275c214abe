//! Text syntax for polynomials: integer or `a/b` coefficients, declared
//! variable names, `+ - * ^` and parentheses. Multiplication is always
//! explicit, so `2x` is rejected.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

use super::poly::{Polynomial, Ring};

impl Ring {
    /// Parses a polynomial in this ring.
    pub fn parse(&self, src: &str) -> Result<Polynomial> {
        parse_polynomial_span(self, src, 0, src.len())
    }
}

/// Parses `full[start..end]`, reporting error positions relative to `full`.
pub fn parse_polynomial_span(ring: &Ring, full: &str, start: usize, end: usize) -> Result<Polynomial> {
    let mut p = Parser {
        ring,
        full,
        pos: start,
        end,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.end {
        return Err(p.error(p.pos, "unexpected input (multiplication must be written with `*`)"));
    }
    Ok(v)
}

/// 1-based line and column of a byte offset.
pub fn line_column(full: &str, offset: usize) -> (usize, usize) {
    let before = &full[..offset.min(full.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, col)
}

struct Parser<'a> {
    ring: &'a Ring,
    full: &'a str,
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, at: usize, message: impl Into<String>) -> Error {
        let (line, column) = line_column(self.full, at);
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.full[self.pos..self.end].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let at = self.pos;
            let digits = self.digits();
            let e: u32 = digits
                .parse()
                .map_err(|_| self.error(at, "expected a non-negative integer exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.full[start..self.pos]
    }

    fn atom(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let at = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error(self.pos, "expected `)`"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().expect("digits");
                let mut value = BigRational::from_integer(num);
                let save = self.pos;
                if self.eat('/') {
                    self.skip_ws();
                    let dat = self.pos;
                    let den = self.digits();
                    if den.is_empty() {
                        // only literal fractions are allowed
                        self.pos = save;
                        return Err(self.error(dat, "expected integer denominator"));
                    }
                    let den: BigInt = den.parse().expect("digits");
                    if den.is_zero() {
                        return Err(self.error(dat, "zero denominator"));
                    }
                    value /= BigRational::from_integer(den);
                }
                let c = self
                    .ring
                    .field()
                    .from_rational(&value)
                    .map_err(|e| self.error(at, e.to_string()))?;
                Ok(self.ring.constant(c))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
                    self.pos += self.peek().map_or(1, char::len_utf8);
                }
                let name = &self.full[at..self.pos];
                match self.ring.var_index(name) {
                    Some(i) => Ok(self.ring.var(i).expect("declared variable")),
                    None => Err(self.error(at, format!("unknown variable `{name}`"))),
                }
            }
            Some(c) => Err(self.error(at, format!("unexpected character `{c}`"))),
            None => Err(self.error(at, "unexpected end of expression")),
        }
    }
}
