//! Compact text form for polynomials.
//!
//! Terms print in descending canonical order with juxtaposed variables, so
//! `K_2`-style coefficients read the way they are written by hand:
//! `2p^2+4p+1`, `x0^2x1x2`, `p^-2`, `(1/2)x1`. The parser accepts the same
//! language plus
//! optional whitespace, explicit `*`, division by a monomial factor, and
//! parenthesized subexpressions with integer powers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::PolyError;
use crate::exponent::Var;
use crate::poly::{Coeff, MultiPoly};

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exps, coeff)) in self.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
            let neg = coeff.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let mag = coeff.abs();
            let vars: Vec<(Var, i32)> = exps.iter_nonzero().collect();
            if vars.is_empty() {
                write!(f, "{}", ratio_str(&mag))?;
            } else {
                if !mag.is_one() {
                    if mag.is_integer() {
                        write!(f, "{}", mag.numer())?;
                    } else {
                        write!(f, "({})", ratio_str(&mag))?;
                    }
                }
                for (var, e) in vars {
                    if e == 1 {
                        write!(f, "{}", var.name())?;
                    } else {
                        write!(f, "{}^{}", var.name(), e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn ratio_str(c: &Coeff) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Parses the text form back into a polynomial.
pub fn parse_poly(input: &str) -> Result<MultiPoly, PolyError> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(poly)
}

impl FromStr for MultiPoly {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse(format!("{} at byte {}", msg, self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    /// expr := ['-'] term (('+' | '-') term)*
    fn expr(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.bump();
                -&self.term()?
            }
            Some(b'+') => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                b'-' => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    /// term := factor (('*' | '/')? factor)*, juxtaposition multiplies and
    /// `/` divides by the next factor, which must reduce to a monomial.
    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.bump();
                    let divisor = self.factor()?;
                    acc = &acc * &divisor.pow_signed(-1)?;
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {
                    acc = &acc * &self.factor()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    /// factor := INT | VAR ('^' sint)? | '(' expr ')' ('^' sint)?
    fn factor(&mut self) -> Result<MultiPoly, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let inner = self.expr()?;
                if self.bump() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                match self.try_power()? {
                    Some(e) => inner.pow_signed(e),
                    None => Ok(inner),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(MultiPoly::constant(Coeff::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let var = self.variable()?;
                let e = self.try_power()?.unwrap_or(1);
                Ok(MultiPoly::var_pow(var, e))
            }
            _ => Err(self.err("expected a factor")),
        }
    }

    /// `'^' ['-'] INT`, if present.
    fn try_power(&mut self) -> Result<Option<i32>, PolyError> {
        if self.peek() != Some(b'^') {
            return Ok(None);
        }
        self.bump();
        let neg = if self.peek() == Some(b'-') {
            self.bump();
            true
        } else {
            false
        };
        let n = self.integer()?;
        let e: i32 = n
            .try_into()
            .map_err(|_| PolyError::ExponentOverflow)?;
        Ok(Some(if neg { -e } else { e }))
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse::<BigInt>().map_err(|_| self.err("bad integer"))
    }

    /// Maximal-munch variable name: `p`, `x0`..`x4`, or `X`.
    fn variable(&mut self) -> Result<Var, PolyError> {
        self.skip_ws();
        let c = self.src[self.pos];
        match c {
            b'p' => {
                self.pos += 1;
                Ok(Var::P)
            }
            b'X' => {
                self.pos += 1;
                Ok(Var::X)
            }
            b'x' => {
                let d = self.src.get(self.pos + 1).copied();
                match d {
                    Some(b'0') => {
                        self.pos += 2;
                        Ok(Var::X0)
                    }
                    Some(d @ b'1'..=b'4') => {
                        self.pos += 2;
                        Ok(Var::satake((d - b'0') as usize))
                    }
                    _ => Err(self.err("expected a digit 0..4 after 'x'")),
                }
            }
            _ => Err(self.err("unknown variable")),
        }
    }
}
