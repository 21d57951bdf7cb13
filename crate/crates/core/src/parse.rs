//! Text syntax for monomials, monomial ideals and polynomials.
//!
//! A monomial is a product of variables with optional `^e` exponents and
//! optional `*` separators (`x^3*y`, `x^3y`, `xy^2`), or `1`. A polynomial is
//! a signed sum of terms, each an optional integer or fraction coefficient
//! followed by a monomial (`x^2 + y^2`, `3x*y - 1/2 y^4`). Lists are
//! comma-separated and may be wrapped in parentheses.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Writes `vars` as a monomial, omitting zero exponents and `^1`.
pub(crate) fn write_monomial(f: &mut fmt::Formatter<'_>, vars: &[(char, u32)]) -> fmt::Result {
    let mut any = false;
    for &(v, e) in vars {
        match e {
            0 => continue,
            1 => write!(f, "{v}")?,
            _ => write!(f, "{v}^{e}")?,
        }
        any = true;
    }
    if !any {
        f.write_str("1")?;
    }
    Ok(())
}

/// One parsed term: rational coefficient and exponent vector.
pub type Term = (BigRational, Vec<u32>);

struct Cursor<'a> {
    input: &'a str,
    bytes: &'a [u8],
    pos: usize,
    vars: &'a [char],
}

impl<'a> Cursor<'a> {
    fn new(input: &'a str, vars: &'a [char]) -> Self {
        Cursor {
            input,
            bytes: input.as_bytes(),
            pos: 0,
            vars,
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::parse(self.input, self.pos, message)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.input[start..self.pos])
    }

    fn exponent(&mut self) -> Result<u32> {
        let braced = self.eat(b'{');
        let at = self.pos;
        let text = self
            .digits()
            .ok_or_else(|| self.err("expected an exponent"))?;
        let e = text
            .parse::<u32>()
            .map_err(|_| Error::parse(self.input, at, "exponent out of range"))?;
        if braced && !self.eat(b'}') {
            return Err(self.err("expected '}'"));
        }
        Ok(e)
    }

    fn var_index(&mut self) -> Option<usize> {
        let c = self.peek()? as char;
        let idx = self.vars.iter().position(|&v| v == c)?;
        self.pos += 1;
        Some(idx)
    }

    fn coefficient(&mut self) -> Result<Option<BigRational>> {
        let at = self.pos;
        let Some(num) = self.digits() else {
            return Ok(None);
        };
        let num: BigInt = num
            .parse()
            .map_err(|_| Error::parse(self.input, at, "bad integer"))?;
        if self.eat(b'/') {
            let den_at = self.pos;
            let den: BigInt = self
                .digits()
                .ok_or_else(|| self.err("expected a denominator"))?
                .parse()
                .map_err(|_| Error::parse(self.input, den_at, "bad integer"))?;
            if den.is_zero() {
                return Err(Error::parse(self.input, den_at, "zero denominator"));
            }
            return Ok(Some(BigRational::new(num, den)));
        }
        Ok(Some(BigRational::from_integer(num)))
    }

    /// A term without its sign.
    fn term(&mut self) -> Result<Term> {
        let mut exps = vec![0u32; self.vars.len()];
        let coeff = self.coefficient()?;
        let mut saw_var = false;
        loop {
            let before = self.pos;
            let star = self.eat(b'*');
            if star && coeff.is_none() && !saw_var {
                return Err(self.err("unexpected '*'"));
            }
            if star && self.peek().is_some_and(|c| c.is_ascii_digit()) {
                return Err(self.err("expected a variable after '*'"));
            }
            match self.var_index() {
                Some(idx) => {
                    let e = if self.eat(b'^') { self.exponent()? } else { 1 };
                    exps[idx] = exps[idx]
                        .checked_add(e)
                        .ok_or_else(|| self.err("exponent out of range"))?;
                    saw_var = true;
                }
                None => {
                    if star {
                        return Err(self.err("expected a variable after '*'"));
                    }
                    self.pos = before;
                    break;
                }
            }
        }
        if coeff.is_none() && !saw_var {
            let msg = match self.peek() {
                Some(c) => format!("unexpected token {:?}", c as char),
                None => "unexpected end of input".to_string(),
            };
            return Err(self.err(msg));
        }
        Ok((coeff.unwrap_or_else(BigRational::one), exps))
    }

    fn polynomial(&mut self) -> Result<Vec<Term>> {
        let mut terms = Vec::new();
        let mut sign = if self.eat(b'-') {
            -1
        } else {
            self.eat(b'+');
            1
        };
        loop {
            let (c, e) = self.term()?;
            terms.push((if sign < 0 { -c } else { c }, e));
            sign = if self.eat(b'+') {
                1
            } else if self.eat(b'-') {
                -1
            } else {
                break;
            };
        }
        Ok(terms)
    }

    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        let paren = self.eat(b'(');
        let mut out = Vec::new();
        let empty = if paren {
            self.peek() == Some(b')')
        } else {
            self.at_end()
        };
        if !empty {
            loop {
                out.push(item(self)?);
                if !self.eat(b',') {
                    break;
                }
            }
        }
        if paren && !self.eat(b')') {
            return Err(self.err("expected ')'"));
        }
        if !self.at_end() {
            let c = self.peek().unwrap_or(b'?') as char;
            return Err(self.err(format!("unexpected token {c:?}")));
        }
        Ok(out)
    }
}

fn monomial_from_term(cur: &Cursor<'_>, start: usize, (c, e): Term) -> Result<Vec<u32>> {
    if !c.is_one() {
        return Err(Error::parse(
            cur.input,
            start,
            "monomials take no coefficient",
        ));
    }
    Ok(e)
}

/// Parses a single monomial in the variables `vars`.
pub fn parse_monomial(input: &str, vars: &[char]) -> Result<Vec<u32>> {
    let mut cur = Cursor::new(input, vars);
    let start = cur.pos;
    let term = cur.term()?;
    if !cur.at_end() {
        return Err(cur.err("trailing input"));
    }
    monomial_from_term(&cur, start, term)
}

/// Parses a comma-separated list of monomials.
pub fn parse_monomial_list(input: &str, vars: &[char]) -> Result<Vec<Vec<u32>>> {
    let mut cur = Cursor::new(input, vars);
    cur.list(|c| {
        c.skip_ws();
        let start = c.pos;
        let term = c.term()?;
        monomial_from_term(c, start, term)
    })
}

/// Parses a comma-separated list of polynomials in `x` and `y`.
pub fn parse_polynomial_list(input: &str) -> Result<Vec<Vec<Term>>> {
    let vars = ['x', 'y'];
    let mut cur = Cursor::new(input, &vars);
    cur.list(|c| c.polynomial())
}

/// Parses a comma-separated list of nonnegative integers such as `1,2,3,2,1`.
pub fn parse_sequence(input: &str) -> Result<Vec<u32>> {
    let mut cur = Cursor::new(input, &[]);
    cur.list(|c| {
        let at = c.pos;
        c.digits()
            .ok_or_else(|| c.err("expected a nonnegative integer"))?
            .parse()
            .map_err(|_| Error::parse(input, at, "integer out of range"))
    })
}
