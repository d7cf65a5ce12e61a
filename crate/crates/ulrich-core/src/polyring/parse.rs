//! Parser for the rendering grammar: sums of products of rationals, `i`,
//! variables with `^` powers, and parenthesised subexpressions. Factors may
//! be joined by `*` or written side by side (`2xy^2`). Both `-` and `−`
//! are accepted as minus.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::monomial::Monomial;
use super::poly::{Polynomial, RingRef};
use super::scalar::Scalar;
use crate::error::{Error, Result};

pub fn parse_poly(ring: &RingRef, src: &str) -> Result<Polynomial> {
    let mut p = Parser { ring, chars: src.char_indices().collect(), pos: 0, len: src.len() };
    let out = p.sum()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

/// Comma-separated list, e.g. `x, y, z, t^2`. Commas inside parentheses do
/// not split.
pub fn parse_poly_list(ring: &RingRef, src: &str) -> Result<Vec<Polynomial>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in src.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&src[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&src[start..]);
    parts.into_iter().filter(|s| !s.trim().is_empty()).map(|s| parse_poly(ring, s)).collect()
}

struct Parser<'a> {
    ring: &'a RingRef,
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        let at = self.chars.get(self.pos).map(|c| c.0).unwrap_or(self.len);
        Error::Parse { pos: at, msg: msg.to_string() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn sum(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let mut acc = Polynomial::zero(self.ring);
        let mut sign = match self.peek() {
            Some('+') => {
                self.pos += 1;
                1
            }
            Some('-') | Some('−') => {
                self.pos += 1;
                -1
            }
            _ => 1,
        };
        loop {
            let t = self.product()?;
            acc = if sign > 0 { acc.add(&t)? } else { acc.sub(&t)? };
            self.skip_ws();
            sign = match self.peek() {
                Some('+') => 1,
                Some('-') | Some('−') => -1,
                _ => return Ok(acc),
            };
            self.pos += 1;
        }
    }

    fn product(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') | Some('·') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.mul(&f)?;
                }
                Some(c) if c.is_ascii_alphanumeric() || c == '(' => {
                    let f = self.factor()?;
                    acc = acc.mul(&f)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let braced = self.peek() == Some('{');
        if braced {
            self.pos += 1;
        }
        let n = self.integer()?;
        if braced {
            if self.peek() != Some('}') {
                return Err(self.err("expected '}'"));
            }
            self.pos += 1;
        }
        u32::try_from(&n).map_err(|_| self.err("exponent out of range"))
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        Ok(s.parse().expect("digits"))
    }

    fn factor(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let base = match self.peek() {
            None => return Err(self.err("unexpected end of input")),
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                inner
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut val = BigRational::from_integer(num);
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    val /= BigRational::from_integer(den);
                }
                Polynomial::constant(self.ring, Scalar::new(val, BigRational::zero()))
            }
            Some(c) if c.is_alphabetic() || c == '_' => self.atom()?,
            Some(_) => return Err(self.err("unexpected character")),
        };
        let e = self.exponent()?;
        Ok(if e == 1 { base } else { base.pow(e) })
    }

    /// Longest variable name matching at the cursor, else the unit `i`.
    fn atom(&mut self) -> Result<Polynomial> {
        let rest: String = self.chars[self.pos..].iter().map(|c| c.1).collect();
        let best = self
            .ring
            .vars()
            .iter()
            .enumerate()
            .filter(|(_, v)| rest.starts_with(v.as_str()))
            .max_by_key(|(_, v)| v.len());
        if let Some((idx, v)) = best {
            self.pos += v.chars().count();
            return Ok(Polynomial::monomial(self.ring, Monomial::var(idx, 1)));
        }
        if rest.starts_with('i') {
            self.pos += 1;
            return Ok(Polynomial::constant(self.ring, Scalar::i()));
        }
        Err(self.err("unknown variable"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Ring;

    #[test]
    fn parses_rendered_forms() {
        let r = Ring::grevlex(&["x", "y", "z", "t"]);
        let p = parse_poly(&r, "x*y − t^5").unwrap();
        assert_eq!(p.to_string(), "−t^5 + x*y");
        let q = parse_poly(&r, "xy - t^{5}").unwrap();
        assert_eq!(p, q);
        let g = parse_poly(&r, "(1+2i)*x + 3/2").unwrap();
        assert_eq!(g.to_string(), "(1+2i)*x + 3/2");
        assert_eq!(parse_poly(&r, "(x+y)^2").unwrap().to_string(), "x^2 + 2*x*y + y^2");
    }

    #[test]
    fn errors_carry_position() {
        let r = Ring::grevlex(&["x", "y"]);
        match parse_poly(&r, "x + w") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_poly(&r, "x +").is_err());
        assert!(parse_poly(&r, "1/0").is_err());
    }

    #[test]
    fn list_split_respects_parentheses() {
        let r = Ring::grevlex(&["x", "y", "z"]);
        let l = parse_poly_list(&r, "x + i*y^2, (x, y)").err();
        assert!(l.is_some());
        let l = parse_poly_list(&r, "x + i*y^2, y^3, z").unwrap();
        assert_eq!(l.len(), 3);
    }
}
