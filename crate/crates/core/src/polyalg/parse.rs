//! Text grammar for polynomials and ideals.
//!
//! ```text
//! poly   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ('^' integer)?
//! atom   := integer ('/' integer)? | name | '(' poly ')'
//! ```
//!
//! Ideals are generator lists separated by `;` or newlines; `#` starts a
//! comment that runs to the end of the line.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::ideal::Ideal;
use super::poly::{Coeff, Poly};
use super::Ring;
use crate::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    offset: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.offset + self.pos, msg: String::from(msg) })
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let text = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse::<BigInt>().unwrap())
    }

    fn poly(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        if self.eat(b'-') {
            return Ok(-&self.factor()?);
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let k = self.integer()?;
            let k: u32 = match u32::try_from(k) {
                Ok(k) if k <= super::limits().max_degree => k,
                _ => return self.err("exponent too large"),
            };
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        let n = self.ring.nvars();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let p = self.poly()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let den = if self.eat(b'/') { self.integer()? } else { BigInt::from(1) };
                if den.is_zero() {
                    return self.err("zero denominator");
                }
                Ok(Poly::constant(n, Coeff::new(num, den)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let i = self.ring.index(name)?;
                Ok(Poly::var(n, i))
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

fn parse_at(text: &str, offset: usize, ring: &Ring) -> Result<Poly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, offset, ring };
    let out = p.poly()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Parses one polynomial over `ring`.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<Poly> {
    parse_at(text, 0, ring)
}

/// Parses a generator list; an empty list is the zero ideal.
pub fn parse_ideal(text: &str, ring: &Ring) -> Result<Ideal> {
    let mut gens = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let body = line.split('#').next().unwrap_or("");
        let mut inner = 0;
        for piece in body.split(';') {
            if !piece.trim().is_empty() {
                gens.push(parse_at(piece, offset + inner, ring)?);
            }
            inner += piece.len() + 1;
        }
        offset += line.len();
    }
    Ideal::new(ring.clone(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let r = Ring::parse("x,y,z").unwrap();
        let cases = [
            ("x^2 - y^2", "x^2 - y^2"),
            ("-(x+y)*(x-y)", "-x^2 + y^2"),
            ("1/2*x + 3/4", "1/2*x + 3/4"),
            ("2*x*y^2*z - 7", "2*x*y^2*z - 7"),
            ("--x", "x"),
            ("0*x", "0"),
        ];
        for (src, want) in cases {
            let p = parse_poly(src, &r).unwrap();
            assert_eq!(r.show(&p), want);
            assert_eq!(parse_poly(&r.show(&p), &r).unwrap(), p);
        }
    }

    #[test]
    fn ideals_and_errors() {
        let r = Ring::parse("x,y").unwrap();
        let i = parse_ideal("x*y; x^2 # comment; y\n\ny - 1\n", &r).unwrap();
        assert_eq!(i.gens().len(), 3);
        assert!(parse_ideal("", &r).unwrap().is_zero());
        assert!(matches!(parse_poly("x + w", &r), Err(Error::UnknownVariable(_))));
        assert!(matches!(parse_poly("x +", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("(x", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x/0", &r), Err(Error::Parse { .. })));
        match parse_ideal("x\ny $", &r) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{:?}", other),
        }
        assert!(matches!(Ring::parse("x,x"), Err(Error::DuplicateVariable(_))));
    }
}
