//! Recursive-descent parser for the textual polynomial syntax shared by
//! scalars, forms, and curve fixtures.
//!
//! Recognised symbols: `e` (the configured root of unity), `x`, `y`, `z`
//! (plane coordinates) and `a`, `b`, `c` (coordinates of a general point).
//! Rational literals are written `p` or `p/q`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub const VAR_E: usize = 0;
pub const VAR_X: usize = 1;
pub const NVARS: usize = 7;
const NAMES: [char; NVARS] = ['e', 'x', 'y', 'z', 'a', 'b', 'c'];

pub type Monomial = [u32; NVARS];
pub type RawPoly = BTreeMap<Monomial, BigRational>;

pub fn parse_polynomial(text: &str) -> Result<RawPoly> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0 };
    let out = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!(
            "unexpected trailing input in `{text}`"
        )));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Tok::Num(s.parse().expect("digits")));
        } else if let Some(v) = NAMES.iter().position(|&n| n == ch) {
            out.push(Tok::Var(v));
            i += 1;
        } else if "+-*/^()".contains(ch) {
            out.push(Tok::Op(ch));
            i += 1;
        } else {
            return Err(Error::Parse(format!(
                "unexpected character `{ch}` in `{text}`"
            )));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn eat_op(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RawPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat_op('+') {
                let t = self.term()?;
                add_into(&mut acc, &t, false);
            } else if self.eat_op('-') {
                let t = self.term()?;
                add_into(&mut acc, &t, true);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RawPoly> {
        let mut acc = self.unary()?;
        while self.eat_op('*') {
            let rhs = self.unary()?;
            acc = mul(&acc, &rhs);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RawPoly> {
        if self.eat_op('-') {
            let mut inner = self.unary()?;
            for c in inner.values_mut() {
                *c = -c.clone();
            }
            Ok(inner)
        } else if self.eat_op('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<RawPoly> {
        let base = self.atom()?;
        if self.eat_op('^') {
            match self.tokens.get(self.pos).cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    let mut acc = constant(BigRational::one());
                    for _ in 0..e {
                        acc = mul(&acc, &base);
                    }
                    Ok(acc)
                }
                _ => Err(Error::Parse("expected integer exponent after `^`".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<RawPoly> {
        match self.tokens.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                if self.eat_op('/') {
                    match self.tokens.get(self.pos).cloned() {
                        Some(Tok::Num(d)) if !d.is_zero() => {
                            self.pos += 1;
                            Ok(constant(BigRational::new(n, d)))
                        }
                        _ => Err(Error::Parse(
                            "`/` must be followed by a nonzero integer".into(),
                        )),
                    }
                } else {
                    Ok(constant(BigRational::from_integer(n)))
                }
            }
            Some(Tok::Var(v)) => {
                self.pos += 1;
                let mut m = [0u32; NVARS];
                m[v] = 1;
                let mut p = RawPoly::new();
                p.insert(m, BigRational::one());
                Ok(p)
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat_op(')') {
                    return Err(Error::Parse("missing `)`".into()));
                }
                Ok(inner)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn constant(c: BigRational) -> RawPoly {
    let mut p = RawPoly::new();
    if !c.is_zero() {
        p.insert([0; NVARS], c);
    }
    p
}

fn add_into(acc: &mut RawPoly, rhs: &RawPoly, negate: bool) {
    for (m, c) in rhs {
        let entry = acc.entry(*m).or_insert_with(BigRational::zero);
        if negate {
            *entry -= c;
        } else {
            *entry += c;
        }
        if entry.is_zero() {
            acc.remove(m);
        }
    }
}

fn mul(a: &RawPoly, b: &RawPoly) -> RawPoly {
    let mut out = RawPoly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let mut m = *ma;
            for (x, y) in m.iter_mut().zip(mb) {
                *x += y;
            }
            let entry = out.entry(m).or_insert_with(BigRational::zero);
            *entry += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: [u32; NVARS]) -> Monomial {
        e
    }

    #[test]
    fn parses_sums_products_and_powers() {
        let p = parse_polynomial("49*x^3*y - 49*x*y^3 + 168*x^2*y*z").unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(
            p[&mono([0, 3, 1, 0, 0, 0, 0])],
            BigRational::from_integer(49.into())
        );
        let q = parse_polynomial("(5*b^4*c+3*c^5)*x^6*y").unwrap();
        assert_eq!(q.len(), 2);
        let r = parse_polynomial("-3/2*e + (x - x)").unwrap();
        assert_eq!(r.len(), 1);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_polynomial("x +* y").is_err());
        assert!(parse_polynomial("q").is_err());
        assert!(parse_polynomial("(x").is_err());
        assert!(parse_polynomial("1/0").is_err());
    }
}
