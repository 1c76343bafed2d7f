//! Recursive-descent parser for elements of `K` and of `K[t;δ]`.
//!
//! ```text
//! expr    := term (("+" | "-") term)*
//! term    := unary (("*" | "/")? unary)*      juxtaposition multiplies
//! unary   := "-" unary | power
//! power   := primary ("^" "-"? integer)?
//! primary := integer | "x" | "t" | "(" expr ")"
//! ```

use crate::diffpoly::{DiffPoly, DiffPolyRing};
use crate::error::{Error, Result};
use crate::scalars::RatFunc;
use crate::towers::DerivedField;

/// What `t` means while parsing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Elements of `K`; `t` is rejected.
    Field,
    /// Elements of `K[t;δ]`.
    Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Field(RatFunc),
    Poly(DiffPoly<RatFunc>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(String),
    X,
    T,
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        match c {
            c if c.is_whitespace() => {}
            '0'..='9' => {
                let mut j = i;
                while j < chars.len() && chars[j].1.is_ascii_digit() {
                    j += 1;
                }
                out.push((pos, Tok::Int(chars[i..j].iter().map(|(_, c)| c).collect())));
                i = j;
                continue;
            }
            'x' => out.push((pos, Tok::X)),
            't' => out.push((pos, Tok::T)),
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => out.push((pos, Tok::Op(c))),
            '−' => out.push((pos, Tok::Op('-'))),
            _ => {
                return Err(Error::SyntaxError {
                    pos,
                    msg: format!("unexpected character '{c}'"),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Val {
    K(RatFunc),
    R(DiffPoly<RatFunc>),
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    mode: Mode,
    k: &'a DerivedField,
    ring: DiffPolyRing<DerivedField>,
}

impl Parser<'_> {
    fn p(&self) -> u32 {
        self.k.modulus()
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::SyntaxError { pos: self.here(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn to_poly(&self, v: Val) -> DiffPoly<RatFunc> {
        match v {
            Val::K(a) => self.ring.constant(a),
            Val::R(h) => h,
        }
    }

    fn add(&self, a: Val, b: Val, negate: bool) -> Val {
        match (a, b) {
            (Val::K(a), Val::K(b)) => Val::K(if negate { &a - &b } else { &a + &b }),
            (a, b) => {
                let (a, b) = (self.to_poly(a), self.to_poly(b));
                Val::R(if negate { self.ring.sub(&a, &b) } else { self.ring.add(&a, &b) })
            }
        }
    }

    fn mul(&self, a: Val, b: Val) -> Val {
        match (a, b) {
            (Val::K(a), Val::K(b)) => Val::K(&a * &b),
            (a, b) => Val::R(self.ring.mul(&self.to_poly(a), &self.to_poly(b))),
        }
    }

    fn div(&self, a: Val, b: Val) -> Result<Val> {
        let b = match b {
            Val::K(b) => b,
            Val::R(h) => match h.degree() {
                None => return Err(Error::DivisionByZero),
                Some(0) => h.coeffs()[0].clone(),
                Some(_) => return Err(Error::TInDenominator),
            },
        };
        let inv = b.inv()?;
        Ok(self.mul(a, Val::K(inv)))
    }

    fn expr(&mut self) -> Result<Val> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let rhs = self.term()?;
                acc = self.add(acc, rhs, false);
            } else if self.eat('-') {
                let rhs = self.term()?;
                acc = self.add(acc, rhs, true);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_primary(&self) -> bool {
        matches!(self.peek(), Some(Tok::Int(_) | Tok::X | Tok::T | Tok::Op('(')))
    }

    fn term(&mut self) -> Result<Val> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') || self.starts_primary() {
                let rhs = self.unary()?;
                acc = self.mul(acc, rhs);
            } else if self.eat('/') {
                let rhs = self.unary()?;
                acc = self.div(acc, rhs)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Val> {
        if self.eat('-') {
            let v = self.unary()?;
            return Ok(match v {
                Val::K(a) => Val::K(-&a),
                Val::R(h) => Val::R(self.ring.neg(&h)),
            });
        }
        self.power()
    }

    fn exponent(&mut self) -> Result<i64> {
        let negative = self.eat('-');
        match self.peek().cloned() {
            Some(Tok::Int(digits)) => {
                let n: i64 = match digits.parse() {
                    Ok(n) if n <= 1 << 20 => n,
                    _ => return self.err("exponent too large"),
                };
                self.pos += 1;
                Ok(if negative { -n } else { n })
            }
            _ => self.err("expected an integer exponent"),
        }
    }

    fn power(&mut self) -> Result<Val> {
        let base = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let n = self.exponent()?;
        match base {
            Val::K(a) => Ok(Val::K(a.pow(n)?)),
            Val::R(h) if n >= 0 => Ok(Val::R(self.ring.pow(&h, n as usize))),
            Val::R(_) => Err(Error::TInDenominator),
        }
    }

    fn primary(&mut self) -> Result<Val> {
        match self.peek().cloned() {
            Some(Tok::Int(digits)) => {
                self.pos += 1;
                let p = self.p() as u64;
                let r = digits.bytes().fold(0u64, |acc, b| (acc * 10 + (b - b'0') as u64) % p);
                Ok(Val::K(RatFunc::constant(self.p(), r as i64)))
            }
            Some(Tok::X) => {
                self.pos += 1;
                Ok(Val::K(RatFunc::x(self.p())))
            }
            Some(Tok::T) => {
                if self.mode == Mode::Field {
                    return self.err("t is not allowed in a field element");
                }
                self.pos += 1;
                Ok(Val::R(self.ring.t()))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(v)
            }
            Some(_) => self.err("expected a number, x, t or '('"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `s` over `k`'s prime field, in the given mode.
pub fn parse_expr(s: &str, mode: Mode, k: &DerivedField) -> Result<Parsed> {
    let toks = tokenize(s)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        end: s.len(),
        mode,
        k,
        ring: DiffPolyRing::new(k.clone()),
    };
    if parser.peek().is_none() {
        return parser.err("empty expression");
    }
    let v = parser.expr()?;
    if parser.peek().is_some() {
        return parser.err("unexpected trailing input");
    }
    Ok(match (mode, v) {
        (Mode::Field, Val::K(a)) => Parsed::Field(a),
        (Mode::Field, Val::R(_)) => unreachable!("t is rejected in field mode"),
        (Mode::Poly, v) => Parsed::Poly(parser.to_poly(v)),
    })
}

/// An element of `F_p(x)`. The derivation plays no role, so only `p` is needed.
pub fn parse_field(s: &str, p: u32) -> Result<RatFunc> {
    // Any nonzero derivation will do for field-mode parsing.
    let k = DerivedField::standard(p);
    match parse_expr(s, Mode::Field, &k)? {
        Parsed::Field(a) => Ok(a),
        Parsed::Poly(_) => unreachable!(),
    }
}

/// An element of `K[t;δ]`.
pub fn parse_poly(s: &str, k: &DerivedField) -> Result<DiffPoly<RatFunc>> {
    match parse_expr(s, Mode::Poly, k)? {
        Parsed::Poly(h) => Ok(h),
        Parsed::Field(_) => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::Sampler;
    use crate::scalars::DensePoly;

    fn poly_of(p: u32, coeffs: &[i64]) -> RatFunc {
        RatFunc::from_poly(DensePoly::from_coeffs(p, coeffs))
    }

    fn k2() -> DerivedField {
        DerivedField::euler(2)
    }

    #[test]
    fn field_examples() {
        let a = parse_field("x^2/(x+1)", 2).unwrap();
        assert_eq!(a, RatFunc::new(DensePoly::from_coeffs(2, &[0, 0, 1]), DensePoly::from_coeffs(2, &[1, 1])).unwrap());
        assert_eq!(parse_field("1/(x - x)", 2), Err(Error::DivisionByZero));
        assert_eq!(parse_field("x^-2", 3).unwrap(), poly_of(3, &[0, 0, 1]).inv().unwrap());
        assert_eq!(parse_field("7", 5).unwrap(), RatFunc::constant(5, 2));
        assert_eq!(parse_field("2x(x+1)", 3).unwrap(), poly_of(3, &[0, 2, 2]));
        assert_eq!(parse_field("-x", 3).unwrap(), poly_of(3, &[0, 2]));
        assert_eq!(parse_field("123456789012345678901234567891", 7).unwrap(), RatFunc::constant(7, 1));
    }

    #[test]
    fn poly_examples() {
        let k = k2();
        let r = DiffPolyRing::new(k.clone());
        let f = parse_poly("t^2 - t - x", &k).unwrap();
        let one = RatFunc::one(2);
        assert_eq!(f, r.from_coeffs(vec![RatFunc::x(2), one.clone(), one.clone()]));
        // t·x = x·t + δ(x) with δ(x) = x
        assert_eq!(parse_poly("t*x", &k).unwrap(), r.from_coeffs(vec![RatFunc::x(2), RatFunc::x(2)]));
        assert_eq!(parse_poly("t/x", &k).unwrap(), r.mul(&r.t(), &r.constant(RatFunc::x(2).inv().unwrap())));
    }

    #[test]
    fn errors() {
        let k = k2();
        assert_eq!(parse_poly("1/t", &k), Err(Error::TInDenominator));
        assert_eq!(parse_poly("x/(t+1)", &k), Err(Error::TInDenominator));
        assert_eq!(parse_poly("t^-1", &k), Err(Error::TInDenominator));
        assert!(matches!(parse_field("t", 2), Err(Error::SyntaxError { pos: 0, .. })));
        assert!(matches!(parse_field("x +", 2), Err(Error::SyntaxError { pos: 3, .. })));
        assert!(matches!(parse_field("(x", 2), Err(Error::SyntaxError { pos: 2, .. })));
        assert!(matches!(parse_field("x $ 1", 2), Err(Error::SyntaxError { pos: 2, .. })));
        assert!(matches!(parse_field("x)", 2), Err(Error::SyntaxError { pos: 1, .. })));
        assert!(matches!(parse_field("", 2), Err(Error::SyntaxError { .. })));
        assert!(matches!(parse_field("x^y", 2), Err(Error::SyntaxError { .. })));
    }

    #[test]
    fn printing_round_trips() {
        for (p, k) in [(2, DerivedField::euler(2)), (3, DerivedField::euler(3)), (5, DerivedField::standard(5))] {
            let r = DiffPolyRing::new(k.clone());
            let mut s = Sampler::new(p, 17);
            for _ in 0..200 {
                let a = s.ratfunc(3);
                assert_eq!(parse_field(&a.to_string(), p).unwrap(), a);
                let h = r.from_coeffs((0..3).map(|_| s.ratfunc(2)).collect());
                assert_eq!(parse_poly(&h.to_string(), &k).unwrap(), h, "{h}");
            }
        }
    }
}
