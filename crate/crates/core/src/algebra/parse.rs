//! Text grammar for polynomials and ideal expressions.
//!
//! Polynomials use `+ - * ^`, parentheses, rational constants such as `3/2`
//! and variable names or aliases of the ring. Ideal expressions combine
//! parenthesised generator lists with sums, products (explicit `*` or
//! juxtaposition) and powers, e.g. `(a0,a1)^2 + (b2,b3)(b0,b1) + (b1^3)`.
//! A plain comma-separated list of polynomials is also accepted.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{CoxRing, Polynomial, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' | ';' => Tok::Comma,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(src[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_string())));
                continue;
            }
            _ => return Err(Error::Parse { offset: i, message: format!("unexpected character `{c}`") }),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a CoxRing,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

impl<'a> Parser<'a> {
    fn new(ring: &'a CoxRing, src: &str) -> Result<Self> {
        Ok(Parser { ring, toks: lex(src)?, pos: 0, len: src.len() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.len)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { offset: self.offset(), message: msg.to_string() })
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok, what: &str) -> Result<()> {
        if self.eat(t) {
            Ok(())
        } else {
            self.err(&format!("expected {what}"))
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        match self.peek() {
            Some(Tok::Num(n)) => {
                let n = n.clone();
                self.pos += 1;
                u32::try_from(n).or_else(|_| self.err("exponent too large"))
            }
            _ => self.err("expected a nonnegative integer exponent"),
        }
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring.nvars());
        let mut neg = self.eat(&Tok::Minus);
        if !neg {
            self.eat(&Tok::Plus);
        }
        loop {
            let t = self.product()?;
            acc = if neg { &acc - &t } else { &acc + &t };
            if self.eat(&Tok::Plus) {
                neg = false;
            } else if self.eat(&Tok::Minus) {
                neg = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        while self.eat(&Tok::Star) {
            let rhs = self.power()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat(&Tok::Caret) {
            let k = self.exponent()?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let nv = self.ring.nvars();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut q = Rational::from_integer(n);
                if self.eat(&Tok::Slash) {
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) if !d.is_zero() => {
                            self.pos += 1;
                            q /= Rational::from_integer(d);
                        }
                        _ => return self.err("expected a nonzero denominator"),
                    }
                }
                Ok(Polynomial::constant(nv, q))
            }
            Some(Tok::Ident(name)) => {
                let v = self.ring.var_index(&name).map_err(|_| Error::Parse {
                    offset: self.offset(),
                    message: format!("unknown variable `{name}`"),
                })?;
                self.pos += 1;
                Ok(Polynomial::var(nv, v))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let p = self.poly()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(p)
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-&self.atom()?)
            }
            _ => self.err("expected a number, variable or `(`"),
        }
    }

    fn ideal_sum(&mut self) -> Result<Vec<Polynomial>> {
        let mut gens = self.ideal_product()?;
        while self.eat(&Tok::Plus) {
            gens.extend(self.ideal_product()?);
        }
        Ok(gens)
    }

    fn ideal_product(&mut self) -> Result<Vec<Polynomial>> {
        let mut acc = self.ideal_power()?;
        loop {
            if self.eat(&Tok::Star) || self.peek() == Some(&Tok::LParen) {
                let rhs = self.ideal_power()?;
                acc = ideal_mul(&acc, &rhs);
            } else {
                return Ok(acc);
            }
        }
    }

    fn ideal_power(&mut self) -> Result<Vec<Polynomial>> {
        self.expect(&Tok::LParen, "`(` opening a generator list")?;
        let mut gens = vec![self.poly()?];
        while self.eat(&Tok::Comma) {
            gens.push(self.poly()?);
        }
        self.expect(&Tok::RParen, "`)`")?;
        if self.eat(&Tok::Caret) {
            let k = self.exponent()?;
            let mut acc = vec![Polynomial::one(self.ring.nvars())];
            for _ in 0..k {
                acc = ideal_mul(&acc, &gens);
            }
            return Ok(acc);
        }
        Ok(gens)
    }

    fn finish(&self) -> Result<()> {
        if self.pos != self.toks.len() {
            return self.err("trailing input");
        }
        Ok(())
    }
}

/// Products of generators, with repeats removed.
fn ideal_mul(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::new();
    for f in a {
        for g in b {
            let p = f * g;
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

pub fn parse_polynomial(ring: &CoxRing, src: &str) -> Result<Polynomial> {
    let mut p = Parser::new(ring, src)?;
    let f = p.poly()?;
    p.finish()?;
    Ok(f)
}

/// Parses an ideal expression into a list of generators. Zero generators
/// are dropped and repeats removed, keeping first occurrences.
pub fn parse_ideal_expr(ring: &CoxRing, src: &str) -> Result<Vec<Polynomial>> {
    let mut p = Parser::new(ring, src)?;
    let gens = match p.ideal_sum().and_then(|g| p.finish().map(|_| g)) {
        Ok(g) => g,
        Err(first) => {
            let mut q = Parser::new(ring, src)?;
            if q.peek().is_none() {
                return Ok(Vec::new());
            }
            let mut g = vec![q.poly()?];
            while q.eat(&Tok::Comma) {
                if q.peek().is_none() {
                    break;
                }
                g.push(q.poly()?);
            }
            if q.finish().is_err() {
                return Err(first);
            }
            g
        }
    };
    let mut out: Vec<Polynomial> = Vec::new();
    for g in gens {
        if !g.is_zero() && !out.contains(&g) {
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials() {
        let ring = CoxRing::projective(2);
        let f = parse_polynomial(&ring, "a0^2 - 3/2*a1*x0_2 + (a0 - a1)*a2").unwrap();
        assert_eq!(f.display_aliases(&ring), "a0^2 + a0*a2 - 5/2*a1*a2");
        assert!(parse_polynomial(&ring, "a0 +").is_err());
        assert!(parse_polynomial(&ring, "a7").is_err());
        assert_eq!(parse_polynomial(&ring, "-a0").unwrap(), -&Polynomial::var(3, 0));
    }

    #[test]
    fn ideal_expressions() {
        let ring = CoxRing::product_projective(&[3, 3]);
        let g = parse_ideal_expr(&ring, "(a0,a1,a2)^2 + (b2,b3)(b0,b1,b2) + (b1^3)").unwrap();
        assert_eq!(g.len(), 6 + 6 + 1);
        let h = parse_ideal_expr(&ring, "a0*b1, a1 - a2,\n b3").unwrap();
        assert_eq!(h.len(), 3);
        let p = parse_ideal_expr(&ring, "(a0+a1)").unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].terms().len(), 2);
        assert!(parse_ideal_expr(&ring, "(a0,").is_err());
    }
}
