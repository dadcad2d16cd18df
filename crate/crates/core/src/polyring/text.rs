//! Text format: `3/2*x1^2*y3-x2*y1+5`. Terms are printed in decreasing
//! default order with no spaces; the parser also tolerates whitespace,
//! repeated numeric factors and explicit `1*` coefficients.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::monomial::BiMonomial;
use super::polynomial::BiPolynomial;
use super::rational::{format_rational, Rational};
use super::universe::VariableUniverse;
use crate::error::{Error, Result};

pub(crate) fn render(p: &BiPolynomial) -> String {
    let u = p.universe();
    let mut out = String::new();
    for (i, (m, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        if neg {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let abs = c.abs();
        if m.is_one() {
            out.push_str(&format_rational(&abs));
        } else {
            if !abs.is_one() {
                out.push_str(&format_rational(&abs));
                out.push('*');
            }
            out.push_str(&m.render(u));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
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

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii")
    }

    fn number(&mut self) -> Result<Rational> {
        let num: BigInt = self.digits().parse().expect("nonempty digit run");
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let d = self.digits();
            if d.is_empty() {
                return self.err("expected denominator");
            }
            let den: BigInt = d.parse().expect("digits");
            if den == BigInt::from(0) {
                return self.err("zero denominator");
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn identifier(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii")
    }
}

pub(crate) fn parse(universe: &Arc<VariableUniverse>, src: &str) -> Result<BiPolynomial> {
    let mut p = Parser { src: src.as_bytes(), pos: 0 };
    let mut out = BiPolynomial::zero(universe);
    let mut first = true;
    loop {
        let sign = match p.peek() {
            None if first => return p.err("empty polynomial"),
            None => break,
            Some(b'+') => {
                p.pos += 1;
                Rational::one()
            }
            Some(b'-') => {
                p.pos += 1;
                -Rational::one()
            }
            Some(_) if first => Rational::one(),
            Some(c) => return p.err(format!("expected `+` or `-`, found `{}`", c as char)),
        };
        first = false;
        let mut coeff = sign;
        let mut mono = BiMonomial::one(universe.nvars());
        loop {
            match p.peek() {
                Some(c) if c.is_ascii_digit() => coeff *= p.number()?,
                Some(c) if c.is_ascii_alphabetic() => {
                    let at = p.pos;
                    let name = p.identifier();
                    let idx = universe.index_of(name).map_err(|_| Error::Parse {
                        pos: at,
                        msg: format!("unknown variable `{name}`"),
                    })?;
                    let mut e = 1u32;
                    if p.peek() == Some(b'^') {
                        p.pos += 1;
                        p.skip_ws();
                        let d = p.digits();
                        e = match d.parse() {
                            Ok(e) => e,
                            Err(_) => return p.err("expected exponent"),
                        };
                    }
                    let mut exps = mono.exponents().to_vec();
                    exps[idx] += e;
                    mono = BiMonomial::from_exponents(exps);
                }
                Some(c) => return p.err(format!("unexpected `{}`", c as char)),
                None => return p.err("unexpected end of input"),
            }
            if p.peek() == Some(b'*') {
                p.pos += 1;
            } else {
                break;
            }
        }
        out.add_term(mono, coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_examples() {
        let u = VariableUniverse::chart(2);
        for s in ["0", "1", "-3/2", "x1*y2-x2*y1", "-x1^2*y3+3/2*d1*u3_2", "x1+5"] {
            assert_eq!(BiPolynomial::parse(&u, s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn tolerant_parse() {
        let u = VariableUniverse::new(1);
        let a = BiPolynomial::parse(&u, " 1*x1 * y2 - 2 * 3/4*x2^2 + x2*x2 ").unwrap();
        assert_eq!(a.to_string(), "x1*y2-1/2*x2^2");
    }

    #[test]
    fn parse_errors() {
        let u = VariableUniverse::new(1);
        for bad in ["", "x3", "x1*", "x1^", "x1 y2", "1/0", "+"] {
            assert!(BiPolynomial::parse(&u, bad).is_err(), "{bad:?}");
        }
    }
}
