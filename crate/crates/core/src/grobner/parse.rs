//! Parser for polynomials in named variables, e.g. `x1^2*x3*x4 - 1`.
//!
//! Same surface syntax as germ expressions, minus `exp` and division by
//! non-constants. Identifiers are variable names; `i` is the imaginary
//! unit unless it is itself a variable name.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{GaussianRational, Rational};

use super::MPoly;

pub fn parse_mpoly(text: &str, vars: &[String]) -> Result<MPoly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, vars };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::SyntaxError { pos: self.pos, msg: msg.to_string() }
    }

    fn n(&self) -> usize {
        self.vars.len()
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MPoly> {
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

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.factor()?;
            } else if self.eat(b'/') {
                let d = self.factor()?;
                if !d.is_constant() {
                    return Err(self.error("division by a non-constant polynomial"));
                }
                let c = d.coeff(&vec![0; self.n()]);
                if c.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                acc = acc.scale(&c.inv());
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<MPoly> {
        if self.eat(b'-') {
            return Ok(-&self.factor()?);
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                self.pos += 1;
            }
            let e: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .expect("ascii")
                .parse()
                .map_err(|_| self.error("expected a nonnegative integer exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MPoly> {
        self.skip_ws();
        let Some(&c) = self.src.get(self.pos) else {
            return Err(self.error("unexpected end of input"));
        };
        if c == b'(' {
            self.pos += 1;
            let v = self.expr()?;
            if !self.eat(b')') {
                return Err(self.error("expected `)`"));
            }
            return Ok(v);
        }
        if c.is_ascii_digit() {
            return self.number();
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            let start = self.pos;
            while self.src.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_') {
                self.pos += 1;
            }
            let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
            if let Some(k) = self.vars.iter().position(|v| v == name) {
                return Ok(MPoly::var(self.n(), k));
            }
            if name == "i" {
                return Ok(MPoly::constant(self.n(), GaussianRational::i()));
            }
            self.pos = start;
            return Err(self.error(&format!("unknown variable `{name}`")));
        }
        Err(self.error(&format!("unexpected character `{}`", c as char)))
    }

    fn number(&mut self) -> Result<MPoly> {
        let digits = |p: &mut Self| {
            let start = p.pos;
            while p.src.get(p.pos).is_some_and(u8::is_ascii_digit) {
                p.pos += 1;
            }
            std::str::from_utf8(&p.src[start..p.pos]).expect("ascii").parse::<BigInt>().expect("digits")
        };
        let mut value = Rational::from_integer(digits(self));
        if self.src.get(self.pos) == Some(&b'/') && self.src.get(self.pos + 1).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
            let d = digits(self);
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            value /= Rational::from_integer(d);
        }
        if self.src.get(self.pos) == Some(&b'i')
            && !self.src.get(self.pos + 1).is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
        {
            self.pos += 1;
            return Ok(MPoly::constant(self.n(), GaussianRational::new(Rational::zero(), value)));
        }
        Ok(MPoly::constant(self.n(), GaussianRational::from_rational(value)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_and_prints() {
        let v = names(&["x1", "x2", "x3", "x4"]);
        let p = parse_mpoly("x1^2*x3*x4 - 1", &v).unwrap();
        assert_eq!(p.display(&v).to_string(), "x1^2*x3*x4 - 1");
        let q = parse_mpoly("(x1 - x2)*(x1 + x2) + 1/2i*x3/2", &v).unwrap();
        assert_eq!(q.display(&v).to_string(), "x1^2 - x2^2 + (1/4*i)*x3");
        assert_eq!(parse_mpoly(&q.display(&v).to_string(), &v).unwrap(), q);
    }

    #[test]
    fn errors() {
        let v = names(&["x", "y"]);
        assert!(matches!(parse_mpoly("x + z", &v), Err(Error::SyntaxError { .. })));
        assert!(matches!(parse_mpoly("x/y", &v), Err(Error::SyntaxError { .. })));
        assert!(matches!(parse_mpoly("x^-1", &v), Err(Error::SyntaxError { .. })));
        assert_eq!(parse_mpoly("x/0", &v), Err(Error::DivisionByZero));
    }
}
