//! Recursive-descent parser for germ expressions.
//!
//! ```text
//! expr     := term (('+'|'-') term)*
//! term     := factor (('*'|'/') factor)*
//! factor   := '-' factor | atom ('^' sint)?
//! atom     := 'z' | number | 'i' | 'exp' '(' expr ')' | '(' expr ')'
//! number   := int ('/' posint)? 'i'?
//! ```
//!
//! `2/3i` is the literal `(2/3)·i`, matching the constant syntax of the
//! family files. Every intermediate value is kept in the normal form
//! `R(z)·exp(P(z))`; operations that would leave it are rejected.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{GaussianRational, Poly, RatFunc, Rational};

use super::ExpPolyGerm;

/// A normal form that may also be zero (zero is legal mid-expression).
#[derive(Clone, Debug)]
struct Value {
    rat: RatFunc,
    exp: Poly,
}

impl Value {
    fn constant(c: GaussianRational) -> Self {
        Value { rat: RatFunc::constant(c), exp: Poly::zero() }
    }

    fn is_zero(&self) -> bool {
        self.rat.is_zero()
    }

    fn describe(&self) -> String {
        ExpPolyGerm { rat: self.rat.clone(), exp: self.exp.clone() }.to_string()
    }

    fn add(self, o: Value, pos: usize) -> Result<Value> {
        if self.is_zero() {
            return Ok(o);
        }
        if o.is_zero() {
            return Ok(self);
        }
        if self.exp != o.exp {
            return Err(Error::NotNormalForm(format!(
                "sum of terms with different exponentials at byte {pos}: {} and {}",
                self.describe(),
                o.describe()
            )));
        }
        let rat = &self.rat + &o.rat;
        let exp = if rat.is_zero() { Poly::zero() } else { self.exp };
        Ok(Value { rat, exp })
    }

    fn neg(self) -> Value {
        Value { rat: -self.rat, exp: self.exp }
    }

    fn mul(self, o: Value) -> Value {
        if self.is_zero() || o.is_zero() {
            return Value::constant(GaussianRational::zero());
        }
        Value { rat: &self.rat * &o.rat, exp: &self.exp + &o.exp }
    }

    fn inv(self) -> Result<Value> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Value { rat: self.rat.inv(), exp: -self.exp })
    }

    fn powi(self, n: i64) -> Result<Value> {
        if self.is_zero() {
            return match n {
                0 => Ok(Value::constant(GaussianRational::one())),
                n if n < 0 => Err(Error::DivisionByZero),
                _ => Ok(self),
            };
        }
        let k = GaussianRational::from_int(n);
        Ok(Value { rat: self.rat.powi(n), exp: self.exp.scale(&k) })
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

/// Parses a germ expression into its normal form.
pub fn parse_germ(text: &str) -> Result<ExpPolyGerm> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    if v.is_zero() {
        return Err(Error::ZeroGerm);
    }
    Ok(ExpPolyGerm { rat: v.rat, exp: v.exp })
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> Error {
        Error::SyntaxError { pos: self.pos, msg: msg.to_string() }
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

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = self.term()?;
        loop {
            let pos = self.pos;
            if self.eat(b'+') {
                let t = self.term()?;
                acc = acc.add(t, pos)?;
            } else if self.eat(b'-') {
                let t = self.term()?;
                acc = acc.add(t.neg(), pos)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(self.factor()?);
            } else if self.eat(b'/') {
                acc = acc.mul(self.factor()?.inv()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Value> {
        if self.eat(b'-') {
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let n = self.sint()?;
            return base.powi(n);
        }
        Ok(base)
    }

    fn sint(&mut self) -> Result<i64> {
        let negative = self.eat(b'-');
        self.skip_ws();
        let digits = self.digits().ok_or_else(|| self.error("expected an integer exponent"))?;
        let n: i64 = digits.parse().map_err(|_| self.error("exponent out of range"))?;
        Ok(if negative { -n } else { n })
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn keyword(&mut self, word: &str) -> bool {
        let w = word.as_bytes();
        let end = self.pos + w.len();
        if self.src.get(self.pos..end) == Some(w)
            && !self.src.get(end).is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
        {
            self.pos = end;
            true
        } else {
            false
        }
    }

    fn atom(&mut self) -> Result<Value> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => self.number(),
            Some(_) if self.keyword("exp") => {
                self.expect(b'(')?;
                let start = self.pos;
                let arg = self.expr()?;
                self.expect(b')')?;
                if arg.is_zero() {
                    return Ok(Value::constant(GaussianRational::one()));
                }
                if !arg.exp.is_zero() || !arg.rat.is_polynomial() {
                    let text = String::from_utf8_lossy(&self.src[start..self.pos - 1]);
                    return Err(Error::NonPolynomialExponent(text.trim().to_string()));
                }
                Ok(Value { rat: RatFunc::one(), exp: arg.rat.num().clone() })
            }
            Some(_) if self.keyword("z") => {
                Ok(Value { rat: RatFunc::z(), exp: Poly::zero() })
            }
            Some(_) if self.keyword("i") => Ok(Value::constant(GaussianRational::i())),
            Some(c) => Err(self.error(&format!("unexpected character `{}`", c as char))),
        }
    }

    /// `int ('/' posint)? 'i'?`, with no whitespace inside the literal.
    fn number(&mut self) -> Result<Value> {
        let num: BigInt = self.digits().expect("caller saw a digit").parse().expect("digits");
        let mut value = Rational::from_integer(num);
        if self.src.get(self.pos) == Some(&b'/')
            && self.src.get(self.pos + 1).is_some_and(u8::is_ascii_digit)
        {
            self.pos += 1;
            let den: BigInt = self.digits().expect("digit follows").parse().expect("digits");
            if den.is_zero() {
                return Err(Error::DivisionByZero);
            }
            value /= Rational::from_integer(den);
        }
        if self.src.get(self.pos) == Some(&b'i')
            && !self.src.get(self.pos + 1).is_some_and(|c| c.is_ascii_alphanumeric())
        {
            self.pos += 1;
            return Ok(Value::constant(GaussianRational::new(Rational::zero(), value)));
        }
        Ok(Value::constant(GaussianRational::from_rational(value)))
    }
}
