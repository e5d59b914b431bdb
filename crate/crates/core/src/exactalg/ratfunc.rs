//! Rational functions `ℚ(i)(z)` in lowest terms with monic denominator.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{GaussianRational, Poly};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Builds `num / den` in lowest terms. Panics if `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = Poly::gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        };
        let lc = den.leading_coeff();
        if !lc.is_one() {
            let inv = lc.inv();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Self { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        Self { num: p, den: Poly::one() }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn z() -> Self {
        Self::from_poly(Poly::z())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The constant value, if this is a constant.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        self.is_constant().then(|| self.num.constant_term())
    }

    /// Ratio of the leading coefficients of numerator and denominator.
    pub fn leading_coeff(&self) -> GaussianRational {
        self.num.leading_coeff()
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of the zero rational function");
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        // lowest terms are preserved by powers
        Self { num: self.num.pow(e), den: self.den.pow(e) }
    }

    pub fn powi(&self, e: i64) -> Self {
        if e >= 0 {
            self.pow(e as u32)
        } else {
            self.inv().pow((-e) as u32)
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(n, &self.den * &self.den)
    }

    /// Order of vanishing at `a`: multiplicity in the numerator minus that in
    /// the denominator. Zero has no order; panics.
    pub fn valuation_at(&self, a: &GaussianRational) -> i64 {
        assert!(!self.is_zero(), "valuation of zero");
        self.num.multiplicity_at(a) as i64 - self.den.multiplicity_at(a) as i64
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone());
        }
        RatFunc::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::from_poly(&self.num * &o.num);
        }
        RatFunc::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, o: &RatFunc) -> RatFunc {
        self * &o.inv()
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Poly| {
            let s = p.to_string();
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 || s.starts_with('-') {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

/// Determinant of a square matrix over `ℚ(i)(z)` by fraction-field elimination.
pub fn ratfunc_det(m: &[Vec<RatFunc>]) -> RatFunc {
    let n = m.len();
    let mut a: Vec<Vec<RatFunc>> = m.to_vec();
    let mut det = RatFunc::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return RatFunc::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det = &det * &p;
        let pinv = p.inv();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &pinv;
            for c in col..n {
                let t = &factor * &a[col][c];
                a[r][c] = &a[r][c] - &t;
            }
        }
    }
    det
}

/// Determinant of a square matrix over `ℚ(i)`.
pub fn gaussian_det(m: &[Vec<GaussianRational>]) -> GaussianRational {
    let lifted: Vec<Vec<RatFunc>> = m
        .iter()
        .map(|row| row.iter().cloned().map(RatFunc::constant).collect())
        .collect();
    ratfunc_det(&lifted).as_constant().unwrap_or_else(GaussianRational::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn lowest_terms_and_monic_den() {
        // (z² − 1)/(2z − 2) = (z + 1)/2 → den monic: ((1/2)z + 1/2)/1
        let r = RatFunc::new(p(&[-1, 0, 1]), p(&[-2, 2]));
        assert!(r.is_polynomial());
        assert_eq!(r.num(), &Poly::from_coeffs(vec![GaussianRational::from_frac(1, 2); 2]));
    }

    #[test]
    fn arithmetic() {
        let a = RatFunc::new(p(&[1]), p(&[0, 1])); // 1/z
        let b = RatFunc::new(p(&[1]), p(&[1, 1])); // 1/(z+1)
        let s = &a - &b; // 1/(z(z+1))
        assert_eq!(s, RatFunc::new(p(&[1]), p(&[0, 1, 1])));
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(a.valuation_at(&GaussianRational::zero()), -1);
        // (1/z)' = −1/z²
        assert_eq!(a.derivative(), RatFunc::new(p(&[-1]), p(&[0, 0, 1])));
    }

    #[test]
    fn determinants() {
        let z = RatFunc::z();
        let one = RatFunc::one();
        // [[1,1],[0,z]] → z
        let m = vec![vec![one.clone(), one.clone()], vec![RatFunc::zero(), z.clone()]];
        assert_eq!(ratfunc_det(&m), z);
        let m = vec![vec![one.clone(), one.clone()], vec![one.clone(), one.clone()]];
        assert!(ratfunc_det(&m).is_zero());
        let g = |n| GaussianRational::from_int(n);
        assert_eq!(gaussian_det(&[vec![g(0), g(1)], vec![g(1), g(0)]]), g(-1));
    }
}
