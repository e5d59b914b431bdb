//! Dense univariate polynomials in `z` over `ℚ(i)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::GaussianRational;

/// Polynomial with coefficients indexed by degree. The zero polynomial is
/// the empty vector; otherwise the last coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<GaussianRational>,
}

impl Poly {
    pub fn from_coeffs(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `z`.
    pub fn z() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `z - a`
    pub fn linear_root(a: &GaussianRational) -> Self {
        Self::from_coeffs(vec![-a, GaussianRational::one()])
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    /// Coefficient of `z^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Zero or a nonzero constant.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention `deg 0 = 0`.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> GaussianRational {
        self.coeffs.last().cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// Constant term `P(0)`.
    pub fn constant_term(&self) -> GaussianRational {
        self.coeff(0)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Scaled to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.leading_coeff().inv())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussianRational::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &GaussianRational::from_int(k as i64))
                .collect(),
        )
    }

    /// Euclidean division `self = q·d + r` with `deg r < deg d`. Panics if `d = 0`.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let lc_inv = d.leading_coeff().inv();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![GaussianRational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let c = &rem[k] * &lc_inv;
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &c * dc;
                rem[k - dd + j] -= &t;
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Number of times `(z - a)` divides `self`. Zero polynomial gives `usize::MAX`.
    pub fn multiplicity_at(&self, a: &GaussianRational) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = Poly::linear_root(a);
        let mut p = self.clone();
        let mut m = 0;
        while let Some(q) = p.exact_div(&lin) {
            p = q;
            m += 1;
        }
        m
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Square-free decomposition (Yun): monic `s_1, s_2, ...` with
    /// `monic(self) = Π s_k^k`, the `s_k` pairwise coprime and square-free.
    pub fn squarefree_parts(&self) -> Vec<Poly> {
        let mut parts = Vec::new();
        if self.is_constant() {
            return parts;
        }
        let f = self.monic();
        let df = f.derivative();
        let a = Poly::gcd(&f, &df);
        let mut b = f.exact_div(&a).expect("gcd divides");
        let mut c = df.exact_div(&a).expect("gcd divides");
        loop {
            let d = &c - &b.derivative();
            if b.is_one() {
                break;
            }
            let g = Poly::gcd(&b, &d);
            parts.push(g.clone());
            b = b.exact_div(&g).expect("gcd divides");
            c = d.exact_div(&g).expect("gcd divides");
        }
        parts
    }

    /// Canonical sort key: degree first, then coefficients from the top.
    pub(crate) fn canonical_cmp(&self, other: &Poly) -> std::cmp::Ordering {
        let key = |c: &GaussianRational| (!c.is_zero(), c.re.clone(), c.im.clone());
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            self.coeffs.iter().rev().map(key).cmp(other.coeffs.iter().rev().map(key))
        })
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| &self.coeff(k) + &o.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| &self.coeff(k) - &o.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        &self + &o
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        &self - &o
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        &self * &o
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Writes one signed term of a sum. `first` suppresses the leading `+`.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    c: &GaussianRational,
    monomial: &str,
    first: bool,
) -> fmt::Result {
    let negative_real = c.is_real() && c.re.is_negative();
    let mag = if negative_real { -c } else { c.clone() };
    match (first, negative_real) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    let coeff = if mag.is_real() {
        mag.to_expr_string()
    } else {
        format!("({})", mag.to_expr_string())
    };
    if monomial.is_empty() {
        write!(f, "{coeff}")
    } else if mag.is_one() {
        write!(f, "{monomial}")
    } else {
        write!(f, "{coeff}*{monomial}")
    }
}

impl fmt::Display for Poly {
    /// Human form such as `z^2 - 1/3*z + (1+i)`, parseable by the germ parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            write_term(f, c, &mono, first)?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn gcd_examples() {
        // gcd(z²−1, z−1) = z−1
        assert_eq!(Poly::gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])), p(&[-1, 1]));
        // gcd(z, 1) = 1
        assert_eq!(Poly::gcd(&p(&[0, 1]), &p(&[1])), Poly::one());
        // gcd(z³+z, z²+1) = z²+1, since z³+z = z·(z²+1)
        assert_eq!(Poly::gcd(&p(&[0, 1, 0, 1]), &p(&[1, 0, 1])), p(&[1, 0, 1]));
        assert_eq!(Poly::gcd(&Poly::zero(), &Poly::zero()), Poly::zero());
        // monic even when inputs are not
        assert_eq!(Poly::gcd(&p(&[0, 3]), &Poly::zero()), p(&[0, 1]));
    }

    #[test]
    fn division_and_multiplicity() {
        let f = &p(&[-1, 1]).pow(3) * &p(&[2, 0, 1]);
        assert_eq!(f.multiplicity_at(&GaussianRational::one()), 3);
        assert_eq!(f.multiplicity_at(&GaussianRational::zero()), 0);
        let (q, r) = f.div_rem(&p(&[2, 0, 1]));
        assert!(r.is_zero());
        assert_eq!(q, p(&[-1, 1]).pow(3));
        // z² + 1 has the root i
        assert_eq!(p(&[1, 0, 1]).multiplicity_at(&GaussianRational::i()), 1);
    }

    #[test]
    fn squarefree() {
        // z²(z−1)³(z+2)
        let f = &(&p(&[0, 1]).pow(2) * &p(&[-1, 1]).pow(3)) * &p(&[2, 1]);
        let parts = f.scale(&GaussianRational::from_int(5)).squarefree_parts();
        assert_eq!(parts, vec![p(&[2, 1]), p(&[0, 1]), p(&[-1, 1])]);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[5, -1, 1]).to_string(), "z^2 - z + 5");
        assert_eq!(p(&[0, -2]).to_string(), "-2*z");
        let c = Poly::from_coeffs(vec!["1+i".parse().unwrap(), "-1/3".parse().unwrap()]);
        assert_eq!(c.to_string(), "-1/3*z + (1 + i)");
    }
}
