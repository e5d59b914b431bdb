//! Sparse multivariate polynomials over `ℚ(i)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exactalg::{write_term, GaussianRational};

use super::MonomialOrder;

pub type Monomial = Vec<u32>;

/// A polynomial in a fixed number of variables. Terms are kept in a map
/// keyed by exponent vector, so equal polynomials compare equal regardless
/// of how they were built; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: GaussianRational) -> Self {
        Self::term(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, GaussianRational::one())
    }

    pub fn monomial(exps: Monomial) -> Self {
        Self::term(exps, GaussianRational::one())
    }

    pub fn term(exps: Monomial, c: GaussianRational) -> Self {
        let mut p = Self::zero(exps.len());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The variable `x_k`.
    pub fn var(nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k] = 1;
        Self::monomial(e)
    }

    /// `x^a − c·x^b`.
    pub fn binomial(a: Monomial, c: GaussianRational, b: Monomial) -> Self {
        &Self::monomial(a) - &Self::term(b, c)
    }

    /// Builds from a list of terms, summing repeated monomials.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, GaussianRational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.len(), nvars, "monomial length differs from the ring");
            p.add_term(m, &c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[u32]) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    /// Terms sorted from largest to smallest in `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, GaussianRational)> {
        let mut t: Vec<_> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
        t
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(Monomial, GaussianRational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Divides by the leading coefficient in `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading_term(order) {
            Some((_, c)) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }

    pub fn mul_monomial(&self, m: &[u32]) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(m).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Renames variables: variable `k` becomes `map[k]` in a ring with
    /// `nvars` variables. Variables mapped to `None` must not occur.
    pub fn remap(&self, nvars: usize, map: &[Option<usize>]) -> Self {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; nvars];
            for (k, &x) in m.iter().enumerate() {
                if x > 0 {
                    e[map[k].expect("variable dropped by remap occurs")] = x;
                }
            }
            (e, c.clone())
        });
        Self::from_terms(nvars, terms)
    }

    /// Whether variable `k` occurs.
    pub fn involves(&self, k: usize) -> bool {
        self.terms.keys().any(|m| m[k] > 0)
    }

    /// Substitutes polynomials for the variables.
    pub fn substitute(&self, values: &[MPoly]) -> MPoly {
        assert_eq!(values.len(), self.nvars);
        let n = values.first().map_or(0, MPoly::nvars);
        let mut out = MPoly::zero(n);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(n, c.clone());
            for (k, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = &t * &values[k].pow(e);
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Human-readable form with the given variable names.
    pub fn display<'a>(&'a self, names: &'a [String]) -> MPolyDisplay<'a> {
        MPolyDisplay { poly: self, names }
    }
}

pub struct MPolyDisplay<'a> {
    poly: &'a MPoly,
    names: &'a [String],
}

pub(crate) fn monomial_string(m: &[u32], names: &[String]) -> String {
    let parts: Vec<String> = m
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(k, &e)| if e == 1 { names[k].clone() } else { format!("{}^{e}", names[k]) })
        .collect();
    parts.join("*")
}

impl fmt::Display for MPolyDisplay<'_> {
    /// Terms in descending degrevlex order, e.g. `x1^2*x2*x3 - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let terms = self.poly.sorted_terms(&MonomialOrder::DegRevLex);
        for (k, (m, c)) in terms.iter().enumerate() {
            write_term(f, c, &monomial_string(m, self.names), k == 0)?;
        }
        Ok(())
    }
}

impl fmt::Display for MPoly {
    /// Uses `x1, x2, …` as variable names.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|k| format!("x{k}")).collect();
        write!(f, "{}", self.display(&names))
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        assert_eq!(self.nvars, o.nvars, "polynomials from different rings");
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        self + &(-o)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        assert_eq!(self.nvars, o.nvars, "polynomials from different rings");
        let mut out = MPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(m, &(ca * cb));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let x = MPoly::var(3, 0);
        let y = MPoly::var(3, 1);
        let p = &(&x * &x) - &y;
        assert_eq!(p.to_string(), "x1^2 - x2");
        let q = &p * &p;
        assert_eq!(q.to_string(), "x1^4 - 2*x1^2*x2 + x2^2");
        assert!((&p - &p).is_zero());
        let b = MPoly::binomial(vec![2, 1, 1], GaussianRational::one(), vec![0, 0, 0]);
        assert_eq!(b.to_string(), "x1^2*x2*x3 - 1");
        let half = MPoly::constant(3, GaussianRational::from_frac(1, 2));
        assert_eq!((&b * &half).to_string(), "1/2*x1^2*x2*x3 - 1/2");
    }

    #[test]
    fn substitution() {
        // x1*x2 - 1 at x1 = t^2, x2 = t
        let p = MPoly::binomial(vec![1, 1], GaussianRational::one(), vec![0, 0]);
        let t = MPoly::var(1, 0);
        let s = p.substitute(&[t.pow(2), t.clone()]);
        assert_eq!(s, &t.pow(3) - &MPoly::one(1));
    }
}
