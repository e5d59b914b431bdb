//! Germs `R(z)·exp(P(z))` with finitely many zeros and poles, germs known
//! only through their order, and families of them at a base point.

mod family;
mod parse;

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{GaussianRational, Poly, RatFunc};

pub use family::{FamilyFile, MemberFile};
pub use parse::parse_germ;

/// Order vector `ℓ = (ord f₁, …, ord f_r)` at the base point.
pub type OrderVector = Vec<i64>;

/// A germ in normal form. Equality is componentwise: `exp(1)` and `e` are
/// not identified, since `e` has no representation in `ℚ(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExpPolyGerm {
    pub rat: RatFunc,
    pub exp: Poly,
}

impl ExpPolyGerm {
    /// Panics if `rat` is zero.
    pub fn new(rat: RatFunc, exp: Poly) -> Self {
        assert!(!rat.is_zero(), "the zero function is not a germ");
        Self { rat, exp }
    }

    pub fn one() -> Self {
        Self { rat: RatFunc::one(), exp: Poly::zero() }
    }

    pub fn is_one(&self) -> bool {
        self.rat.is_one() && self.exp.is_zero()
    }

    /// True when both the rational part and the exponent are constants,
    /// i.e. the germ is `c·e^κ`.
    pub fn is_constant(&self) -> bool {
        self.rat.is_constant() && self.exp.is_constant()
    }

    pub fn mul(&self, o: &ExpPolyGerm) -> ExpPolyGerm {
        Self { rat: &self.rat * &o.rat, exp: &self.exp + &o.exp }
    }

    pub fn powi(&self, n: i64) -> ExpPolyGerm {
        Self { rat: self.rat.powi(n), exp: self.exp.scale(&GaussianRational::from_int(n)) }
    }

    /// `(R e^P)' = (R' + R·P') e^P`; the rational factor may vanish.
    pub fn derivative_rat(&self) -> RatFunc {
        &self.rat.derivative() + &(&self.rat * &RatFunc::from_poly(self.exp.derivative()))
    }
}

impl fmt::Display for ExpPolyGerm {
    /// Parseable form such as `(z - 1)/(z^2)*exp(-z)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.rat.num();
        let den = self.rat.den();
        if self.exp.is_zero() {
            return if den.is_one() { write!(f, "{num}") } else { write!(f, "({num})/({den})") };
        }
        if !self.rat.is_one() {
            write!(f, "({num})")?;
            if !den.is_one() {
                write!(f, "/({den})")?;
            }
            write!(f, "*")?;
        }
        write!(f, "exp({})", self.exp)
    }
}

/// A germ outside the normal-form class, known only through its order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbstractGerm {
    pub order: i64,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Member {
    Germ(ExpPolyGerm),
    Abstract(AbstractGerm),
}

impl Member {
    pub fn order_at(&self, z0: &GaussianRational) -> i64 {
        match self {
            Member::Germ(g) => ord_at(g, z0),
            Member::Abstract(a) => a.order,
        }
    }
}

/// `f₁, …, f_r` at a base point `z₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GermFamily {
    pub members: Vec<Member>,
    pub base_point: GaussianRational,
}

impl GermFamily {
    /// Panics on an empty member list.
    pub fn new(members: Vec<Member>, base_point: GaussianRational) -> Self {
        assert!(!members.is_empty(), "a family needs at least one member");
        Self { members, base_point }
    }

    /// Family of normal-form germs at `z₀ = 0`.
    pub fn from_germs(germs: Vec<ExpPolyGerm>) -> Self {
        Self::new(germs.into_iter().map(Member::Germ).collect(), GaussianRational::zero())
    }

    /// Parses each expression; base point 0.
    pub fn parse_exprs<S: AsRef<str>>(exprs: &[S]) -> Result<Self> {
        let germs = exprs.iter().map(|e| parse_germ(e.as_ref())).collect::<Result<Vec<_>>>()?;
        if germs.is_empty() {
            return Err(Error::DimensionTooSmall { min: 1, got: 0 });
        }
        Ok(Self::from_germs(germs))
    }

    /// Family made of abstract members with the given orders.
    pub fn from_orders(ell: &[i64]) -> Self {
        let members = ell
            .iter()
            .enumerate()
            .map(|(k, &order)| Member::Abstract(AbstractGerm { order, label: format!("f{}", k + 1) }))
            .collect();
        Self::new(members, GaussianRational::zero())
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The normal forms, or `AbstractMember` for the first abstract entry.
    pub fn germs(&self) -> Result<Vec<&ExpPolyGerm>> {
        self.members
            .iter()
            .enumerate()
            .map(|(k, m)| match m {
                Member::Germ(g) => Ok(g),
                Member::Abstract(a) => {
                    Err(Error::AbstractMember { index: k + 1, label: a.label.clone() })
                }
            })
            .collect()
    }
}

/// Order of zero at `z0` (negative for a pole); the exponential factor is
/// a unit and never contributes.
pub fn ord_at(g: &ExpPolyGerm, z0: &GaussianRational) -> i64 {
    g.rat.valuation_at(z0)
}

/// Order of growth, `deg P`.
pub fn growth_order(g: &ExpPolyGerm) -> usize {
    g.exp.degree_or_zero()
}

/// `f^a = Π f_j^{a_j}`; entries of `a` may be negative.
pub fn germ_monomial(fam: &GermFamily, a: &[i64]) -> Result<ExpPolyGerm> {
    check_len(fam.len(), a.len())?;
    let germs = fam.germs()?;
    Ok(germs
        .iter()
        .zip(a)
        .filter(|(_, &e)| e != 0)
        .fold(ExpPolyGerm::one(), |acc, (g, &e)| acc.mul(&g.powi(e))))
}

pub fn order_vector(fam: &GermFamily) -> OrderVector {
    fam.members.iter().map(|m| m.order_at(&fam.base_point)).collect()
}

/// Whether `f^a` is holomorphic at the base point, i.e. `ℓ·a ≥ 0`.
pub fn is_holomorphic_monomial(fam: &GermFamily, a: &[i64]) -> Result<bool> {
    check_len(fam.len(), a.len())?;
    let ell = order_vector(fam);
    Ok(ell.iter().zip(a).map(|(l, x)| l * x).sum::<i64>() >= 0)
}

fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}

#[cfg(test)]
mod tests {
    use num_traits::One;

    use super::*;

    fn ex361() -> GermFamily {
        GermFamily::parse_exprs(&["z", "exp(-z)/z^2", "exp(z)"]).unwrap()
    }

    #[test]
    fn orders() {
        let zero = GaussianRational::zero();
        assert_eq!(ord_at(&parse_germ("exp(-z)/z^2").unwrap(), &zero), -2);
        assert_eq!(ord_at(&parse_germ("exp(z)").unwrap(), &zero), 0);
        assert_eq!(ord_at(&parse_germ("(z-1)^3").unwrap(), &GaussianRational::one()), 3);
        assert_eq!(ord_at(&parse_germ("z^2+1").unwrap(), &GaussianRational::i()), 1);
    }

    #[test]
    fn growth() {
        assert_eq!(growth_order(&parse_germ("exp(-z)/z^2").unwrap()), 1);
        assert_eq!(growth_order(&parse_germ("z").unwrap()), 0);
        assert_eq!(growth_order(&parse_germ("exp(z^3)").unwrap()), 3);
    }

    #[test]
    fn monomials() {
        let fam = ex361();
        assert!(germ_monomial(&fam, &[2, 1, 1]).unwrap().is_one());
        assert!(germ_monomial(&fam, &[0, 0, 0]).unwrap().is_one());
        let fam2 = GermFamily::parse_exprs(&["z", "exp(z)"]).unwrap();
        let m = germ_monomial(&fam2, &[1, -1]).unwrap();
        assert_eq!(m, parse_germ("z*exp(-z)").unwrap());
        assert_eq!(
            germ_monomial(&fam, &[1, 1]),
            Err(Error::DimensionMismatch { expected: 3, got: 2 })
        );
    }

    #[test]
    fn order_vectors() {
        assert_eq!(order_vector(&ex361()), vec![1, -2, 0]);
        let mut fam = GermFamily::parse_exprs(&["z", "z", "exp(z)/z", "exp(-z)/z"]).unwrap();
        fam.members[1] = Member::Abstract(AbstractGerm { order: 1, label: "sin z".into() });
        assert_eq!(order_vector(&fam), vec![1, 1, -1, -1]);
        assert!(matches!(germ_monomial(&fam, &[1, 0, 0, 0]), Err(Error::AbstractMember { index: 2, .. })));
        assert_eq!(order_vector(&GermFamily::parse_exprs(&["1"]).unwrap()), vec![0]);
    }

    #[test]
    fn holomorphic_monomials() {
        let fam = ex361();
        assert!(is_holomorphic_monomial(&fam, &[2, 1, 0]).unwrap());
        assert!(is_holomorphic_monomial(&fam, &[0, 0, 0]).unwrap());
        assert!(!is_holomorphic_monomial(&fam, &[0, 1, 0]).unwrap());
    }

    #[test]
    fn display_round_trip() {
        for s in [
            "z",
            "exp(-z)/z^2",
            "(z-1)*exp(z^2)^2",
            "-1/3*z^2 + i*z - 5",
            "(1+2i)/(z^2 - 3*z + 1/2i)*exp(i*z^3 - 2/7*z)",
            "3",
            "-i",
            "exp(z)",
            "-exp(z)",
        ] {
            let g = parse_germ(s).unwrap();
            assert_eq!(parse_germ(&g.to_string()).unwrap(), g, "{s} -> {g}");
        }
    }
}
