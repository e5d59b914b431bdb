//! Independence certificates for exponentials `e^{P_j}` and their
//! transforms, plus a Wronskian cross-check over `ℂ`.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{gaussian_det, ratfunc_det, GaussianRational, Poly, RatFunc};
use crate::germ::GermFamily;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    LinearlyIndependent,
    AlgebraicallyIndependent,
    CriterionFails,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::LinearlyIndependent => "LinearlyIndependent",
            Verdict::AlgebraicallyIndependent => "AlgebraicallyIndependent",
            Verdict::CriterionFails => "CriterionFails",
        })
    }
}

/// Field over which an independence verdict is claimed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// `ℳ_{<1}`, meromorphic functions of order below one.
    SubLinearOrder,
    Complex,
}

/// Why a criterion failed. Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `P_j − P_k = difference`, a constant.
    ConstantDifference { j: usize, k: usize, difference: GaussianRational },
    /// `deg P_j` in input order; some degree is 0 or repeats.
    Degrees(Vec<usize>),
    /// `P_index` is constant.
    ConstantExponent { index: usize },
    ZeroDeterminant,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceCertificate {
    pub verdict: Verdict,
    pub over: Field,
    pub witness: Option<Witness>,
    /// `det g` or `det A` when a matrix is involved.
    pub determinant: Option<RatFunc>,
    pub trace: Vec<Hypothesis>,
}

fn hyp(name: &str, holds: bool) -> Hypothesis {
    Hypothesis { name: name.into(), holds }
}

fn constant_difference(polys: &[Poly]) -> Option<Witness> {
    for j in 0..polys.len() {
        for k in j + 1..polys.len() {
            let d = &polys[j] - &polys[k];
            if d.is_constant() {
                return Some(Witness::ConstantDifference { j: j + 1, k: k + 1, difference: d.constant_term() });
            }
        }
    }
    None
}

fn degrees_distinct_positive(polys: &[Poly]) -> (bool, Vec<usize>) {
    let degs: Vec<usize> = polys.iter().map(Poly::degree_or_zero).collect();
    let mut sorted = degs.clone();
    sorted.sort();
    sorted.dedup();
    let ok = sorted.len() == degs.len() && degs.iter().all(|&d| d >= 1);
    (ok, degs)
}

/// `e^{P_1}, …, e^{P_r}` are linearly independent over `ℳ_{<1}` when no
/// difference `P_j − P_k` is constant.
pub fn linear_independence(polys: &[Poly]) -> IndependenceCertificate {
    let witness = constant_difference(polys);
    IndependenceCertificate {
        verdict: if witness.is_none() { Verdict::LinearlyIndependent } else { Verdict::CriterionFails },
        over: Field::SubLinearOrder,
        trace: vec![hyp("pairwise differences nonconstant", witness.is_none())],
        witness,
        determinant: None,
    }
}

/// Algebraic independence over `ℳ_{<1}` when the degrees are positive and
/// pairwise distinct.
pub fn algebraic_independence(polys: &[Poly]) -> IndependenceCertificate {
    let (ok, degs) = degrees_distinct_positive(polys);
    IndependenceCertificate {
        verdict: if ok { Verdict::AlgebraicallyIndependent } else { Verdict::CriterionFails },
        over: Field::SubLinearOrder,
        witness: (!ok).then_some(Witness::Degrees(degs)),
        determinant: None,
        trace: vec![hyp("degrees positive and pairwise distinct", ok)],
    }
}

/// The strongest of the two criteria that applies.
fn best(polys: &[Poly]) -> IndependenceCertificate {
    let alg = algebraic_independence(polys);
    if alg.verdict == Verdict::AlgebraicallyIndependent {
        return alg;
    }
    let mut lin = linear_independence(polys);
    lin.trace.extend(alg.trace);
    lin
}

fn check_square<T>(m: &[Vec<T>]) -> Result<usize> {
    let n = m.len();
    match m.iter().find(|row| row.len() != n) {
        Some(row) => Err(Error::NonSquare { rows: n, cols: row.len() }),
        None => Ok(n),
    }
}

/// `h_j = Σ_k g_{jk} e^{P_k}` with `g` over `ℚ(i)(z)`: the verdict for the
/// `e^{P_k}` carries over once `det g ≠ 0`.
pub fn transformed_independence(g: &[Vec<RatFunc>], polys: &[Poly]) -> Result<IndependenceCertificate> {
    let n = check_square(g)?;
    if n != polys.len() {
        return Err(Error::DimensionMismatch { expected: polys.len(), got: n });
    }
    let det = ratfunc_det(g);
    let det_ok = !det.is_zero();
    let mut cert = if det_ok {
        best(polys)
    } else {
        IndependenceCertificate {
            verdict: Verdict::CriterionFails,
            over: Field::SubLinearOrder,
            witness: Some(Witness::ZeroDeterminant),
            determinant: None,
            trace: Vec::new(),
        }
    };
    cert.trace.insert(0, hyp("det g nonzero", det_ok));
    cert.determinant = Some(det);
    Ok(cert)
}

/// `φ, e^{P_1}, …, e^{P_r}` over `ℂ`, transformed by a constant matrix `A`
/// of size `r + 1`.
pub fn augmented_independence(
    phi: &RatFunc,
    polys: &[Poly],
    a: &[Vec<GaussianRational>],
) -> Result<IndependenceCertificate> {
    if phi.is_constant() {
        return Err(Error::ConstantPhi);
    }
    let n = check_square(a)?;
    if n != polys.len() + 1 {
        return Err(Error::DimensionMismatch { expected: polys.len() + 1, got: n });
    }
    let det = gaussian_det(a);
    let nonconstant = polys.iter().position(Poly::is_constant);
    let difference = constant_difference(polys);
    let (distinct, _) = degrees_distinct_positive(polys);
    let trace = vec![
        hyp("phi nonconstant", true),
        hyp("every exponent nonconstant", nonconstant.is_none()),
        hyp("pairwise differences nonconstant", difference.is_none()),
        hyp("det A nonzero", !det.is_zero()),
        hyp("degrees pairwise distinct", distinct),
    ];
    let witness = if let Some(index) = nonconstant {
        Some(Witness::ConstantExponent { index: index + 1 })
    } else if difference.is_some() {
        difference
    } else if det.is_zero() {
        Some(Witness::ZeroDeterminant)
    } else {
        None
    };
    let verdict = match (&witness, distinct) {
        (Some(_), _) => Verdict::CriterionFails,
        (None, true) => Verdict::AlgebraicallyIndependent,
        (None, false) => Verdict::LinearlyIndependent,
    };
    Ok(IndependenceCertificate {
        verdict,
        over: Field::Complex,
        witness,
        determinant: Some(RatFunc::constant(det)),
        trace,
    })
}

/// `W(f₁, …, f_r) = e^{ΣP_j}·det M`, `M_{kj}` the rational factor of `f_j^{(k)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wronskian {
    pub nonzero: bool,
    pub rat_part: RatFunc,
    pub exp_part: Poly,
}

/// A nonzero Wronskian proves linear independence over `ℂ`.
pub fn wronskian_over_c(fam: &GermFamily) -> Result<Wronskian> {
    let germs = fam.germs()?;
    let r = germs.len();
    let mut rows: Vec<Vec<RatFunc>> = vec![germs.iter().map(|g| g.rat.clone()).collect()];
    for k in 1..r {
        let next = germs
            .iter()
            .zip(&rows[k - 1])
            .map(|(g, m)| m.derivative() + m * &RatFunc::from_poly(g.exp.derivative()))
            .collect();
        rows.push(next);
    }
    let rat_part = ratfunc_det(&rows);
    let exp_part = germs.iter().fold(Poly::zero(), |acc, g| &acc + &g.exp);
    Ok(Wronskian { nonzero: !rat_part.is_zero(), rat_part, exp_part })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::germ::germ_monomial;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn rf(c: &[i64]) -> RatFunc {
        RatFunc::from_poly(p(c))
    }

    fn identity(n: usize) -> Vec<Vec<GaussianRational>> {
        (0..n).map(|i| (0..n).map(|j| GaussianRational::from_int((i == j) as i64)).collect()).collect()
    }

    #[test]
    fn linear() {
        assert_eq!(linear_independence(&[p(&[0, -1]), p(&[0, 1])]).verdict, Verdict::LinearlyIndependent);
        let c = linear_independence(&[p(&[0, 1]), p(&[1, 1])]);
        assert_eq!(c.verdict, Verdict::CriterionFails);
        assert_eq!(
            c.witness,
            Some(Witness::ConstantDifference { j: 1, k: 2, difference: GaussianRational::from_int(-1) })
        );
        let c = linear_independence(&[p(&[0, 1]), p(&[0, 0, 1]), p(&[0, 0, 0, 1])]);
        assert_eq!(c.verdict, Verdict::LinearlyIndependent);
    }

    #[test]
    fn witness_is_a_real_dependence() {
        // e^{z+1} = e·e^{z}: rational parts agree, exponents differ by the witness
        let fam = GermFamily::parse_exprs(&["exp(z)", "exp(z+1)"]).unwrap();
        let polys: Vec<Poly> = fam.germs().unwrap().iter().map(|g| g.exp.clone()).collect();
        let Some(Witness::ConstantDifference { j, k, difference }) = linear_independence(&polys).witness else {
            panic!("expected a witness");
        };
        let mut a = vec![0i64; 2];
        a[j - 1] = 1;
        a[k - 1] = -1;
        let q = germ_monomial(&fam, &a).unwrap();
        assert!(q.rat.is_one());
        assert_eq!(q.exp, Poly::constant(difference));
    }

    #[test]
    fn algebraic() {
        let c = algebraic_independence(&[p(&[0, 1]), p(&[0, 0, 1])]);
        assert_eq!(c.verdict, Verdict::AlgebraicallyIndependent);
        let c = algebraic_independence(&[p(&[0, -1]), p(&[0, 1])]);
        assert_eq!(c.verdict, Verdict::CriterionFails);
        assert_eq!(c.witness, Some(Witness::Degrees(vec![1, 1])));
        assert_eq!(algebraic_independence(&[p(&[0, 3])]).verdict, Verdict::AlgebraicallyIndependent);
        let c = algebraic_independence(&[p(&[5]), p(&[0, 1])]);
        assert_eq!(c.witness, Some(Witness::Degrees(vec![0, 1])));
    }

    #[test]
    fn transformed() {
        let polys = [p(&[0, 1]), p(&[0, 0, 1])];
        let g = vec![vec![rf(&[1]), rf(&[1])], vec![rf(&[0]), rf(&[0, 1])]];
        let c = transformed_independence(&g, &polys).unwrap();
        assert_eq!(c.verdict, Verdict::AlgebraicallyIndependent);
        assert_eq!(c.determinant, Some(RatFunc::z()));

        let id = vec![vec![rf(&[1]), rf(&[0])], vec![rf(&[0]), rf(&[1])]];
        for polys in [vec![p(&[0, 1]), p(&[0, 0, 1])], vec![p(&[0, -1]), p(&[0, 1])], vec![p(&[0, 1]), p(&[1, 1])]] {
            let c = transformed_independence(&id, &polys).unwrap();
            let plain = best(&polys);
            assert_eq!((c.verdict, c.witness), (plain.verdict, plain.witness));
        }

        let singular = vec![vec![rf(&[1]), rf(&[1])], vec![rf(&[1]), rf(&[1])]];
        let c = transformed_independence(&singular, &polys).unwrap();
        assert_eq!(c.verdict, Verdict::CriterionFails);
        assert_eq!(c.witness, Some(Witness::ZeroDeterminant));

        let ragged = vec![vec![rf(&[1]), rf(&[1])], vec![rf(&[1])]];
        assert_eq!(transformed_independence(&ragged, &polys), Err(Error::NonSquare { rows: 2, cols: 1 }));
    }

    #[test]
    fn augmented() {
        let z = RatFunc::z();
        let c = augmented_independence(&z, &[p(&[0, 1])], &identity(2)).unwrap();
        assert_eq!((c.verdict, c.over), (Verdict::AlgebraicallyIndependent, Field::Complex));
        let c = augmented_independence(&z, &[p(&[0, 1]), p(&[0, 0, 1])], &identity(3)).unwrap();
        assert_eq!(c.verdict, Verdict::AlgebraicallyIndependent);
        let c = augmented_independence(&z, &[p(&[0, 1]), p(&[0, 2])], &identity(3)).unwrap();
        assert_eq!(c.verdict, Verdict::LinearlyIndependent);

        let mut a = identity(2);
        a[1] = a[0].clone();
        let c = augmented_independence(&z, &[p(&[0, 1])], &a).unwrap();
        assert_eq!(c.verdict, Verdict::CriterionFails);
        assert_eq!(c.witness, Some(Witness::ZeroDeterminant));

        assert_eq!(augmented_independence(&rf(&[3]), &[p(&[0, 1])], &identity(2)), Err(Error::ConstantPhi));
        let c = augmented_independence(&z, &[p(&[2])], &identity(2)).unwrap();
        assert_eq!(c.witness, Some(Witness::ConstantExponent { index: 1 }));
    }

    #[test]
    fn wronskians() {
        let w = wronskian_over_c(&GermFamily::parse_exprs(&["exp(z)", "exp(-z)"]).unwrap()).unwrap();
        assert_eq!(w.rat_part, RatFunc::constant(GaussianRational::from_int(-2)));
        assert!(w.exp_part.is_zero());
        let w = wronskian_over_c(&GermFamily::parse_exprs(&["exp(z)", "2*exp(z)"]).unwrap()).unwrap();
        assert!(!w.nonzero);
        let w = wronskian_over_c(&GermFamily::parse_exprs(&["z", "exp(z)"]).unwrap()).unwrap();
        assert_eq!(w.rat_part, rf(&[-1, 1]));
        assert!(w.nonzero);
    }
}
