//! The structure theorems for `F[H]`, each condition computed on its own
//! path so that disagreement exposes a bug.
//!
//! In case III, with `x₁` the positive order after sorting:
//! 1. `I_H = (0)`;
//! 2. `F[H]` is minimally generated by `r` monomials;
//! 3. exactly one positive order, dividing every negative order;
//! 4. `F[H] = F[x₁, x₁^{m_j}x_j, x_k]` with `m_j = −ℓ_j/ℓ₁`;
//! 5. `F[H̄] = F[x₁, (x₁^{m_j}x_j)^{±1}, x_k^{±1}]`.
//!
//! Outside case II: `F[H] = F[x₁, …, x_r]` iff `I_H = (0)` and some
//! `L_t ≥ N_t`.

use num_bigint::BigInt;

use crate::cancel::CancelToken;
use crate::error::{Error, Result};
use crate::exactalg::lattice_hnf;
use crate::semigroup::{
    classify, dot, hilbert_basis, laurent_generators, support_census, Case, CaseReport, HilbertBasis,
    SupportCensus, Variant,
};

use super::{monomial_map, toric_ideal, ToricIdeal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thm22Report {
    pub case: CaseReport,
    /// Conditions (1)–(5) in order.
    pub conditions: [bool; 5],
    pub generators: HilbertBasis,
    pub toric: ToricIdeal,
    /// `m_j = −ℓ_j/ℓ₁` for the negative indices (original order), when all
    /// are integers and there is a single positive order.
    pub multipliers: Option<Vec<(usize, i64)>>,
}

impl Thm22Report {
    pub fn agree(&self) -> bool {
        self.conditions.iter().all(|&c| c == self.conditions[0])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thm23Report {
    pub case: CaseReport,
    /// `F[H] = F[x₁, …, x_r]`
    pub polynomial_ring: bool,
    /// `I_H = (0)` and some `L_t ≥ N_t`
    pub census_condition: bool,
    pub toric_zero: bool,
    pub census: SupportCensus,
    /// Smallest `t` with `L_t ≥ N_t`.
    pub witness_t: Option<usize>,
}

impl Thm23Report {
    pub fn agree(&self) -> bool {
        self.polynomial_ring == self.census_condition
    }
}

fn unit(r: usize, k: usize) -> Vec<i64> {
    let mut v = vec![0; r];
    v[k] = 1;
    v
}

/// The generator list of condition (4) and the unit list of condition (5),
/// or `None` when the formula does not apply (several positive orders or a
/// non-integral `m_j`).
fn formula_vectors(ell: &[i64], case: &CaseReport) -> Option<(usize, Vec<(usize, i64)>, Vec<Vec<i64>>)> {
    if case.p != 1 {
        return None;
    }
    let r = ell.len();
    let first = case.permutation[0];
    let l1 = ell[first];
    let negatives = &case.permutation[1..case.q];
    let mut multipliers = Vec::new();
    let mut units = Vec::new();
    for &j in negatives {
        if ell[j] % l1 != 0 {
            return None;
        }
        let m = -ell[j] / l1;
        multipliers.push((j, m));
        let mut v = unit(r, j);
        v[first] = m;
        units.push(v);
    }
    for &k in &case.permutation[case.q..] {
        units.push(unit(r, k));
    }
    Some((first, multipliers, units))
}

pub fn check_thm22(ell: &[i64], token: &CancelToken) -> Result<Thm22Report> {
    let case = classify(ell);
    if case.case != Case::III {
        return Err(Error::WrongCase { actual: case.case.to_string(), required: "III".into() });
    }
    let r = ell.len();
    let map = monomial_map(ell, Variant::N);
    let toric = toric_ideal(&map, token)?;
    let generators = hilbert_basis(ell);

    let c1 = toric.is_zero();
    let c2 = generators.len() == r;

    let first = case.permutation[0];
    let c3 = case.p == 1
        && case.q >= 2
        && case.permutation[1..case.q].iter().all(|&j| ell[j] < 0 && ell[j] % ell[first] == 0)
        && case.permutation[case.q..].iter().all(|&k| ell[k] == 0);

    let formula = formula_vectors(ell, &case);
    let c4 = formula.as_ref().is_some_and(|(first, _, units)| {
        let mut expected: Vec<Vec<i64>> = vec![unit(r, *first)];
        expected.extend(units.iter().cloned());
        let mut a = expected.clone();
        let mut b = generators.generators.clone();
        a.sort();
        b.sort();
        a == b
    });

    let c5 = formula.as_ref().is_some_and(|(first, _, units)| {
        let lg = laurent_generators(ell);
        let Some(mg) = lg.monoid_gen else { return false };
        let d = dot(ell, &mg);
        let big = |vs: &[Vec<i64>]| -> Vec<Vec<BigInt>> {
            vs.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect()
        };
        units.iter().all(|u| dot(ell, u) == 0)
            && lattice_hnf(r, &big(units)) == lattice_hnf(r, &big(&lg.units))
            && dot(ell, &unit(r, *first)) == d
    });

    Ok(Thm22Report {
        multipliers: formula.map(|(_, m, _)| m),
        case,
        conditions: [c1, c2, c3, c4, c5],
        generators,
        toric,
    })
}

pub fn check_thm23(ell: &[i64], token: &CancelToken) -> Result<Thm23Report> {
    let case = classify(ell);
    if case.case == Case::II {
        return Err(Error::WrongCase { actual: "II".into(), required: "I or III".into() });
    }
    let census = support_census(ell)?;
    let r = ell.len();
    let generators = hilbert_basis(ell);
    let polynomial_ring = generators.len() == r && (0..r).all(|k| generators.contains(&unit(r, k)));
    let toric = toric_ideal(&monomial_map(ell, Variant::N), token)?;
    let witness_t = census.witness();
    let toric_zero = toric.is_zero();
    Ok(Thm23Report {
        case,
        polynomial_ring,
        census_condition: toric_zero && witness_t.is_some(),
        toric_zero,
        census,
        witness_t,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tok() -> CancelToken {
        CancelToken::new()
    }

    #[test]
    fn thm22_examples() {
        let rep = check_thm22(&[1, -2, 0], &tok()).unwrap();
        assert_eq!(rep.conditions, [true; 5]);
        assert_eq!(rep.multipliers, Some(vec![(1, 2)]));

        let rep = check_thm22(&[2, -3, 0], &tok()).unwrap();
        assert_eq!(rep.conditions, [false; 5]);
        assert!(rep.generators.len() > 3);

        let rep = check_thm22(&[1, -1], &tok()).unwrap();
        assert_eq!(rep.conditions, [true; 5]);

        let rep = check_thm22(&[0, -6, 3, -3], &tok()).unwrap();
        assert_eq!(rep.conditions, [true; 5]);

        let rep = check_thm22(&[1, 1, -1], &tok()).unwrap();
        assert_eq!(rep.conditions, [false; 5]);

        assert!(matches!(check_thm22(&[1, 1], &tok()), Err(Error::WrongCase { .. })));
    }

    #[test]
    fn thm23_examples() {
        let rep = check_thm23(&[1, 1, 0], &tok()).unwrap();
        assert!(rep.polynomial_ring && rep.census_condition);

        let rep = check_thm23(&[1, -2, 0], &tok()).unwrap();
        assert!(!rep.polynomial_ring && !rep.census_condition);
        assert!(rep.toric_zero);

        let rep = check_thm23(&[1, -1], &tok()).unwrap();
        assert!(!rep.polynomial_ring && !rep.census_condition);

        assert!(matches!(check_thm23(&[-1, 0], &tok()), Err(Error::WrongCase { .. })));
        assert!(matches!(check_thm23(&[1], &tok()), Err(Error::DimensionTooSmall { .. })));
    }
}
