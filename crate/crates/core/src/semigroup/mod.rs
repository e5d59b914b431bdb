//! The semigroups `H = {a ∈ ℕ^r : ℓ·a ≥ 0}`, `H̄ = {a ∈ ℤ^r : ℓ·a ≥ 0}` and
//! `H̃ = {(b, c) ∈ ℕ^{2r} : ℓ·(b − c) ≥ 0}`.

mod census;
mod decompose;
pub(crate) mod hilbert;

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactalg::zkernel_i64;

pub use census::{binomial, support_census, SupportCensus};
pub use decompose::decompose;
pub use hilbert::{hilbert_basis, hilbert_basis_tilde, HilbertBasis};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `H ⊂ ℕ^r`
    N,
    /// `H̄ ⊂ ℤ^r`
    Z,
    /// `H̃ ⊂ ℕ^{2r}`
    Tilde,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupSpec {
    pub ell: Vec<i64>,
    pub variant: Variant,
}

impl SemigroupSpec {
    pub fn new(ell: &[i64], variant: Variant) -> Self {
        Self { ell: ell.to_vec(), variant }
    }

    /// Length of the vectors living in the semigroup.
    pub fn ambient_dim(&self) -> usize {
        match self.variant {
            Variant::N | Variant::Z => self.ell.len(),
            Variant::Tilde => 2 * self.ell.len(),
        }
    }

    /// The inequality vector: `ℓ`, or `(ℓ, −ℓ)` for `H̃`.
    pub fn weights(&self) -> Vec<i64> {
        match self.variant {
            Variant::N | Variant::Z => self.ell.clone(),
            Variant::Tilde => tilde_weights(&self.ell),
        }
    }

    pub fn hilbert_basis(&self) -> Result<HilbertBasis> {
        match self.variant {
            Variant::N => Ok(hilbert_basis(&self.ell)),
            Variant::Tilde => Ok(hilbert_basis_tilde(&self.ell)),
            Variant::Z => Err(Error::WrongCase {
                actual: "Z".into(),
                required: "N or Tilde (use laurent_generators for H̄)".into(),
            }),
        }
    }
}

pub(crate) fn tilde_weights(ell: &[i64]) -> Vec<i64> {
    ell.iter().copied().chain(ell.iter().map(|l| -l)).collect()
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Case {
    /// no negative orders
    I,
    /// no positive orders, at least one negative
    II,
    /// both signs present
    III,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::I => "I",
            Case::II => "II",
            Case::III => "III",
        })
    }
}

/// `permutation[k]` is the original (0-based) index placed at position `k`:
/// positives first, then negatives, then zeros, each in original order.
/// `p` counts positives and `q = p + #negatives`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseReport {
    pub case: Case,
    pub p: usize,
    pub q: usize,
    pub permutation: Vec<usize>,
}

impl CaseReport {
    pub fn sorted_ell(&self, ell: &[i64]) -> Vec<i64> {
        self.permutation.iter().map(|&k| ell[k]).collect()
    }
}

pub fn classify(ell: &[i64]) -> CaseReport {
    let idx = |pred: fn(i64) -> bool| -> Vec<usize> {
        (0..ell.len()).filter(|&k| pred(ell[k])).collect()
    };
    let pos = idx(|l| l > 0);
    let neg = idx(|l| l < 0);
    let zero = idx(|l| l == 0);
    let case = match (pos.is_empty(), neg.is_empty()) {
        (_, true) => Case::I,
        (true, false) => Case::II,
        (false, false) => Case::III,
    };
    let (p, q) = (pos.len(), pos.len() + neg.len());
    CaseReport { case, p, q, permutation: [pos, neg, zero].concat() }
}

pub fn contains(spec: &SemigroupSpec, a: &[i64]) -> Result<bool> {
    let n = spec.ambient_dim();
    if a.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: a.len() });
    }
    if spec.variant != Variant::Z && a.iter().any(|&x| x < 0) {
        return Err(Error::NegativeEntry);
    }
    Ok(dot(&spec.weights(), a) >= 0)
}

/// `H̄ = U + ℕ·monoid_gen`, with `U = {a : ℓ·a = 0}` given by a lattice basis
/// and `ℓ·monoid_gen = gcd(ℓ)`. Without nonzero orders `monoid_gen` is absent
/// and `H̄ = U = ℤ^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentGenerators {
    pub units: Vec<Vec<i64>>,
    pub monoid_gen: Option<Vec<i64>>,
}

pub fn laurent_generators(ell: &[i64]) -> LaurentGenerators {
    let r = ell.len();
    let units = zkernel_i64(r, &[ell.to_vec()]);
    let d = ell.iter().fold(0i64, |g, &l| g.gcd(&l));
    if d == 0 {
        return LaurentGenerators { units, monoid_gen: None };
    }
    let unit_vec = |k: usize, s: i64| {
        let mut v = vec![0; r];
        v[k] = s;
        v
    };
    let monoid_gen = if let Some(k) = ell.iter().position(|&l| l == d) {
        unit_vec(k, 1)
    } else if let Some(k) = ell.iter().position(|&l| l == -d) {
        unit_vec(k, -1)
    } else {
        // extended Euclid across the entries
        let mut coeffs = vec![0i64; r];
        let mut g = 0i64;
        for (k, &l) in ell.iter().enumerate() {
            if l == 0 {
                continue;
            }
            let e = g.extended_gcd(&l);
            for c in coeffs.iter_mut() {
                *c *= e.x;
            }
            coeffs[k] = e.y;
            g = e.gcd;
        }
        if g < 0 {
            coeffs.iter_mut().for_each(|c| *c = -*c);
        }
        coeffs
    };
    debug_assert_eq!(dot(ell, &monoid_gen), d);
    LaurentGenerators { units, monoid_gen: Some(monoid_gen) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{in_lattice, lattice_hnf};
    use num_bigint::BigInt;

    #[test]
    fn classification() {
        let c = classify(&[1, -2, 0]);
        assert_eq!((c.case, c.p, c.q), (Case::III, 1, 2));
        let c = classify(&[0, 0]);
        assert_eq!((c.case, c.p), (Case::I, 0));
        let c = classify(&[-1, -3]);
        assert_eq!((c.case, c.q), (Case::II, 2));
        let c = classify(&[0, -1, 3, 2]);
        assert_eq!(c.permutation, vec![2, 3, 1, 0]);
        assert_eq!(c.sorted_ell(&[0, -1, 3, 2]), vec![3, 2, -1, 0]);
    }

    #[test]
    fn membership() {
        let n = SemigroupSpec::new(&[1, -2, 0], Variant::N);
        assert!(contains(&n, &[2, 1, 0]).unwrap());
        assert!(contains(&n, &[0, 0, 0]).unwrap());
        let z = SemigroupSpec::new(&[1, -2, 0], Variant::Z);
        assert!(!contains(&z, &[1, 1, -3]).unwrap());
        assert_eq!(contains(&n, &[1, -1, 0]), Err(Error::NegativeEntry));
        assert_eq!(
            contains(&n, &[1, 0]),
            Err(Error::DimensionMismatch { expected: 3, got: 2 })
        );
        let t = SemigroupSpec::new(&[1, -2, 0], Variant::Tilde);
        assert!(contains(&t, &[0, 0, 0, 0, 1, 0]).unwrap());
        assert!(!contains(&t, &[0, 0, 0, 1, 0, 0]).unwrap());
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn laurent() {
        let lg = laurent_generators(&[1, -2, 0]);
        let expect = lattice_hnf(3, &[big(&[2, 1, 0]), big(&[0, 0, 1])]);
        let got: Vec<_> = lg.units.iter().map(|v| big(v)).collect();
        assert_eq!(lattice_hnf(3, &got), expect);
        assert_eq!(lg.monoid_gen, Some(vec![1, 0, 0]));

        let lg = laurent_generators(&[0, 0]);
        assert_eq!(lg.units.len(), 2);
        assert_eq!(lg.monoid_gen, None);

        let lg = laurent_generators(&[1, 1, -1, -1]);
        assert_eq!(lg.units.len(), 3);
        assert_eq!(dot(&[1, 1, -1, -1], lg.monoid_gen.as_ref().unwrap()), 1);

        for ell in [[6, 10, -15], [-4, 6, 0], [0, -3, -3], [4, 6, 9]] {
            let lg = laurent_generators(&ell);
            let d = ell.iter().fold(0i64, |g, &l| g.gcd(&l));
            let m = lg.monoid_gen.unwrap();
            assert_eq!(dot(&ell, &m), d);
            let basis = lattice_hnf(3, &lg.units.iter().map(|v| big(v)).collect::<Vec<_>>());
            for b in &lg.units {
                assert_eq!(dot(&ell, b), 0);
            }
            // every small H̄ element is units + k·monoid_gen
            for a0 in -3..=3i64 {
                for a1 in -3..=3i64 {
                    for a2 in -3..=3i64 {
                        let a = [a0, a1, a2];
                        let s = dot(&ell, &a);
                        if s < 0 {
                            continue;
                        }
                        let k = s / d;
                        let rest: Vec<i64> = (0..3).map(|j| a[j] - k * m[j]).collect();
                        assert!(in_lattice(&basis, &big(&rest)));
                    }
                }
            }
        }
    }
}
