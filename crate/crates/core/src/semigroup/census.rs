//! Support census: `L_t` counts the size-`t` variable sets that occur as
//! supports of monomials in `F[H]`; `N_t = C(r,t) − C(r−2,t−1) + 1`.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportCensus {
    /// `l[t-1] = L_t` for `1 ≤ t ≤ r−1`
    pub l: Vec<u64>,
    /// `n[t-1] = N_t`
    pub n: Vec<u64>,
}

impl SupportCensus {
    /// Smallest `t` with `L_t ≥ N_t`.
    pub fn witness(&self) -> Option<usize> {
        self.l.iter().zip(&self.n).position(|(l, n)| l >= n).map(|k| k + 1)
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// A support `S` is realizable iff it meets a positive order or consists of
/// zero orders only (`1_S + M·e_j` with `ℓ_j > 0` and `M` large covers the
/// first kind). The unrealizable ones are the subsets of the non-positive
/// indices that contain a negative one.
pub fn support_census(ell: &[i64]) -> Result<SupportCensus> {
    let r = ell.len() as u64;
    if r < 2 {
        return Err(Error::DimensionTooSmall { min: 2, got: ell.len() });
    }
    let neg = ell.iter().filter(|&&l| l < 0).count() as u64;
    let zero = ell.iter().filter(|&&l| l == 0).count() as u64;
    let l = (1..r)
        .map(|t| binomial(r, t) - (binomial(neg + zero, t) - binomial(zero, t)))
        .collect();
    let n = (1..r).map(|t| binomial(r, t) + 1 - binomial(r - 2, t - 1)).collect();
    Ok(SupportCensus { l, n })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c = support_census(&[1, -2, 0]).unwrap();
        assert_eq!(c.l, vec![2, 2]);
        assert_eq!(support_census(&[1, 1, -1, -1]).unwrap().n[1], 5);
        let c = support_census(&[2, 1, 3, 4]).unwrap();
        assert_eq!(c.l, vec![4, 6, 4]);
        assert_eq!(
            support_census(&[1]),
            Err(Error::DimensionTooSmall { min: 2, got: 1 })
        );
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 0), 1);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(0, 0), 1);
    }
}
