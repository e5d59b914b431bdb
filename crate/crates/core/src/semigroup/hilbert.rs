//! Hilbert bases of `H = {a ∈ ℕ^n : w·a ≥ 0}`.
//!
//! `a ↦ (a, w·a)` identifies `H` with the solution monoid of
//! `Σ_{w_j>0} w_j a_j = Σ_{w_k<0} |w_k| a_k + s` over `ℕ^{n+1}`, whose
//! irreducibles are its minimal nonzero solutions. A minimal solution of
//! `α·x = β·y` has `Σx ≤ max β` and `Σy ≤ max α` (Lambert's bound), so
//! the candidates are enumerated inside that box, sorted by degree, and
//! kept when no smaller kept element lies below them.

use super::{dot, tilde_weights};

/// Minimal generating set, graded then lexicographically descending
/// (`e₁` before `e₂`, degree one before degree two).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertBasis {
    pub generators: Vec<Vec<i64>>,
}

impl HilbertBasis {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.generators.first().map_or(0, Vec::len)
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.generators.iter().any(|g| g == v)
    }

    /// Generators of total degree at most `d`.
    pub fn up_to_degree(&self, d: i64) -> Vec<Vec<i64>> {
        self.generators.iter().filter(|g| g.iter().sum::<i64>() <= d).cloned().collect()
    }
}

pub(crate) fn canonical_sort(gens: &mut [Vec<i64>]) {
    gens.sort_by(|a, b| {
        let (da, db): (i64, i64) = (a.iter().sum(), b.iter().sum());
        da.cmp(&db).then_with(|| b.cmp(a))
    });
}

/// Hilbert basis of `H` for the order vector `ℓ`.
pub fn hilbert_basis(ell: &[i64]) -> HilbertBasis {
    HilbertBasis { generators: cone_basis(ell) }
}

/// Hilbert basis of `H̃ ⊂ ℕ^{2r}`, the cone of `(ℓ, −ℓ)`.
pub fn hilbert_basis_tilde(ell: &[i64]) -> HilbertBasis {
    HilbertBasis { generators: cone_basis(&tilde_weights(ell)) }
}

fn cone_basis(w: &[i64]) -> Vec<Vec<i64>> {
    let n = w.len();
    let pos: Vec<usize> = (0..n).filter(|&k| w[k] > 0).collect();
    let neg: Vec<usize> = (0..n).filter(|&k| w[k] < 0).collect();
    let unit = |k: usize| {
        let mut v = vec![0; n];
        v[k] = 1;
        v
    };
    let mut out: Vec<Vec<i64>> = (0..n).filter(|&k| w[k] == 0).map(unit).collect();

    let max_alpha = pos.iter().map(|&k| w[k]).max().unwrap_or(0);
    let max_beta = neg.iter().map(|&k| -w[k]).max().unwrap_or(0).max(1);

    // (vector, degree of (a, s))
    let mut candidates: Vec<(Vec<i64>, i64)> = Vec::new();
    let mut x = vec![0i64; pos.len()];
    for_each_bounded(&mut x, 0, max_beta, &mut |x| {
        if x.iter().all(|&c| c == 0) {
            return;
        }
        let lhs: i64 = x.iter().zip(&pos).map(|(c, &k)| c * w[k]).sum();
        let mut y = vec![0i64; neg.len()];
        for_each_bounded(&mut y, 0, max_alpha, &mut |y| {
            let rhs: i64 = y.iter().zip(&neg).map(|(c, &k)| c * -w[k]).sum();
            let s = lhs - rhs;
            let ysum: i64 = y.iter().sum();
            if s < 0 || ysum + s > max_alpha {
                return;
            }
            let mut a = vec![0i64; n];
            for (c, &k) in x.iter().zip(&pos) {
                a[k] = *c;
            }
            for (c, &k) in y.iter().zip(&neg) {
                a[k] = *c;
            }
            let deg = x.iter().sum::<i64>() + ysum + s;
            candidates.push((a, deg));
        });
    });
    candidates.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));

    let mut minimal: Vec<(Vec<i64>, i64)> = Vec::new();
    for (a, _) in candidates {
        let s = dot(w, &a);
        let dominated = minimal
            .iter()
            .any(|(g, gs)| *gs <= s && g.iter().zip(&a).all(|(gi, ai)| gi <= ai));
        if !dominated {
            minimal.push((a, s));
        }
    }
    out.extend(minimal.into_iter().map(|(a, _)| a));
    canonical_sort(&mut out);
    out
}

/// Visits every vector in `ℕ^len` with entry sum at most `budget`.
fn for_each_bounded(v: &mut Vec<i64>, k: usize, budget: i64, f: &mut dyn FnMut(&[i64])) {
    if k == v.len() {
        f(v);
        return;
    }
    for c in 0..=budget {
        v[k] = c;
        for_each_bounded(v, k + 1, budget - c, f);
    }
    v[k] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hb(ell: &[i64]) -> Vec<Vec<i64>> {
        hilbert_basis(ell).generators
    }

    #[test]
    fn examples() {
        assert_eq!(hb(&[1, -2, 0]), vec![vec![1, 0, 0], vec![0, 0, 1], vec![2, 1, 0]]);
        assert_eq!(
            hb(&[1, 1, -1, -1]),
            vec![
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0],
                vec![1, 0, 1, 0],
                vec![1, 0, 0, 1],
                vec![0, 1, 1, 0],
                vec![0, 1, 0, 1],
            ]
        );
        assert!(hb(&[2, 3, -5]).contains(&vec![1, 1, 1]));
    }

    #[test]
    fn case_formulas() {
        assert_eq!(hb(&[3, 0, 1]), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(hb(&[0, 0]), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(hb(&[-1, 0, -3, 0]), vec![vec![0, 1, 0, 0], vec![0, 0, 0, 1]]);
        assert!(hb(&[-2]).is_empty());
    }

    #[test]
    fn tilde() {
        let t = hilbert_basis_tilde(&[1, -2, 0]).generators;
        assert_eq!(t.len(), 9);
        let n = hb(&[1, -2, 0]);
        let first_block: Vec<Vec<i64>> = t
            .iter()
            .filter(|g| g[3..].iter().all(|&c| c == 0))
            .map(|g| g[..3].to_vec())
            .collect();
        assert_eq!(first_block, n);
        assert_eq!(hilbert_basis_tilde(&[1]).generators, vec![vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn two_positive_one_negative() {
        // 2a + 3b ≥ 5c
        let g = hb(&[2, 3, -5]);
        for v in &g {
            assert!(dot(&[2, 3, -5], v) >= 0);
        }
        assert!(g.contains(&vec![0, 2, 1]));
        assert!(g.contains(&vec![3, 0, 1]));
        assert!(!g.contains(&vec![2, 1, 1]));
    }
}
