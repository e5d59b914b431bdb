//! Writing a semigroup element as a nonnegative combination of generators.

use std::collections::HashSet;

use crate::error::{Error, Result};

use super::{contains, dot, HilbertBasis, SemigroupSpec};

/// Multiplicities `c` with `Σ c_k·g_k = a` over the given basis.
///
/// Depth-first search that only steps to remainders still inside the
/// semigroup and remembers remainders already known to fail.
pub fn decompose(spec: &SemigroupSpec, a: &[i64], basis: &HilbertBasis) -> Result<Vec<u64>> {
    if !contains(spec, a)? {
        return Err(Error::NotInSemigroup);
    }
    let w = spec.weights();
    let mut counts = vec![0u64; basis.len()];
    let mut failed = HashSet::new();
    let mut rest = a.to_vec();
    if search(&w, &basis.generators, &mut rest, basis.len(), &mut counts, &mut failed) {
        Ok(counts)
    } else {
        Err(Error::NotRepresentable)
    }
}

/// Generators are tried from index `limit - 1` downwards, so each multiset
/// is visited once.
fn search(
    w: &[i64],
    gens: &[Vec<i64>],
    rest: &mut Vec<i64>,
    limit: usize,
    counts: &mut [u64],
    failed: &mut HashSet<(Vec<i64>, usize)>,
) -> bool {
    if rest.iter().all(|&x| x == 0) {
        return true;
    }
    if failed.contains(&(rest.clone(), limit)) {
        return false;
    }
    let rest_weight = dot(w, rest);
    for k in (0..limit).rev() {
        let g = &gens[k];
        if g.iter().all(|&x| x == 0) || g.iter().zip(rest.iter()).any(|(gi, ri)| gi > ri) {
            continue;
        }
        if rest_weight - dot(w, g) < 0 {
            continue;
        }
        for (r, gi) in rest.iter_mut().zip(g) {
            *r -= gi;
        }
        counts[k] += 1;
        if search(w, gens, rest, k + 1, counts, failed) {
            return true;
        }
        counts[k] -= 1;
        for (r, gi) in rest.iter_mut().zip(g) {
            *r += gi;
        }
    }
    failed.insert((rest.clone(), limit));
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{hilbert_basis, Variant};

    fn spec(ell: &[i64]) -> SemigroupSpec {
        SemigroupSpec::new(ell, Variant::N)
    }

    #[test]
    fn examples() {
        let s = spec(&[1, -2, 0]);
        let hb = hilbert_basis(&[1, -2, 0]);
        // order: (1,0,0), (0,0,1), (2,1,0)
        assert_eq!(decompose(&s, &[3, 1, 2], &hb).unwrap(), vec![1, 2, 1]);
        assert_eq!(decompose(&s, &[0, 0, 0], &hb).unwrap(), vec![0, 0, 0]);
        assert_eq!(decompose(&s, &[2, 1, 0], &hb).unwrap(), vec![0, 0, 1]);
        assert_eq!(decompose(&s, &[0, 1, 0], &hb), Err(Error::NotInSemigroup));
    }

    #[test]
    fn missing_generator_is_detected() {
        let s = spec(&[2, 3, -5]);
        let hb = hilbert_basis(&[2, 3, -5]);
        for (k, g) in hb.generators.iter().enumerate() {
            let mut smaller = hb.clone();
            smaller.generators.remove(k);
            assert_eq!(decompose(&s, g, &smaller), Err(Error::NotRepresentable));
        }
    }
}
