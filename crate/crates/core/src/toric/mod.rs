//! Monomial maps `t_j ↦ x^{v_j}` onto `F[H]` (or `F[H̃]`), toric ideals,
//! and executable forms of the structure theorems for `F[H]`.

mod structure;
mod thm24;

use std::collections::BTreeMap;

use crate::cancel::CancelToken;
use crate::error::Result;
use crate::exactalg::zkernel_i64;
use crate::grobner::{lattice_ideal, Binomial, BinomialOrder, IdealBasis};
use crate::semigroup::{hilbert_basis, hilbert_basis_tilde, HilbertBasis, Variant};

pub use structure::{check_thm22, check_thm23, Thm22Report, Thm23Report};
pub use thm24::{thm24_presentation, Thm24Presentation};

/// `t_j ↦ x^{v_j}` with the `v_j` the Hilbert basis in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    pub generators: HilbertBasis,
    pub source_vars: Vec<String>,
    pub target_vars: Vec<String>,
}

impl MonomialMap {
    pub fn from_generators(generators: HilbertBasis, target_vars: Vec<String>) -> Self {
        let source_vars = generator_names(&generators.generators);
        Self { generators, source_vars, target_vars }
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// The `r × m` matrix whose columns are the generators.
    pub fn matrix_rows(&self) -> Vec<Vec<i64>> {
        let dim = self.target_vars.len();
        (0..dim).map(|i| self.generators.generators.iter().map(|g| g[i]).collect()).collect()
    }
}

pub fn x_names(r: usize) -> Vec<String> {
    (1..=r).map(|k| format!("x{k}")).collect()
}

pub fn xy_names(r: usize) -> Vec<String> {
    (1..=r).map(|k| format!("x{k}")).chain((1..=r).map(|k| format!("y{k}"))).collect()
}

pub fn monomial_map(ell: &[i64], variant: Variant) -> MonomialMap {
    let r = ell.len();
    match variant {
        Variant::Tilde => MonomialMap::from_generators(hilbert_basis_tilde(ell), xy_names(r)),
        Variant::N | Variant::Z => MonomialMap::from_generators(hilbert_basis(ell), x_names(r)),
    }
}

/// `t{j}` for a generator `e_j`, `t{jk}` for `e_j + e_k` (written `t{j}_{k}`
/// once indices reach 10); if any generator has another shape, all are
/// named by position, `t1 … tm`.
pub fn generator_names(gens: &[Vec<i64>]) -> Vec<String> {
    let support = |g: &Vec<i64>| -> Option<Vec<usize>> {
        if g.iter().any(|&c| c != 0 && c != 1) {
            return None;
        }
        let s: Vec<usize> = (0..g.len()).filter(|&k| g[k] == 1).map(|k| k + 1).collect();
        (1..=2).contains(&s.len()).then_some(s)
    };
    let supports: Option<Vec<Vec<usize>>> = gens.iter().map(support).collect();
    match supports {
        Some(s) => {
            let wide = s.iter().flatten().any(|&k| k >= 10);
            s.iter()
                .map(|idx| match idx.as_slice() {
                    [j] => format!("t{j}"),
                    [j, k] if wide => format!("t{j}_{k}"),
                    [j, k] => format!("t{j}{k}"),
                    _ => unreachable!("support has one or two entries"),
                })
                .collect()
        }
        None => (1..=gens.len()).map(|k| format!("t{k}")).collect(),
    }
}

/// The toric ideal together with the data it was computed from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricIdeal {
    /// Reduced Gröbner basis in the `t` variables.
    pub ideal: IdealBasis,
    /// The same basis as pure binomials, for fast monomial normal forms.
    pub binomials: Vec<Binomial>,
    pub order: BinomialOrder,
    /// `ℤ`-basis of `ker A`.
    pub kernel: Vec<Vec<i64>>,
}

impl ToricIdeal {
    pub fn is_zero(&self) -> bool {
        self.binomials.is_empty()
    }

    /// Whether `t^{u⁺} − t^{u⁻}` lies in the ideal.
    pub fn contains_binomial(&self, u: &[i64]) -> bool {
        let pos: Vec<u32> = u.iter().map(|&x| x.max(0) as u32).collect();
        let neg: Vec<u32> = u.iter().map(|&x| (-x).max(0) as u32).collect();
        crate::grobner::normal_form_monomial(&pos, &self.binomials)
            == crate::grobner::normal_form_monomial(&neg, &self.binomials)
    }
}

/// Differences `a − b` of monomials of total degree at most `max_degree`
/// with the same image, joined along a chain inside each fiber. These all
/// lie in `ker A` and seed the saturation close to its answer.
fn low_degree_relations(map: &MonomialMap, max_degree: usize) -> Vec<Vec<i64>> {
    let gens = &map.generators.generators;
    let m = gens.len();
    let mut out = Vec::new();
    // monomials as nondecreasing index lists, grouped by degree
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_degree {
        let next: Vec<Vec<usize>> = layer
            .iter()
            .flat_map(|mono| {
                let from = mono.last().copied().unwrap_or(0);
                (from..m).map(move |j| {
                    let mut v = mono.clone();
                    v.push(j);
                    v
                })
            })
            .collect();
        let mut fibers: BTreeMap<Vec<i64>, Vec<Vec<i64>>> = BTreeMap::new();
        for mono in &next {
            let mut image = vec![0i64; map.target_vars.len()];
            let mut exps = vec![0i64; m];
            for &j in mono {
                exps[j] += 1;
                image.iter_mut().zip(&gens[j]).for_each(|(x, y)| *x += y);
            }
            fibers.entry(image).or_default().push(exps);
        }
        for fiber in fibers.values() {
            for w in fiber.windows(2) {
                out.push(w[0].iter().zip(&w[1]).map(|(x, y)| x - y).collect());
            }
        }
        layer = next;
    }
    out
}

/// `ker Φ`: binomials of a `ℤ`-basis of `ker A`, saturated at `t₁⋯t_m`.
///
/// Every generator is a nonzero vector of `ℕ^r`, so its total degree is a
/// positive grading under which all kernel binomials are homogeneous.
pub fn toric_ideal(map: &MonomialMap, token: &CancelToken) -> Result<ToricIdeal> {
    let m = map.len();
    let weights: Vec<u64> = map.generators.generators.iter().map(|g| g.iter().sum::<i64>() as u64).collect();
    let order = BinomialOrder { weights: weights.clone(), last: None };
    let kernel = if m == 0 { Vec::new() } else { zkernel_i64(m, &map.matrix_rows()) };
    let extra = if kernel.is_empty() { Vec::new() } else { low_degree_relations(map, 3) };
    let binomials = lattice_ideal(&kernel, &extra, &weights, token)?;
    let ideal = IdealBasis::new(map.source_vars.clone(), binomials.iter().map(Binomial::to_mpoly).collect());
    Ok(ToricIdeal { ideal, binomials, order, kernel })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grobner::{ideal_equal, parse_mpoly};

    fn tok() -> CancelToken {
        CancelToken::new()
    }

    #[test]
    fn maps() {
        let m = monomial_map(&[1, -2, 0], Variant::N);
        assert_eq!(m.generators.generators, vec![vec![1, 0, 0], vec![0, 0, 1], vec![2, 1, 0]]);
        assert_eq!(m.source_vars, vec!["t1", "t2", "t3"]);
        assert_eq!(m.matrix_rows(), vec![vec![1, 0, 2], vec![0, 0, 1], vec![0, 1, 0]]);
        let m = monomial_map(&[1, 1], Variant::N);
        assert_eq!(m.matrix_rows(), vec![vec![1, 0], vec![0, 1]]);
        let m = monomial_map(&[1, 1, -1, -1], Variant::N);
        assert_eq!(m.source_vars, vec!["t1", "t2", "t13", "t14", "t23", "t24"]);
    }

    #[test]
    fn naming() {
        let mut g = vec![vec![0; 11]; 2];
        g[0][0] = 1;
        g[1][0] = 1;
        g[1][10] = 1;
        assert_eq!(generator_names(&g), vec!["t1", "t1_11"]);
    }

    #[test]
    fn toric_ideals() {
        let t = toric_ideal(&monomial_map(&[1, -2, 0], Variant::N), &tok()).unwrap();
        assert!(t.is_zero());

        let map = monomial_map(&[1, 1, -1, -1], Variant::N);
        let t = toric_ideal(&map, &tok()).unwrap();
        let v = &map.source_vars;
        let expect = IdealBasis::new(
            v.clone(),
            ["t1*t23 - t2*t13", "t1*t24 - t2*t14", "t13*t24 - t14*t23"]
                .iter()
                .map(|s| parse_mpoly(s, v).unwrap())
                .collect(),
        );
        assert!(ideal_equal(&t.ideal, &expect, &tok()).unwrap());
        assert!(t.contains_binomial(&[1, -1, -1, 0, 1, 0]));
        assert!(!t.contains_binomial(&[1, -1, 0, 0, 0, 0]));

        assert!(toric_ideal(&monomial_map(&[1], Variant::N), &tok()).unwrap().is_zero());
    }
}
