//! Closed-form presentation for orders `ℓ = (1^p, (−1)^{q−p}, 0^{r−q})`,
//! emitted straight from the formulas (no Gröbner computation).

use std::collections::BTreeSet;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exactalg::GaussianRational;
use crate::grobner::{IdealBasis, MPoly};
use crate::semigroup::{HilbertBasis, LaurentGenerators};

use super::generator_names;
use crate::semigroup::hilbert::canonical_sort;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thm24Presentation {
    pub ell: Vec<i64>,
    /// `x₁…x_p, x_{q+1}…x_r, x_j x_k` (`j ≤ p < k ≤ q`), canonically ordered.
    pub generators: HilbertBasis,
    /// `F[H̄]`: units `x_k^{±1}` (`k > q`) and `(x_j x_k)^{±1}`; the monoid
    /// part is `x₁, …, x_p`.
    pub laurent: LaurentGenerators,
    pub monoid_part: Vec<Vec<i64>>,
    /// `t_j t_{ik} − t_i t_{jk}` and `t_{jk} t_{im} − t_{jm} t_{ik}`.
    pub relations: IdealBasis,
}

pub fn thm24_presentation(p: usize, q: usize, r: usize) -> Result<Thm24Presentation> {
    if !(1 <= p && p < q && q <= r) {
        return Err(Error::BadIndices { p, q, r });
    }
    let unit = |k: usize| {
        let mut v = vec![0i64; r];
        v[k] = 1;
        v
    };
    let pair = |j: usize, k: usize| {
        let mut v = unit(j);
        v[k] = 1;
        v
    };
    let ell: Vec<i64> = (0..r).map(|k| if k < p { 1 } else if k < q { -1 } else { 0 }).collect();

    let mut gens: Vec<Vec<i64>> = (0..p).chain(q..r).map(unit).collect();
    for j in 0..p {
        for k in p..q {
            gens.push(pair(j, k));
        }
    }
    canonical_sort(&mut gens);
    let names = generator_names(&gens);
    let index_of = |v: &Vec<i64>| gens.iter().position(|g| g == v).expect("formula generator");

    let mut units: Vec<Vec<i64>> = (q..r).map(unit).collect();
    for j in 0..p {
        for k in p..q {
            units.push(pair(j, k));
        }
    }
    let laurent = LaurentGenerators { units, monoid_gen: None };
    let monoid_part = (0..p).map(unit).collect();

    let m = gens.len();
    let var = |v: &Vec<i64>| index_of(v);
    let mono = |a: usize, b: usize| {
        let mut e = vec![0u32; m];
        e[a] += 1;
        e[b] += 1;
        e
    };
    let mut seen: BTreeSet<(Vec<u32>, Vec<u32>)> = BTreeSet::new();
    let mut rels: Vec<MPoly> = Vec::new();
    let mut push = |a: Vec<u32>, b: Vec<u32>| {
        if a == b {
            return;
        }
        let key = if a < b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        if seen.insert(key) {
            rels.push(MPoly::binomial(a, GaussianRational::one(), b));
        }
    };
    for j in 0..p {
        for i in 0..p {
            for k in p..q {
                // t_j t_{ik} − t_i t_{jk}
                push(mono(var(&unit(j)), var(&pair(i, k))), mono(var(&unit(i)), var(&pair(j, k))));
                for mm in p..q {
                    // t_{jk} t_{im} − t_{jm} t_{ik}
                    push(mono(var(&pair(j, k)), var(&pair(i, mm))), mono(var(&pair(j, mm)), var(&pair(i, k))));
                }
            }
        }
    }
    Ok(Thm24Presentation {
        ell,
        generators: HilbertBasis { generators: gens },
        laurent,
        monoid_part,
        relations: IdealBasis::new(names, rels),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cancel::CancelToken;
    use crate::grobner::{ideal_equal, parse_mpoly};

    #[test]
    fn examples() {
        let t = thm24_presentation(2, 4, 4).unwrap();
        assert_eq!(t.generators.len(), 6);
        assert_eq!(t.relations.vars, vec!["t1", "t2", "t13", "t14", "t23", "t24"]);
        let v = &t.relations.vars;
        let expect = IdealBasis::new(
            v.clone(),
            ["t1*t23 - t2*t13", "t1*t24 - t2*t14", "t13*t24 - t14*t23"]
                .iter()
                .map(|s| parse_mpoly(s, v).unwrap())
                .collect(),
        );
        assert!(ideal_equal(&t.relations, &expect, &CancelToken::new()).unwrap());

        let t = thm24_presentation(1, 2, 2).unwrap();
        assert_eq!(t.generators.generators, vec![vec![1, 0], vec![1, 1]]);
        assert!(t.relations.is_zero_ideal());

        let t = thm24_presentation(2, 3, 3).unwrap();
        assert_eq!(t.generators.generators, vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(t.relations.to_string(), "(-t2*t13 + t1*t23)");
    }

    #[test]
    fn bad_indices() {
        assert_eq!(thm24_presentation(0, 1, 2), Err(Error::BadIndices { p: 0, q: 1, r: 2 }));
        assert_eq!(thm24_presentation(2, 2, 3), Err(Error::BadIndices { p: 2, q: 2, r: 3 }));
        assert_eq!(thm24_presentation(1, 3, 2), Err(Error::BadIndices { p: 1, q: 3, r: 2 }));
    }
}
