//! Coprime factor refinement of a list of polynomials.

use crate::error::{Error, Result};

use super::Poly;

/// Pairwise-coprime monic base with exponent rows: input `j` equals its
/// leading coefficient times `Π base[k]^exps[j][k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refinement {
    pub base: Vec<Poly>,
    pub exps: Vec<Vec<u32>>,
}

/// Splits the inputs over a common coprime base without root finding.
///
/// Square-free parts are computed first, then any two base elements with a
/// nontrivial gcd `g` are replaced by `g`, `a/g`, `b/g` until the base is
/// pairwise coprime.
pub fn factor_refine(polys: &[Poly]) -> Result<Refinement> {
    if polys.iter().any(Poly::is_zero) {
        return Err(Error::ZeroInput);
    }
    let mut base: Vec<Poly> = Vec::new();
    for p in polys {
        for s in p.squarefree_parts() {
            if !s.is_constant() && !base.contains(&s) {
                base.push(s);
            }
        }
    }
    'outer: loop {
        for i in 0..base.len() {
            for j in i + 1..base.len() {
                let g = Poly::gcd(&base[i], &base[j]);
                if g.is_constant() {
                    continue;
                }
                let a = base[i].exact_div(&g).expect("gcd divides");
                let b = base[j].exact_div(&g).expect("gcd divides");
                base.swap_remove(j);
                base.swap_remove(i);
                for piece in [g, a, b] {
                    let piece = piece.monic();
                    if !piece.is_constant() && !base.contains(&piece) {
                        base.push(piece);
                    }
                }
                continue 'outer;
            }
        }
        break;
    }
    base.sort_by(|a, b| a.canonical_cmp(b));

    let exps = polys
        .iter()
        .map(|p| {
            let mut rest = p.clone();
            let row: Vec<u32> = base
                .iter()
                .map(|b| {
                    let mut e = 0;
                    while let Some(q) = rest.exact_div(b) {
                        rest = q;
                        e += 1;
                    }
                    e
                })
                .collect();
            debug_assert!(rest.is_constant(), "refinement left a nonconstant cofactor");
            row
        })
        .collect();
    Ok(Refinement { base, exps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::GaussianRational;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn rebuild(r: &Refinement, j: usize, lc: &GaussianRational) -> Poly {
        r.base
            .iter()
            .zip(&r.exps[j])
            .fold(Poly::constant(lc.clone()), |acc, (b, &e)| &acc * &b.pow(e))
    }

    #[test]
    fn examples() {
        let z = p(&[0, 1]);
        let r = factor_refine(&[z.clone(), z.pow(2)]).unwrap();
        assert_eq!(r.base, vec![z.clone()]);
        assert_eq!(r.exps, vec![vec![1], vec![2]]);

        let zm1 = p(&[-1, 1]);
        let r = factor_refine(&[&z * &zm1, zm1.clone()]).unwrap();
        assert_eq!(r.base, vec![z.clone(), zm1.clone()]);
        assert_eq!(r.exps, vec![vec![1, 1], vec![0, 1]]);

        let r = factor_refine(&[Poly::one()]).unwrap();
        assert!(r.base.is_empty());
        assert_eq!(r.exps, vec![Vec::<u32>::new()]);

        assert_eq!(factor_refine(&[Poly::zero()]), Err(Error::ZeroInput));
    }

    #[test]
    fn overlapping_factors() {
        // (z²−1)², (z−1)(z+2)³, 3(z+1)z
        let inputs = vec![
            p(&[-1, 0, 1]).pow(2),
            &p(&[-1, 1]) * &p(&[2, 1]).pow(3),
            p(&[0, 3, 3]),
        ];
        let r = factor_refine(&inputs).unwrap();
        for (i, a) in r.base.iter().enumerate() {
            for b in &r.base[i + 1..] {
                assert!(Poly::gcd(a, b).is_one());
            }
        }
        for (j, f) in inputs.iter().enumerate() {
            assert_eq!(&rebuild(&r, j, &f.leading_coeff()), f);
        }
        assert_eq!(r.base.len(), 4);
    }
}
