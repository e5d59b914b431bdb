//! Randomized invariants, one group per module.

mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use germring::exactalg::{GaussianRational, Poly, RatFunc};
use germring::germ::{germ_monomial, ord_at, parse_germ, GermFamily};
use germring::grobner::{buchberger, ideal_equal, is_groebner_basis, parse_mpoly, IdealBasis, MonomialOrder};
use germring::oracle::brute_irreducibles;
use germring::presentations::relation_lattice;
use germring::semigroup::{classify, decompose, hilbert_basis, Case, SemigroupSpec, Variant};
use germring::toric::{check_thm22, monomial_map, toric_ideal};
use germring::CancelToken;

fn ell(max_r: usize, bound: i64) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-bound..=bound, 1..=max_r)
}

fn poly_text(vars: usize) -> impl Strategy<Value = String> {
    let term = (-3i64..=3, proptest::collection::vec(0u32..3, vars)).prop_map(|(c, e)| {
        let mono: Vec<String> = e.iter().enumerate().filter(|(_, &k)| k > 0).map(|(j, k)| format!("x{}^{k}", j + 1)).collect();
        if mono.is_empty() {
            format!("{c}")
        } else {
            format!("{c}*{}", mono.join("*"))
        }
    });
    proptest::collection::vec(term, 1..4).prop_map(|t| t.join(" + "))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gaussian_division_undoes_multiplication(a in (-9i64..9, 1i64..5, -3i64..3), b in (1i64..9, 1i64..5, -3i64..3)) {
        let g = |(n, d, im): (i64, i64, i64)| GaussianRational::from_frac(n, d) + GaussianRational::from_int(im) * GaussianRational::i();
        let (x, y) = (g(a), g(b));
        prop_assert_eq!((x.clone() * y.clone()) * y.inv(), x);
    }

    #[test]
    fn gcd_divides_both(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = common::poly(&mut rng, 2);
        let a = &common::poly(&mut rng, 2) * &c;
        let b = &common::poly(&mut rng, 2) * &c;
        let g = Poly::gcd(&a, &b);
        prop_assume!(!g.is_zero());
        prop_assert!(a.exact_div(&g).is_some() && b.exact_div(&g).is_some());
        if !c.is_zero() {
            prop_assert!(g.exact_div(&c).is_some());
        }
    }

    #[test]
    fn rational_functions_cancel(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let z0 = GaussianRational::from_int(0);
        let f = RatFunc::new(common::unit_at(&mut rng, &z0), common::unit_at(&mut rng, &z0));
        prop_assert_eq!(f.clone() * f.inv(), RatFunc::one());
        prop_assert_eq!(f.powi(3) * f.powi(-2), f);
    }

    #[test]
    fn order_is_additive(seed in any::<u64>(), j in -4i64..=4, k in -4i64..=4, n in -5i64..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let z0 = common::base_point(&mut rng);
        let f = common::germ_with_order(&mut rng, &z0, j);
        let g = common::germ_with_order(&mut rng, &z0, k);
        prop_assert_eq!(ord_at(&f, &z0), j);
        prop_assert_eq!(ord_at(&f.mul(&g), &z0), j + k);
        prop_assert_eq!(ord_at(&f.powi(n), &z0), n * j);
    }

    #[test]
    fn printing_round_trips(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let text = common::expr_text(&mut rng, 2);
        if let Ok(g) = parse_germ(&text) {
            let printed = g.to_string();
            prop_assert_eq!(parse_germ(&printed).unwrap(), g);
        }
    }

    #[test]
    fn hilbert_basis_is_the_irreducibles(ell in ell(3, 4)) {
        let basis = hilbert_basis(&ell);
        let mut low = basis.up_to_degree(6);
        low.sort();
        prop_assert_eq!(low, brute_irreducibles(&ell, 6));
    }

    #[test]
    fn decompose_recovers_sums(ell in ell(4, 4), picks in proptest::collection::vec(0usize..64, 0..6)) {
        let basis = hilbert_basis(&ell);
        prop_assume!(!basis.generators.is_empty());
        let mut a = vec![0i64; ell.len()];
        for p in picks {
            let g = &basis.generators[p % basis.generators.len()];
            a.iter_mut().zip(g).for_each(|(x, y)| *x += y);
        }
        let c = decompose(&SemigroupSpec::new(&ell, Variant::N), &a, &basis).unwrap();
        let sum: Vec<i64> = (0..ell.len())
            .map(|k| c.iter().zip(&basis.generators).map(|(&m, g)| m as i64 * g[k]).sum())
            .collect();
        prop_assert_eq!(sum, a);
    }

    #[test]
    fn buchberger_output_is_a_basis(texts in proptest::collection::vec(poly_text(3), 1..3), small in proptest::collection::vec(poly_text(2), 1..3)) {
        for (texts, n, order) in [(&texts, 3, MonomialOrder::DegRevLex), (&small, 2, MonomialOrder::Lex)] {
            let vars: Vec<String> = (1..=n).map(|k| format!("x{k}")).collect();
            let gens: Vec<_> = texts.iter().map(|t| parse_mpoly(t, &vars).unwrap()).collect();
            let gb = buchberger(&gens, &order);
            prop_assert!(is_groebner_basis(&gb, &order));
            let a = IdealBasis::new(vars.clone(), gens.clone());
            let b = IdealBasis::new(vars.clone(), gb);
            prop_assert!(ideal_equal(&a, &b, &CancelToken::new()).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn toric_binomials_stay_in_the_kernel(ell in ell(4, 3)) {
        let map = monomial_map(&ell, Variant::N);
        let toric = toric_ideal(&map, &CancelToken::new()).unwrap();
        let rows = map.matrix_rows();
        for b in &toric.binomials {
            for row in &rows {
                let side = |m: &[u32]| -> i64 { row.iter().zip(m).map(|(a, &e)| a * e as i64).sum() };
                prop_assert_eq!(side(&b.lead), side(&b.tail));
            }
        }
        for u in &toric.kernel {
            prop_assert!(toric.contains_binomial(u));
        }
    }

    #[test]
    fn case_three_conditions_agree(ell in ell(4, 3)) {
        prop_assume!(classify(&ell).case == Case::III);
        let report = check_thm22(&ell, &CancelToken::new()).unwrap();
        prop_assert!(report.agree(), "{:?}", report.conditions);
    }

    #[test]
    fn relations_are_constant(exps in proptest::collection::vec(-2i64..=2, 2..=4), shift in -1i64..=1) {
        // e^{c z} members and one shifted copy, so relations exist
        let mut members: Vec<String> = exps.iter().map(|c| format!("exp({c}*z)")).collect();
        members.push(format!("exp({}*z + {shift})", exps[0]));
        let fam = GermFamily::parse_exprs(&members).unwrap();
        let lattice = relation_lattice(&fam).unwrap();
        for (a, c) in lattice.basis.iter().zip(&lattice.constants) {
            let g = germ_monomial(&fam, a).unwrap();
            prop_assert!(g.is_constant());
            prop_assert_eq!(g.rat.as_constant().unwrap(), c.lc.clone());
        }
    }
}
