//! Seeded randomized property sweeps. Instances are drawn sequentially from
//! one ChaCha stream and checked in parallel, so a report depends only on
//! the seed and the count.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cancel::CancelToken;
use crate::error::Result;
use crate::oracle::{brute_census, brute_irreducibles, kernel_box, semigroup_elements, PackedReducer};
use crate::semigroup::{classify, decompose, hilbert_basis, support_census, Case, SemigroupSpec, Variant};
use crate::grobner::{normal_form_monomial, Binomial};
use crate::toric::{check_thm22, check_thm23, monomial_map, toric_ideal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SweepKind {
    Thm22,
    Thm23,
    HilbertOracle,
    ToricOracle,
}

impl SweepKind {
    pub fn name(self) -> &'static str {
        match self {
            SweepKind::Thm22 => "thm22",
            SweepKind::Thm23 => "thm23",
            SweepKind::HilbertOracle => "hilbert-oracle",
            SweepKind::ToricOracle => "toric-oracle",
        }
    }
}

impl fmt::Display for SweepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        [SweepKind::Thm22, SweepKind::Thm23, SweepKind::HilbertOracle, SweepKind::ToricOracle]
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown sweep kind {s:?}"))
    }
}

/// Degree bound for the Hilbert-basis oracle.
pub const ORACLE_DEGREE: u32 = 12;
/// Entry bound for kernel vectors in the toric oracle.
pub const KERNEL_BOX: i64 = 3;
/// Leading instances of a `thm23` sweep also checked against the census oracle.
pub const CENSUS_SUBSAMPLE: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub ell: Vec<i64>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub kind: SweepKind,
    pub seed: u64,
    pub tested: usize,
    /// Extra per-instance work, e.g. kernel vectors or elements checked.
    pub checks: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn random_ell(rng: &mut ChaCha8Rng, r_lo: usize, r_hi: usize, bound: i64) -> Vec<i64> {
    let r = rng.random_range(r_lo..=r_hi);
    (0..r).map(|_| rng.random_range(-bound..=bound)).collect()
}

fn sample(seed: u64, count: usize, r_lo: usize, r_hi: usize, bound: i64, keep: impl Fn(&[i64]) -> bool) -> Vec<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let ell = random_ell(&mut rng, r_lo, r_hi, bound);
        if keep(&ell) {
            out.push(ell);
        }
    }
    out
}

/// Case-III vectors, `2 ≤ r ≤ 5`, entries in `[−4, 4]`.
pub fn thm22_sample(seed: u64, count: usize) -> Vec<Vec<i64>> {
    sample(seed, count, 2, 5, 4, |ell| classify(ell).case == Case::III)
}

/// Vectors outside case II, `2 ≤ r ≤ 5`, entries in `[−4, 4]`.
pub fn thm23_sample(seed: u64, count: usize) -> Vec<Vec<i64>> {
    sample(seed, count, 2, 5, 4, |ell| classify(ell).case != Case::II)
}

/// `2 ≤ r ≤ 4`, entries in `[−5, 5]`.
pub fn hilbert_sample(seed: u64, count: usize) -> Vec<Vec<i64>> {
    sample(seed, count, 2, 4, 5, |_| true)
}

fn bad(ell: &[i64], detail: String) -> Option<Counterexample> {
    Some(Counterexample { ell: ell.to_vec(), detail })
}

/// `None` when the instance passes; the second value counts checks made.
pub fn check_instance(kind: SweepKind, ell: &[i64], index: usize, token: &CancelToken) -> Result<(Option<Counterexample>, u64)> {
    match kind {
        SweepKind::Thm22 => {
            let rep = check_thm22(ell, token)?;
            let cx = (!rep.agree()).then(|| format!("conditions {:?}", rep.conditions));
            Ok((cx.and_then(|d| bad(ell, d)), 5))
        }
        SweepKind::Thm23 => {
            let rep = check_thm23(ell, token)?;
            if !rep.agree() {
                let d = format!("(1) = {}, (2) = {}", rep.polynomial_ring, rep.census_condition);
                return Ok((bad(ell, d), 2));
            }
            if index < CENSUS_SUBSAMPLE {
                let oracle = brute_census(ell);
                if oracle.l != rep.census.l {
                    return Ok((bad(ell, format!("L_t closed form {:?}, oracle {:?}", rep.census.l, oracle.l)), 3));
                }
                return Ok((None, 3));
            }
            Ok((None, 2))
        }
        SweepKind::HilbertOracle => hilbert_oracle(ell, token),
        SweepKind::ToricOracle => toric_oracle(ell, token),
    }
}

fn hilbert_oracle(ell: &[i64], token: &CancelToken) -> Result<(Option<Counterexample>, u64)> {
    let basis = hilbert_basis(ell);
    let mut low = basis.up_to_degree(ORACLE_DEGREE as i64);
    low.sort();
    let brute = brute_irreducibles(ell, ORACLE_DEGREE);
    if low != brute {
        return Ok((bad(ell, format!("basis {low:?}, irreducibles {brute:?}")), 1));
    }
    let spec = SemigroupSpec::new(ell, Variant::N);
    let elems = semigroup_elements(ell, ORACLE_DEGREE);
    for a in &elems {
        token.check()?;
        let c = match decompose(&spec, a, &basis) {
            Ok(c) => c,
            Err(e) => return Ok((bad(ell, format!("decompose {a:?}: {e}")), 1)),
        };
        let sum: Vec<i64> = (0..ell.len())
            .map(|k| c.iter().zip(&basis.generators).map(|(&m, g)| m as i64 * g[k]).sum())
            .collect();
        if &sum != a {
            return Ok((bad(ell, format!("decompose {a:?} gave {c:?}")), 1));
        }
    }
    Ok((None, 1 + elems.len() as u64))
}

fn toric_oracle(ell: &[i64], token: &CancelToken) -> Result<(Option<Counterexample>, u64)> {
    let map = monomial_map(ell, Variant::N);
    let toric = toric_ideal(&map, token)?;
    let (failure, checks) = check_toric_basis(&map.matrix_rows(), &toric.binomials, &toric.order.weights, token)?;
    Ok((failure.and_then(|d| bad(ell, d)), checks))
}

/// Checks a binomial Gröbner basis of the toric ideal of `A` (given by its
/// rows): every binomial lies in `ker A`, and every `u ∈ ker A` with entries
/// in `[−KERNEL_BOX, KERNEL_BOX]` has `x^{u+} − x^{u−}` reducing to zero.
/// `weights` must be a positive grading making the basis homogeneous. The
/// second value counts the binomials plus the kernel vectors visited.
pub fn check_toric_basis(
    rows: &[Vec<i64>],
    binomials: &[Binomial],
    weights: &[u64],
    token: &CancelToken,
) -> Result<(Option<String>, u64)> {
    let m = weights.len();
    let image = |e: &[u32]| -> Vec<i64> { rows.iter().map(|row| row.iter().zip(e).map(|(a, &x)| a * x as i64).sum()).collect() };
    for b in binomials {
        if image(&b.lead) != image(&b.tail) {
            return Ok((Some(format!("binomial {:?} - {:?} leaves the kernel", b.lead, b.tail)), 1));
        }
    }
    let pairs: Vec<(Vec<u32>, Vec<u32>)> = binomials.iter().map(|b| (b.lead.clone(), b.tail.clone())).collect();
    let packed = PackedReducer::new(&pairs, m, weights, KERNEL_BOX as u32);
    let mut failure = None;
    let mut cancelled = false;
    let mut seen = 0u64;
    let visited = kernel_box(rows, m, KERNEL_BOX, |u| {
        seen += 1;
        if seen % 65536 == 0 && token.is_cancelled() {
            cancelled = true;
            return false;
        }
        // −u gives the negated binomial, so one of each pair is enough
        if u.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
            return true;
        }
        let ok = match &packed {
            Some(p) => p.has_conformal_rule(u) || p.reduces_to_zero(u),
            None => normal_form_monomial(&positive(u), binomials) == normal_form_monomial(&positive(&negate(u)), binomials),
        };
        if !ok {
            failure = Some(u.to_vec());
        }
        ok
    });
    if cancelled {
        token.check()?;
    }
    let detail = failure.map(|u| format!("kernel vector {u:?} does not reduce to 0"));
    Ok((detail, binomials.len() as u64 + visited))
}

fn positive(u: &[i64]) -> Vec<u32> {
    u.iter().map(|&x| x.max(0) as u32).collect()
}

fn negate(u: &[i64]) -> Vec<i64> {
    u.iter().map(|&x| -x).collect()
}

pub fn instances(kind: SweepKind, seed: u64, count: usize) -> Vec<Vec<i64>> {
    match kind {
        SweepKind::Thm22 => thm22_sample(seed, count),
        SweepKind::Thm23 => thm23_sample(seed, count),
        SweepKind::HilbertOracle | SweepKind::ToricOracle => hilbert_sample(seed, count),
    }
}

pub fn run_sweep(kind: SweepKind, seed: u64, count: usize, token: &CancelToken) -> Result<SweepReport> {
    let cases = instances(kind, seed, count);
    run_on(kind, seed, &cases, token)
}

/// Checks the given instances in parallel; results keep the input order.
pub fn run_on(kind: SweepKind, seed: u64, cases: &[Vec<i64>], token: &CancelToken) -> Result<SweepReport> {
    let results = cases
        .par_iter()
        .enumerate()
        .map(|(k, ell)| check_instance(kind, ell, k, token))
        .collect::<Result<Vec<_>>>()?;
    let checks = results.iter().map(|(_, n)| n).sum();
    let counterexamples = results.into_iter().filter_map(|(c, _)| c).collect();
    Ok(SweepReport { kind, seed, tested: cases.len(), checks, counterexamples })
}

/// Census closed form against the oracle, for callers that want it alone.
pub fn census_agrees(ell: &[i64]) -> Result<bool> {
    Ok(support_census(ell)?.l == brute_census(ell).l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_samples() {
        assert_eq!(thm22_sample(7, 20), thm22_sample(7, 20));
        assert_ne!(thm22_sample(7, 20), thm22_sample(8, 20));
        assert!(thm22_sample(1, 50).iter().all(|e| classify(e).case == Case::III && e.len() <= 5));
        assert!(thm23_sample(1, 50).iter().all(|e| classify(e).case != Case::II && e.len() >= 2));
        assert!(hilbert_sample(1, 50).iter().all(|e| e.len() <= 4 && e.iter().all(|x| x.abs() <= 5)));
    }

    #[test]
    fn small_sweeps() {
        let tok = CancelToken::new();
        for kind in [SweepKind::Thm22, SweepKind::Thm23, SweepKind::HilbertOracle] {
            let rep = run_sweep(kind, 3, 5, &tok).unwrap();
            assert_eq!(rep.tested, 5);
            assert!(rep.passed(), "{:?}", rep.counterexamples);
        }
        assert_eq!("toric-oracle".parse::<SweepKind>(), Ok(SweepKind::ToricOracle));
        assert!("nope".parse::<SweepKind>().is_err());
    }

    #[test]
    fn toric_check_catches_a_missing_binomial() {
        let tok = CancelToken::new();
        let map = monomial_map(&[4, 2, -4, 5], Variant::N);
        let toric = toric_ideal(&map, &tok).unwrap();
        let rows = map.matrix_rows();
        let w = &toric.order.weights;
        let (fail, _) = check_toric_basis(&rows, &toric.binomials, w, &tok).unwrap();
        assert_eq!(fail, None);
        let mut dropped = 0;
        for k in 0..toric.binomials.len() {
            let b = &toric.binomials[k];
            // a binomial outside the box may be missed legitimately
            if b.lead.iter().zip(&b.tail).any(|(&l, &t)| (l as i64 - t as i64).abs() > KERNEL_BOX) {
                continue;
            }
            dropped += 1;
            let mut short = toric.binomials.clone();
            short.remove(k);
            let (fail, _) = check_toric_basis(&rows, &short, w, &tok).unwrap();
            assert!(fail.is_some(), "dropping binomial {k} went unnoticed");
        }
        assert!(dropped > 3);
        let mut wrong = toric.binomials.clone();
        wrong[0].tail[0] += 1;
        assert!(check_toric_basis(&rows, &wrong, w, &tok).unwrap().0.unwrap().contains("leaves the kernel"));
    }

    #[test]
    fn cancellation() {
        let tok = CancelToken::new();
        tok.cancel();
        assert!(run_sweep(SweepKind::Thm22, 1, 3, &tok).is_err());
    }
}
