//! Gröbner bases of pure binomial ideals `(t^a − t^b, …)`, and lattice
//! ideals computed from a lattice basis.
//!
//! S-polynomials and reductions of pure binomials are again pure
//! binomials, so no coefficients are stored. Saturation at `t₁⋯t_m` uses
//! the graded reverse lexicographic trick one variable at a time: for an
//! ideal homogeneous in a positive grading and an order in which `t_i` is
//! the cheapest variable, dividing every element of a Gröbner basis by its
//! largest power of `t_i` gives a Gröbner basis of `I : t_i^∞`.

use std::cmp::Ordering;

use crate::cancel::CancelToken;
use crate::error::Result;
use crate::exactalg::GaussianRational;

use super::buchberger::{coprime, divides, lcm};
use super::{MPoly, MonomialOrder};

/// `t^lead − t^tail` with `lead > tail` in the order it was built for.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Binomial {
    pub lead: Vec<u32>,
    pub tail: Vec<u32>,
}

impl Binomial {
    pub fn to_mpoly(&self) -> MPoly {
        MPoly::binomial(self.lead.clone(), GaussianRational::from_int(1), self.tail.clone())
    }
}

/// Weighted degree, then reverse lexicographic with `last` (if any) treated
/// as the final, cheapest variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialOrder {
    pub weights: Vec<u64>,
    pub last: Option<usize>,
}

impl BinomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        let deg = |m: &[u32]| -> u64 { m.iter().zip(&self.weights).map(|(&e, &w)| e as u64 * w).sum() };
        deg(a).cmp(&deg(b)).then_with(|| {
            if let Some(l) = self.last {
                if a[l] != b[l] {
                    return b[l].cmp(&a[l]);
                }
            }
            for k in (0..a.len()).rev() {
                if Some(k) != self.last && a[k] != b[k] {
                    return b[k].cmp(&a[k]);
                }
            }
            Ordering::Equal
        })
    }

    /// The same order as a general [`MonomialOrder`] when `last` is unset.
    pub fn as_monomial_order(&self) -> Option<MonomialOrder> {
        self.last.is_none().then(|| MonomialOrder::WeightedDegRevLex(self.weights.clone()))
    }
}

/// Orders the two sides; `None` when they coincide (the zero binomial).
fn make(a: Vec<u32>, b: Vec<u32>, order: &BinomialOrder) -> Option<Binomial> {
    match order.cmp(&a, &b) {
        Ordering::Greater => Some(Binomial { lead: a, tail: b }),
        Ordering::Less => Some(Binomial { lead: b, tail: a }),
        Ordering::Equal => None,
    }
}

/// Replaces `m` by its normal form modulo the binomials.
pub fn normal_form_monomial(m: &[u32], gb: &[Binomial]) -> Vec<u32> {
    let mut m = m.to_vec();
    'outer: loop {
        for g in gb {
            if divides(&g.lead, &m) {
                for k in 0..m.len() {
                    m[k] = m[k] - g.lead[k] + g.tail[k];
                }
                continue 'outer;
            }
        }
        return m;
    }
}

/// Bit `k mod 64` set when variable `k` occurs. A necessary condition for
/// divisibility that is cheap to test first.
fn support(m: &[u32]) -> u64 {
    m.iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |acc, (k, _)| acc | 1 << (k % 64))
}

fn spoly(f: &Binomial, g: &Binomial, order: &BinomialOrder) -> Option<Binomial> {
    let l = lcm(&f.lead, &g.lead);
    let a: Vec<u32> = (0..l.len()).map(|k| l[k] - f.lead[k] + f.tail[k]).collect();
    let b: Vec<u32> = (0..l.len()).map(|k| l[k] - g.lead[k] + g.tail[k]).collect();
    make(a, b, order)
}

struct Pair {
    degree: u64,
    i: usize,
    j: usize,
    lcm: Vec<u32>,
}

impl PartialEq for Pair {
    fn eq(&self, other: &Self) -> bool {
        (self.degree, self.i, self.j) == (other.degree, other.i, other.j)
    }
}
impl Eq for Pair {}
impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Pair {
    // reversed: the heap pops the lowest degree, then the oldest pair
    fn cmp(&self, other: &Self) -> Ordering {
        (other.degree, other.i, other.j).cmp(&(self.degree, self.i, self.j))
    }
}

struct Engine<'a> {
    order: &'a BinomialOrder,
    polys: Vec<Binomial>,
    masks: Vec<u64>,
    active: Vec<bool>,
    live: Vec<usize>,
    pairs: std::collections::BinaryHeap<Pair>,
}

impl Engine<'_> {
    fn degree(&self, m: &[u32]) -> u64 {
        m.iter().zip(&self.order.weights).map(|(&e, &w)| e as u64 * w).sum()
    }

    fn normal_form(&self, m: &mut [u32]) {
        let mut mask = support(m);
        'outer: loop {
            for &g in &self.live {
                if self.masks[g] & !mask == 0 && divides(&self.polys[g].lead, m) {
                    let g = &self.polys[g];
                    for k in 0..m.len() {
                        m[k] = m[k] - g.lead[k] + g.tail[k];
                    }
                    mask = support(m);
                    continue 'outer;
                }
            }
            return;
        }
    }

    fn reduce(&self, b: Binomial) -> Option<Binomial> {
        let (mut lead, mut tail) = (b.lead, b.tail);
        self.normal_form(&mut lead);
        self.normal_form(&mut tail);
        make(lead, tail, self.order)
    }

    /// Adds `h`, dropping pairs by the Gebauer–Möller criteria.
    fn update(&mut self, h: Binomial) {
        let hi = self.polys.len();
        let hm = h.lead.clone();
        let cands: Vec<(usize, Vec<u32>, bool)> = self
            .live
            .iter()
            .map(|&g| (g, lcm(&hm, &self.polys[g].lead), coprime(&hm, &self.polys[g].lead)))
            .collect();
        let mut kept: Vec<(usize, Vec<u32>, bool)> = Vec::new();
        for (k, (g, l, disjoint)) in cands.iter().enumerate() {
            let later = cands[k + 1..].iter().any(|(_, l2, _)| divides(l2, l));
            let earlier = kept.iter().any(|(_, l2, _)| divides(l2, l));
            if *disjoint || (!later && !earlier) {
                kept.push((*g, l.clone(), *disjoint));
            }
        }
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(divides(&hm, &p.lcm) && lcm(&polys[p.i].lead, &hm) != p.lcm && lcm(&polys[p.j].lead, &hm) != p.lcm)
        });
        for (g, l, disjoint) in kept {
            if !disjoint {
                let degree = self.degree(&l);
                self.pairs.push(Pair { degree, i: g, j: hi, lcm: l });
            }
        }
        let hmask = support(&hm);
        for &g in &self.live {
            if hmask & !self.masks[g] == 0 && divides(&hm, &self.polys[g].lead) {
                self.active[g] = false;
            }
        }
        self.polys.push(h);
        self.masks.push(hmask);
        self.active.push(true);
        let active = &self.active;
        self.live.retain(|&g| active[g]);
        self.live.push(hi);
    }
}

/// Reduced Gröbner basis of the binomial ideal, sorted by leading monomial.
pub fn binomial_groebner(gens: &[Binomial], order: &BinomialOrder, token: &CancelToken) -> Result<Vec<Binomial>> {
    let mut engine = Engine {
        order,
        polys: Vec::new(),
        masks: Vec::new(),
        active: Vec::new(),
        live: Vec::new(),
        pairs: std::collections::BinaryHeap::new(),
    };
    let mut inputs: Vec<Binomial> = gens.iter().filter_map(|g| make(g.lead.clone(), g.tail.clone(), order)).collect();
    inputs.sort_by(|a, b| order.cmp(&a.lead, &b.lead));
    let mut queue: std::collections::VecDeque<Binomial> = inputs.into();
    loop {
        token.check()?;
        let next = if let Some(h) = queue.pop_front() {
            Some(h)
        } else if let Some(p) = engine.pairs.pop() {
            spoly(&engine.polys[p.i], &engine.polys[p.j], order)
        } else {
            break;
        };
        let Some(h) = next else { continue };
        let Some(h) = engine.reduce(h) else { continue };
        engine.update(h);
    }

    let mut basis: Vec<Binomial> = engine.live.iter().map(|&g| engine.polys[g].clone()).collect();
    basis.sort_by(|a, b| order.cmp(&a.lead, &b.lead));
    let mut minimal: Vec<Binomial> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|m| divides(&m.lead, &g.lead)) {
            minimal.push(g);
        }
    }
    // leads of a minimal basis are pairwise non-dividing, so reducing the
    // tails against the whole basis never uses an element on itself
    let reduced: Vec<Binomial> = minimal
        .iter()
        .filter_map(|g| make(g.lead.clone(), normal_form_monomial(&g.tail, &minimal), order))
        .collect();
    Ok(reduced)
}

fn split(u: &[i64]) -> (Vec<u32>, Vec<u32>) {
    let pos = u.iter().map(|&x| x.max(0) as u32).collect();
    let neg = u.iter().map(|&x| (-x).max(0) as u32).collect();
    (pos, neg)
}

/// Greedy pairwise reduction `b_i ← b_i ± b_j` while some step lowers a
/// 1-norm. Each step is unimodular, so the span is unchanged; short
/// generators keep the intermediate ideals of the saturation small.
fn shorten(basis: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let norm = |v: &[i64]| -> i64 { v.iter().map(|x| x.abs()).sum() };
    let mut b = basis.to_vec();
    loop {
        let mut improved = false;
        for i in 0..b.len() {
            for j in 0..b.len() {
                if i == j {
                    continue;
                }
                for s in [1, -1] {
                    let cand: Vec<i64> = b[i].iter().zip(&b[j]).map(|(x, y)| x + s * y).collect();
                    if norm(&cand) < norm(&b[i]) {
                        b[i] = cand;
                        improved = true;
                    }
                }
            }
        }
        if !improved {
            return b;
        }
    }
}

/// Brings a lattice basis to the identity on some set `τ` of columns, by
/// integer row operations with `±1` pivots only (so the span is kept).
/// Greedy; `None` when it runs out of unit pivots.
fn unit_pivots(basis: &[Vec<i64>]) -> Option<(Vec<Vec<i64>>, Vec<usize>)> {
    let mut b = basis.to_vec();
    let mut tau = Vec::with_capacity(b.len());
    for r in 0..b.len() {
        // prefer the pivot whose column is sparsest, to limit fill-in
        let used = &tau;
        let (row, col) = (r..b.len())
            .flat_map(|i| (0..b[i].len()).filter(move |c| !used.contains(c)).map(move |c| (i, c)))
            .filter(|&(i, c)| b[i][c].abs() == 1)
            .min_by_key(|&(i, c)| ((r..b.len()).filter(|&k| b[k][c] != 0).count(), i, c))?;
        b.swap(r, row);
        if b[r][col] < 0 {
            b[r].iter_mut().for_each(|x| *x = -*x);
        }
        for k in 0..b.len() {
            let q = b[k][col];
            if k != r && q != 0 {
                let pivot = b[r].clone();
                for (x, y) in b[k].iter_mut().zip(pivot) {
                    *x = x.checked_sub(q.checked_mul(y)?)?;
                }
            }
        }
        tau.push(col);
    }
    Some((b, tau))
}

/// Variables at which the ideal of `basis` must be saturated to reach
/// `I_L`, with the basis to start from. If the basis is the identity on a
/// set `τ` of columns, invert the variables outside `τ`: each generator
/// then solves for one `t_τj` as a Laurent monomial in those, and every
/// binomial of `L` becomes trivial after the substitution, since a lattice
/// vector is determined by its `τ` coordinates. So saturating at the
/// variables outside `τ` already gives `I_L`. Otherwise all are used.
fn saturation_plan(basis: &[Vec<i64>], m: usize) -> (Vec<Vec<i64>>, Vec<usize>) {
    match unit_pivots(basis) {
        Some((b, tau)) => (b, (0..m).filter(|k| !tau.contains(k)).collect()),
        None => (basis.to_vec(), (0..m).collect()),
    }
}

/// `I_L = (t^{u⁺} − t^{u⁻} : u ∈ basis ∪ extra) : (t₁⋯t_m)^∞` for a
/// lattice `L` with the given basis, on which the positive grading
/// `weights` vanishes. `extra` must lie in `L`; short vectors there keep
/// the intermediate ideals small. Returns the reduced Gröbner basis for
/// weighted degrevlex with these weights.
pub fn lattice_ideal(basis: &[Vec<i64>], extra: &[Vec<i64>], weights: &[u64], token: &CancelToken) -> Result<Vec<Binomial>> {
    let m = weights.len();
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let (start, vars) = saturation_plan(basis, m);
    let mut order = BinomialOrder { weights: weights.to_vec(), last: None };
    let mut current: Vec<Binomial> = start
        .iter()
        .chain(&shorten(&start))
        .chain(extra)
        .filter_map(|u| {
            let (a, b) = split(u);
            make(a, b, &order)
        })
        .collect();
    for i in vars {
        order.last = Some(i);
        let gb = binomial_groebner(&current, &order, token)?;
        current = gb
            .into_iter()
            .filter_map(|g| {
                let k = g.lead[i].min(g.tail[i]);
                let (mut a, mut b) = (g.lead, g.tail);
                a[i] -= k;
                b[i] -= k;
                make(a, b, &order)
            })
            .collect();
    }
    order.last = None;
    binomial_groebner(&current, &order, token)
}
