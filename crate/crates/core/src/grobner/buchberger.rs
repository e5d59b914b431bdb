//! Buchberger's algorithm with the Gebauer–Möller pair update (product and
//! chain criteria) and the normal selection strategy.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::cancel::CancelToken;
use crate::error::Result;
use crate::exactalg::GaussianRational;

use super::{MPoly, Monomial, MonomialOrder};

/// Terms sorted from largest to smallest; never contains zero coefficients.
#[derive(Clone, Debug)]
pub(crate) struct Sorted {
    pub terms: Vec<(Monomial, GaussianRational)>,
}

impl Sorted {
    pub fn from_mpoly(p: &MPoly, order: &MonomialOrder) -> Self {
        Sorted { terms: p.sorted_terms(order) }
    }

    pub fn to_mpoly(&self, nvars: usize) -> MPoly {
        MPoly::from_terms(nvars, self.terms.iter().cloned())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &GaussianRational {
        &self.terms[0].1
    }

    pub fn make_monic(&mut self) {
        if self.terms.is_empty() || self.lc().is_one() {
            return;
        }
        let inv = self.lc().inv();
        for t in &mut self.terms {
            t.1 = &t.1 * &inv;
        }
    }

    /// `self − c·x^shift·g`
    fn sub_mul(&self, c: &GaussianRational, shift: &[u32], g: &Sorted, order: &MonomialOrder) -> Sorted {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(m, x)| (mul_mono(m, shift), x * c)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Greater => out.push(a.next().expect("peeked").clone()),
                Ordering::Less => {
                    let (m, x) = b.next().expect("peeked");
                    out.push((m, -x));
                }
                Ordering::Equal => {
                    let (m, x) = a.next().expect("peeked");
                    let (_, y) = b.next().expect("peeked");
                    let d = x - &y;
                    if !d.is_zero() {
                        out.push((m.clone(), d));
                    }
                }
            }
        }
        Sorted { terms: out }
    }
}

pub(crate) fn mul_mono(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub(crate) fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn quotient(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Full reduction of `f` modulo `basis` (every term, not just the leading one).
pub(crate) fn reduce(f: &Sorted, basis: &[&Sorted], order: &MonomialOrder) -> Sorted {
    let mut p = f.clone();
    let mut rest: Vec<(Monomial, GaussianRational)> = Vec::new();
    while !p.is_zero() {
        let (m, c) = p.terms[0].clone();
        match basis.iter().find(|g| divides(g.lm(), &m)) {
            Some(g) => {
                let coef = &c / g.lc();
                p = p.sub_mul(&coef, &quotient(&m, g.lm()), g, order);
            }
            None => {
                rest.push((m, c));
                p.terms.remove(0);
            }
        }
    }
    Sorted { terms: rest }
}

fn spoly(f: &Sorted, g: &Sorted, order: &MonomialOrder) -> Sorted {
    let l = lcm(f.lm(), g.lm());
    let fs = Sorted {
        terms: f.terms.iter().map(|(m, c)| (mul_mono(m, &quotient(&l, f.lm())), c / f.lc())).collect(),
    };
    fs.sub_mul(&g.lc().inv(), &quotient(&l, g.lm()), g, order)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis (monic, sorted by increasing leading monomial).
pub fn buchberger(gens: &[MPoly], order: &MonomialOrder) -> Vec<MPoly> {
    buchberger_cancellable(gens, order, &CancelToken::new()).expect("token never cancelled")
}

pub fn buchberger_cancellable(gens: &[MPoly], order: &MonomialOrder, token: &CancelToken) -> Result<Vec<MPoly>> {
    let Some(nvars) = gens.first().map(MPoly::nvars) else {
        return Ok(Vec::new());
    };
    let sorted = groebner_sorted(gens, order, token)?;
    Ok(sorted.iter().map(|p| p.to_mpoly(nvars)).collect())
}

pub(crate) fn groebner_sorted(gens: &[MPoly], order: &MonomialOrder, token: &CancelToken) -> Result<Vec<Sorted>> {
    let mut polys: Vec<Sorted> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<Sorted> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut s = Sorted::from_mpoly(g, order);
            s.make_monic();
            s
        })
        .collect();
    inputs.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    for h in inputs {
        let basis: Vec<&Sorted> = polys.iter().zip(&active).filter(|(_, &a)| a).map(|(p, _)| p).collect();
        let mut h = reduce(&h, &basis, order);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        update(&mut polys, &mut active, &mut pairs, h);
    }

    while !pairs.is_empty() {
        token.check()?;
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pairs[a], &pairs[b]);
                let (da, db): (u32, u32) = (pa.lcm.iter().sum(), pb.lcm.iter().sum());
                da.cmp(&db)
                    .then_with(|| order.cmp(&pa.lcm, &pb.lcm))
                    .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
            })
            .expect("nonempty");
        let pair = pairs.swap_remove(best);
        let s = spoly(&polys[pair.i], &polys[pair.j], order);
        let basis: Vec<&Sorted> = polys.iter().zip(&active).filter(|(_, &a)| a).map(|(p, _)| p).collect();
        let mut h = reduce(&s, &basis, order);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        update(&mut polys, &mut active, &mut pairs, h);
    }

    let mut basis: Vec<Sorted> = polys.into_iter().zip(active).filter(|(_, a)| *a).map(|(p, _)| p).collect();
    basis.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    // minimalize, then reduce tails
    let mut minimal: Vec<Sorted> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|m| divides(m.lm(), g.lm())) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&Sorted> = minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, g)| g).collect();
        let mut g = reduce(&minimal[k], &others, order);
        g.make_monic();
        reduced.push(g);
    }
    reduced.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    Ok(reduced)
}

/// Gebauer–Möller update on adding `h`.
fn update(polys: &mut Vec<Sorted>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>, h: Sorted) {
    let hi = polys.len();
    let hm = h.lm().clone();
    let olds: Vec<usize> = (0..polys.len()).filter(|&k| active[k]).collect();

    let candidates: Vec<(usize, Monomial, bool)> = olds
        .iter()
        .map(|&g| (g, lcm(&hm, polys[g].lm()), coprime(&hm, polys[g].lm())))
        .collect();
    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    for (k, (g, l, disjoint)) in candidates.iter().enumerate() {
        let dominated_later = candidates[k + 1..].iter().any(|(_, l2, _)| divides(l2, l));
        let dominated_kept = kept.iter().any(|(_, l2, _)| divides(l2, l));
        if *disjoint || (!dominated_later && !dominated_kept) {
            kept.push((*g, l.clone(), *disjoint));
        }
    }

    pairs.retain(|p| {
        !(divides(&hm, &p.lcm)
            && lcm(polys[p.i].lm(), &hm) != p.lcm
            && lcm(polys[p.j].lm(), &hm) != p.lcm)
    });
    for (g, l, disjoint) in kept {
        if !disjoint {
            pairs.push(Pair { i: g, j: hi, lcm: l });
        }
    }
    for &g in &olds {
        if divides(&hm, polys[g].lm()) {
            active[g] = false;
        }
    }
    polys.push(h);
    active.push(true);
}

/// Remainder of `f` on division by a Gröbner basis.
pub fn normal_form_poly(f: &MPoly, gb: &[MPoly], order: &MonomialOrder) -> MPoly {
    let sorted: Vec<Sorted> = gb.iter().filter(|g| !g.is_zero()).map(|g| Sorted::from_mpoly(g, order)).collect();
    let refs: Vec<&Sorted> = sorted.iter().collect();
    reduce(&Sorted::from_mpoly(f, order), &refs, order).to_mpoly(f.nvars())
}

/// Whether every S-polynomial of `gb` reduces to zero.
pub fn is_groebner_basis(gb: &[MPoly], order: &MonomialOrder) -> bool {
    let sorted: Vec<Sorted> = gb.iter().filter(|g| !g.is_zero()).map(|g| Sorted::from_mpoly(g, order)).collect();
    let refs: Vec<&Sorted> = sorted.iter().collect();
    for i in 0..sorted.len() {
        for j in i + 1..sorted.len() {
            if !reduce(&spoly(&sorted[i], &sorted[j], order), &refs, order).is_zero() {
                return false;
            }
        }
    }
    true
}
