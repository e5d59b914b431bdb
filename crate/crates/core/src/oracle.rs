//! Brute-force oracles: exhaustive enumeration against which the fast
//! algorithms are checked. Nothing here calls into the algorithms it checks.

use std::collections::HashSet;

use crate::semigroup::SupportCensus;

/// Calls `f` on every `a ∈ ℕ^r` with `|a| ≤ max_deg`, graded by degree.
pub fn for_each_vector(r: usize, max_deg: u32, mut f: impl FnMut(&[i64])) {
    fn rec(a: &mut Vec<i64>, k: usize, left: i64, f: &mut dyn FnMut(&[i64])) {
        if k + 1 == a.len() {
            a[k] = left;
            f(a);
            return;
        }
        for x in (0..=left).rev() {
            a[k] = x;
            rec(a, k + 1, left - x, f);
        }
    }
    if r == 0 {
        f(&[]);
        return;
    }
    let mut a = vec![0i64; r];
    for d in 0..=max_deg as i64 {
        rec(&mut a, 0, d, &mut f);
    }
}

fn weight(ell: &[i64], a: &[i64]) -> i64 {
    ell.iter().zip(a).map(|(l, x)| l * x).sum()
}

/// Nonzero `a ∈ ℕ^r`, `|a| ≤ max_deg`, with `ℓ·a ≥ 0`.
pub fn semigroup_elements(ell: &[i64], max_deg: u32) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for_each_vector(ell.len(), max_deg, |a| {
        if a.iter().any(|&x| x != 0) && weight(ell, a) >= 0 {
            out.push(a.to_vec());
        }
    });
    out
}

/// Irreducible elements of `H` of degree at most `max_deg`: those that are
/// not `b + c` with `b, c ∈ H` both nonzero. Sorted lexicographically.
pub fn brute_irreducibles(ell: &[i64], max_deg: u32) -> Vec<Vec<i64>> {
    let elems = semigroup_elements(ell, max_deg);
    let set: HashSet<&[i64]> = elems.iter().map(|v| v.as_slice()).collect();
    let mut out: Vec<Vec<i64>> = elems
        .iter()
        .filter(|a| {
            let mut b = vec![0i64; a.len()];
            !splits(a, &mut b, 0, &set)
        })
        .cloned()
        .collect();
    out.sort();
    out
}

/// Whether some `0 ≠ b < a` has both `b` and `a − b` in the set.
fn splits(a: &[i64], b: &mut Vec<i64>, k: usize, set: &HashSet<&[i64]>) -> bool {
    if k == a.len() {
        if b.iter().all(|&x| x == 0) || b.as_slice() == a {
            return false;
        }
        let c: Vec<i64> = a.iter().zip(b.iter()).map(|(x, y)| x - y).collect();
        return set.contains(b.as_slice()) && set.contains(c.as_slice());
    }
    for x in 0..=a[k] {
        b[k] = x;
        if splits(a, b, k + 1, set) {
            return true;
        }
    }
    b[k] = 0;
    false
}

/// `L_t` by listing the supports of all elements up to degree
/// `r + (r − 1)·max|ℓ|`. A support `S` holding a positive index `p` is
/// realized by `1_S + M·e_p` with `M ≤ Σ|ℓ_neg| ≤ (r − 1)·max|ℓ|`, and one
/// without is realized by `1_S` or not at all, so the bound is enough.
pub fn brute_census(ell: &[i64]) -> SupportCensus {
    let r = ell.len();
    let top = ell.iter().map(|l| l.unsigned_abs()).max().unwrap_or(0) as u32;
    let bound = r as u32 + (r as u32).saturating_sub(1) * top;
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    for_each_vector(r, bound, |a| {
        if weight(ell, a) >= 0 {
            seen.insert(a.iter().map(|&x| x > 0).collect());
        }
    });
    let mut l = vec![0u64; r.saturating_sub(1)];
    for s in &seen {
        let t = s.iter().filter(|&&b| b).count();
        if (1..r).contains(&t) {
            l[t - 1] += 1;
        }
    }
    let n = (1..r as u64).map(|t| binom(r as u64, t) + 1 - binom(r as u64 - 2, t - 1)).collect();
    SupportCensus { l, n }
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Visits every nonzero `u ∈ [−bound, bound]^m` with `rows·u = 0`, stopping
/// early once `visit` returns false. Returns the number visited.
///
/// Meet in the middle: all partial sums of the left half of the columns are
/// sorted, and each right-half vector looks up the negated sum.
pub fn kernel_box(rows: &[Vec<i64>], m: usize, bound: i64, mut visit: impl FnMut(&[i64]) -> bool) -> u64 {
    let Some(pack) = Packer::new(rows, m, bound) else {
        return kernel_box_dfs(rows, m, bound, &mut visit);
    };
    // the sorted half is held in memory; 7^8 entries is about 200 MB
    let h = m.div_ceil(2).min(8);
    let width = 2 * bound + 1;
    let mut left: Vec<(u128, u64)> = Vec::with_capacity((width as usize).pow(h as u32));
    for_each_box(h, bound, |x, code| {
        let s: Vec<i64> = rows.iter().map(|row| row[..h].iter().zip(x).map(|(a, b)| a * b).sum()).collect();
        left.push((pack.key(&s), code));
    });
    left.sort_unstable();

    let mut u = vec![0i64; m];
    let mut count = 0u64;
    let mut go = true;
    for_each_box(m - h, bound, |y, _| {
        if !go {
            return;
        }
        let s: Vec<i64> = rows.iter().map(|row| -row[h..].iter().zip(y).map(|(a, b)| a * b).sum::<i64>()).collect();
        let key = pack.key(&s);
        let start = left.partition_point(|e| e.0 < key);
        for &(k, code) in &left[start..] {
            if k != key || !go {
                break;
            }
            decode(code, bound, &mut u[..h]);
            u[h..].copy_from_slice(y);
            if u.iter().all(|&x| x == 0) {
                continue;
            }
            count += 1;
            go = visit(&u);
        }
    });
    count
}

/// Packs bounded integer vectors into a `u128`, 16 bits per row.
struct Packer {
    offset: i64,
}

impl Packer {
    fn new(rows: &[Vec<i64>], m: usize, bound: i64) -> Option<Self> {
        let reach = rows.iter().map(|row| bound * row[..m].iter().map(|a| a.abs()).sum::<i64>()).max().unwrap_or(0);
        (rows.len() <= 8 && 2 * reach < 1 << 16).then_some(Packer { offset: reach })
    }

    fn key(&self, s: &[i64]) -> u128 {
        s.iter().fold(0u128, |acc, &x| (acc << 16) | (x + self.offset) as u128)
    }
}

/// Every `x ∈ [−bound, bound]^n` with its base-`2·bound+1` code.
fn for_each_box(n: usize, bound: i64, mut f: impl FnMut(&[i64], u64)) {
    let width = (2 * bound + 1) as u64;
    let mut x = vec![-bound; n];
    let total = width.pow(n as u32);
    for code in 0..total {
        f(&x, code);
        for v in x.iter_mut() {
            if *v < bound {
                *v += 1;
                break;
            }
            *v = -bound;
        }
    }
}

fn decode(mut code: u64, bound: i64, out: &mut [i64]) {
    let width = (2 * bound + 1) as u64;
    for v in out.iter_mut() {
        *v = (code % width) as i64 - bound;
        code /= width;
    }
}

/// Depth-first fallback for matrices whose sums do not pack.
fn kernel_box_dfs(rows: &[Vec<i64>], m: usize, bound: i64, visit: &mut dyn FnMut(&[i64]) -> bool) -> u64 {
    // reach[k][i] = bound · Σ_{j ≥ k} |rows[i][j]|
    let mut reach = vec![vec![0i64; rows.len()]; m + 1];
    for k in (0..m).rev() {
        for (i, row) in rows.iter().enumerate() {
            reach[k][i] = reach[k + 1][i] + bound * row[k].abs();
        }
    }
    let mut u = vec![0i64; m];
    let mut sums = vec![0i64; rows.len()];
    let mut count = 0u64;
    let mut go = true;
    box_rec(rows, &reach, bound, 0, &mut u, &mut sums, &mut count, &mut go, visit);
    count
}

#[allow(clippy::too_many_arguments)]
fn box_rec(
    rows: &[Vec<i64>],
    reach: &[Vec<i64>],
    bound: i64,
    k: usize,
    u: &mut Vec<i64>,
    sums: &mut Vec<i64>,
    count: &mut u64,
    go: &mut bool,
    visit: &mut dyn FnMut(&[i64]) -> bool,
) {
    if !*go {
        return;
    }
    if sums.iter().zip(&reach[k]).any(|(s, r)| s.abs() > *r) {
        return;
    }
    if k == u.len() {
        if u.iter().any(|&x| x != 0) {
            *count += 1;
            *go = visit(u);
        }
        return;
    }
    for x in -bound..=bound {
        u[k] = x;
        for (i, row) in rows.iter().enumerate() {
            sums[i] += x * row[k];
        }
        box_rec(rows, reach, bound, k + 1, u, sums, count, go, visit);
        for (i, row) in rows.iter().enumerate() {
            sums[i] -= x * row[k];
        }
    }
    u[k] = 0;
}

/// Normal forms of monomials modulo a binomial Gröbner basis, with
/// exponents packed into 16-bit lanes so that a division test is four word
/// operations. Built for the toric oracle, where the same basis reduces
/// millions of monomials. Holds up to 16 variables.
pub struct PackedReducer {
    rules: Vec<PackedRule>,
    n: usize,
    // rules whose lead support lies inside each support mask, as CSR
    start: Vec<u32>,
    index: Vec<u16>,
}

struct PackedRule {
    support: u16,
    lead: [u64; 4],
    tail: [u64; 4],
}

const GUARD: u64 = 0x8000_8000_8000_8000;

fn pack(e: &[u32]) -> [u64; 4] {
    let mut w = [0u64; 4];
    for (k, &x) in e.iter().enumerate() {
        w[k / 4] |= (x as u64) << (16 * (k % 4));
    }
    w
}

fn support_mask(e: &[u32]) -> u16 {
    e.iter().enumerate().filter(|(_, &x)| x > 0).fold(0, |acc, (k, _)| acc | 1 << k)
}

/// Bit `k` set when lane `k` is nonzero.
fn lane_support(w: &[u64; 4]) -> u16 {
    const LOW: u64 = 0x7fff_7fff_7fff_7fff;
    let mut mask = 0u16;
    for (i, &x) in w.iter().enumerate() {
        let b = (((x & LOW) + LOW) & GUARD) >> 15;
        mask |= (((b | b >> 15 | b >> 30 | b >> 45) & 0xf) as u16) << (4 * i);
    }
    mask
}

impl PackedReducer {
    /// `pairs` are `(lead, tail)` exponent vectors. `None` when there are
    /// more than 16 variables or when some exponent met while reducing
    /// monomials of degree at most `max_entry` per variable could reach
    /// 2^15. Reduction preserves the `weights`-degree, which bounds every
    /// exponent.
    pub fn new(pairs: &[(Vec<u32>, Vec<u32>)], n: usize, weights: &[u64], max_entry: u32) -> Option<Self> {
        if n > 16 || pairs.len() > u16::MAX as usize || weights.len() != n || weights.iter().any(|&w| w == 0) {
            return None;
        }
        let top: u64 = weights.iter().sum::<u64>() * max_entry as u64;
        let top = pairs.iter().flat_map(|(l, t)| {
            let d = |e: &[u32]| e.iter().zip(weights).map(|(&x, &w)| x as u64 * w).sum::<u64>();
            [d(l), d(t)]
        }).fold(top, u64::max);
        if top >= 1 << 15 {
            return None;
        }
        let rules: Vec<PackedRule> = pairs
            .iter()
            .map(|(l, t)| PackedRule { support: support_mask(l), lead: pack(l), tail: pack(t) })
            .collect();
        let mut start = vec![0u32];
        let mut index = Vec::new();
        for mask in 0..1u32 << n {
            index.extend((0..rules.len() as u16).filter(|&k| rules[k as usize].support as u32 & !mask == 0));
            start.push(index.len() as u32);
        }
        Some(PackedReducer { rules, n, start, index })
    }

    fn normal_form(&self, mut m: [u64; 4]) -> [u64; 4] {
        'outer: loop {
            let mask = lane_support(&m) as usize;
            let range = self.start[mask] as usize..self.start[mask + 1] as usize;
            for &k in &self.index[range] {
                let r = &self.rules[k as usize];
                if (0..4).all(|i| ((m[i] | GUARD) - r.lead[i]) & GUARD == GUARD) {
                    for i in 0..4 {
                        m[i] = m[i] - r.lead[i] + r.tail[i];
                    }
                    continue 'outer;
                }
            }
            return m;
        }
    }

    fn split(u: &[i64]) -> ([u64; 4], [u64; 4]) {
        let (mut pos, mut neg) = ([0u64; 4], [0u64; 4]);
        for (k, &x) in u.iter().enumerate() {
            let w = if x > 0 { &mut pos } else { &mut neg };
            w[k / 4] |= (x.unsigned_abs()) << (16 * (k % 4));
        }
        (pos, neg)
    }

    /// Whether `x^{u+} − x^{u−}` reduces to zero.
    pub fn reduces_to_zero(&self, u: &[i64]) -> bool {
        debug_assert_eq!(u.len(), self.n);
        let (pos, neg) = Self::split(u);
        self.normal_form(pos) == self.normal_form(neg)
    }

    /// Whether some rule `g` is a conformal summand of `u` or of `−u`, that is
    /// `g_lead ≤ u+` and `g_tail ≤ u−` or the same with the sides swapped.
    /// Then `x^{u+} − x^{u−} = x^{a}(x^{g_lead} − x^{g_tail}) ± x^{b}(x^{w+} − x^{w−})`
    /// for the smaller kernel vector `w = u ∓ g`, so `u` reduces to zero
    /// whenever `w` does.
    pub fn has_conformal_rule(&self, u: &[i64]) -> bool {
        let (pos, neg) = Self::split(u);
        let below = |a: &[u64; 4], b: &[u64; 4]| (0..4).all(|i| ((b[i] | GUARD) - a[i]) & GUARD == GUARD);
        [(pos, neg), (neg, pos)].iter().any(|(p, q)| {
            let mask = lane_support(p) as usize;
            self.index[self.start[mask] as usize..self.start[mask + 1] as usize].iter().any(|&k| {
                let r = &self.rules[k as usize];
                below(&r.lead, p) && below(&r.tail, q)
            })
        })
    }
}
