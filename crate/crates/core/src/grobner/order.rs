//! Monomial orders. Variable `x_1` ranks highest.

use std::cmp::Ordering;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Degree with positive integer weights, ties broken reverse
    /// lexicographically.
    WeightedDegRevLex(Vec<u64>),
    /// Elimination order: degrevlex on the variables flagged `true`, ties
    /// broken by degrevlex on the others.
    Block(Vec<bool>),
}

impl MonomialOrder {
    /// Block order eliminating the listed variables.
    pub fn eliminating(nvars: usize, drop: &[usize]) -> Self {
        let mut flags = vec![false; nvars];
        for &k in drop {
            flags[k] = true;
        }
        MonomialOrder::Block(flags)
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::DegRevLex => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                da.cmp(&db).then_with(|| revlex(a.iter(), b.iter()))
            }
            MonomialOrder::WeightedDegRevLex(w) => {
                let deg = |m: &[u32]| -> u64 { m.iter().zip(w).map(|(&e, &x)| e as u64 * x).sum() };
                deg(a).cmp(&deg(b)).then_with(|| revlex(a.iter(), b.iter()))
            }
            MonomialOrder::Block(flags) => {
                let part = |m: &'_ [u32], want: bool| -> Vec<u32> {
                    m.iter().zip(flags).filter(|(_, &f)| f == want).map(|(&e, _)| e).collect()
                };
                let (ea, eb) = (part(a, true), part(b, true));
                MonomialOrder::DegRevLex
                    .cmp(&ea, &eb)
                    .then_with(|| MonomialOrder::DegRevLex.cmp(&part(a, false), &part(b, false)))
            }
        }
    }
}

/// Reverse lexicographic tie-break for equal degrees: the monomial with the
/// smaller exponent in the last differing variable is larger.
fn revlex<'a>(a: impl DoubleEndedIterator<Item = &'a u32>, b: impl DoubleEndedIterator<Item = &'a u32>) -> Ordering {
    for (x, y) in a.rev().zip(b.rev()) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use Ordering::*;

    #[test]
    fn orders() {
        let o = MonomialOrder::DegRevLex;
        assert_eq!(o.cmp(&[1, 0, 0], &[0, 1, 0]), Greater);
        assert_eq!(o.cmp(&[1, 0, 1], &[0, 2, 0]), Less);
        assert_eq!(o.cmp(&[0, 0, 3], &[2, 0, 0]), Greater);
        assert_eq!(MonomialOrder::Lex.cmp(&[1, 0, 0], &[0, 5, 5]), Greater);
        let b = MonomialOrder::eliminating(3, &[2]);
        assert_eq!(b.cmp(&[0, 0, 1], &[5, 5, 0]), Greater);
        assert_eq!(b.cmp(&[2, 0, 1], &[0, 1, 1]), Greater);
        let w = MonomialOrder::WeightedDegRevLex(vec![1, 3]);
        assert_eq!(w.cmp(&[2, 0], &[0, 1]), Less);
    }
}
