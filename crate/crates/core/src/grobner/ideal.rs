//! Ideals with named variables: elimination, saturation, equality.

use std::fmt;

use crate::cancel::CancelToken;
use crate::error::{Error, Result};

use super::buchberger::buchberger_cancellable;
use super::{normal_form_poly, MPoly, MonomialOrder};

/// Generators of an ideal of `ℚ(i)[vars]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealBasis {
    pub vars: Vec<String>,
    pub gens: Vec<MPoly>,
}

impl IdealBasis {
    /// Zero generators are dropped.
    pub fn new(vars: Vec<String>, gens: Vec<MPoly>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect::<Vec<_>>();
        for g in &gens {
            assert_eq!(g.nvars(), vars.len(), "generator lives in another ring");
        }
        Self { vars, gens }
    }

    pub fn zero(vars: Vec<String>) -> Self {
        Self { vars, gens: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn groebner(&self, order: &MonomialOrder, token: &CancelToken) -> Result<Vec<MPoly>> {
        buchberger_cancellable(&self.gens, order, token)
    }

    /// The same ideal, generated by its reduced degrevlex Gröbner basis.
    pub fn reduced(&self, token: &CancelToken) -> Result<IdealBasis> {
        Ok(IdealBasis { vars: self.vars.clone(), gens: self.groebner(&MonomialOrder::DegRevLex, token)? })
    }

    pub fn contains(&self, f: &MPoly) -> bool {
        let gb = self.groebner(&MonomialOrder::DegRevLex, &CancelToken::new()).expect("not cancelled");
        normal_form_poly(f, &gb, &MonomialOrder::DegRevLex).is_zero()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Whether `1` lies in the ideal.
    pub fn is_unit(&self) -> bool {
        self.contains(&MPoly::one(self.nvars()))
    }

    pub fn display_gens(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.display(&self.vars).to_string()).collect()
    }
}

impl fmt::Display for IdealBasis {
    /// `(g1, g2, …)`, or `(0)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "({})", self.display_gens().join(", "))
    }
}

/// `I ∩ ℚ(i)[remaining variables]`, as an ideal of the smaller ring.
pub fn eliminate(ideal: &IdealBasis, drop: &[usize], token: &CancelToken) -> Result<IdealBasis> {
    let n = ideal.nvars();
    let order = MonomialOrder::eliminating(n, drop);
    let gb = ideal.groebner(&order, token)?;
    let keep: Vec<usize> = (0..n).filter(|k| !drop.contains(k)).collect();
    let mut map = vec![None; n];
    for (new, &old) in keep.iter().enumerate() {
        map[old] = Some(new);
    }
    let gens = gb
        .into_iter()
        .filter(|g| drop.iter().all(|&k| !g.involves(k)))
        .map(|g| g.remap(keep.len(), &map))
        .collect();
    Ok(IdealBasis::new(keep.iter().map(|&k| ideal.vars[k].clone()).collect(), gens))
}

/// `I : m^∞`, computed as `(I + (1 − w·m)) ∩ ℚ(i)[x]` with a fresh variable `w`.
pub fn saturate(ideal: &IdealBasis, m: &[u32], token: &CancelToken) -> Result<IdealBasis> {
    let n = ideal.nvars();
    if m.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: m.len() });
    }
    let lift: Vec<Option<usize>> = (0..n).map(Some).collect();
    let mut gens: Vec<MPoly> = ideal.gens.iter().map(|g| g.remap(n + 1, &lift)).collect();
    let mut wm = m.to_vec();
    wm.push(1);
    gens.push(&MPoly::one(n + 1) - &MPoly::monomial(wm));
    let mut vars = ideal.vars.clone();
    vars.push(fresh_name(&ideal.vars));
    eliminate(&IdealBasis::new(vars, gens), &[n], token)
}

fn fresh_name(vars: &[String]) -> String {
    (0..).map(|k| format!("_w{k}")).find(|w| !vars.contains(w)).expect("unbounded supply")
}

/// Whether the two ideals coincide: each generating set reduces to zero
/// modulo a Gröbner basis of the other.
pub fn ideal_equal(a: &IdealBasis, b: &IdealBasis, token: &CancelToken) -> Result<bool> {
    if a.vars != b.vars {
        return Err(Error::RingMismatch);
    }
    let order = MonomialOrder::DegRevLex;
    let ga = a.groebner(&order, token)?;
    let gb = b.groebner(&order, token)?;
    Ok(a.gens.iter().all(|f| normal_form_poly(f, &gb, &order).is_zero())
        && b.gens.iter().all(|f| normal_form_poly(f, &ga, &order).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grobner::parse_mpoly;

    fn ideal(vars: &[&str], gens: &[&str]) -> IdealBasis {
        let v: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let g = gens.iter().map(|s| parse_mpoly(s, &v).unwrap()).collect();
        IdealBasis::new(v, g)
    }

    fn tok() -> CancelToken {
        CancelToken::new()
    }

    #[test]
    fn elimination() {
        let i = ideal(&["t", "x", "y"], &["x - t^2", "y - t^3"]);
        let e = eliminate(&i, &[0], &tok()).unwrap();
        assert!(ideal_equal(&e, &ideal(&["x", "y"], &["x^3 - y^2"]), &tok()).unwrap());

        let e = eliminate(&ideal(&["x", "y"], &["x"]), &[1], &tok()).unwrap();
        assert_eq!(e, ideal(&["x"], &["x"]));

        let e = eliminate(&ideal(&["x", "y"], &["x*y - 1"]), &[1], &tok()).unwrap();
        assert!(e.is_zero_ideal());
    }

    #[test]
    fn saturation() {
        let s = saturate(&ideal(&["x", "y"], &["x*(y - 1)"]), &[1, 0], &tok()).unwrap();
        assert!(ideal_equal(&s, &ideal(&["x", "y"], &["y - 1"]), &tok()).unwrap());

        let s = saturate(&ideal(&["x", "y"], &["y - 1"]), &[1, 0], &tok()).unwrap();
        assert!(ideal_equal(&s, &ideal(&["x", "y"], &["y - 1"]), &tok()).unwrap());

        let p = ideal(&["x1", "x2", "x3"], &["x1^2*x2*x3 - 1"]);
        let s = saturate(&p, &[1, 1, 1], &tok()).unwrap();
        assert!(ideal_equal(&s, &p, &tok()).unwrap());
    }

    #[test]
    fn equality() {
        let v = ["x", "y"];
        assert!(ideal_equal(&ideal(&v, &["x", "y"]), &ideal(&v, &["y", "x"]), &tok()).unwrap());
        assert!(!ideal_equal(&ideal(&v, &["x"]), &ideal(&v, &["x^2"]), &tok()).unwrap());
        assert_eq!(
            ideal_equal(&ideal(&v, &["x"]), &ideal(&["x"], &["x"]), &tok()),
            Err(Error::RingMismatch)
        );
    }

    #[test]
    fn cancellation() {
        let t = CancelToken::new();
        t.cancel();
        let i = ideal(&["x", "y", "z"], &["x^2 - y", "x^3 - z", "y*z - x"]);
        assert_eq!(i.groebner(&MonomialOrder::Lex, &t), Err(Error::Cancelled));
    }

    #[test]
    fn display() {
        assert_eq!(ideal(&["t1", "t2", "t3"], &["t2*t3 - 1"]).to_string(), "(t2*t3 - 1)");
        assert_eq!(IdealBasis::zero(vec!["t1".into()]).to_string(), "(0)");
    }
}
