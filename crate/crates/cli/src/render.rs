//! JSON and text forms of library values. Rationals are `"p/q"` strings (or
//! `"p"` when integral) so that payloads are exact and byte-stable.

use serde_json::{json, Value};

use germring::exactalg::GaussianRational;
use germring::grobner::{IdealBasis, MPoly};
use germring::presentations::{IndependenceCertificate, Witness};
use germring::semigroup::HilbertBasis;

pub fn coeff(c: &GaussianRational) -> Value {
    json!({ "re": c.re.to_string(), "im": c.im.to_string() })
}

pub fn mpoly(p: &MPoly, vars: &[String]) -> Value {
    let terms: Vec<Value> = p.terms().map(|(m, c)| json!({ "exponents": m, "coeff": coeff(c) })).collect();
    json!({ "text": p.display(vars).to_string(), "terms": terms })
}

pub fn ideal(i: &IdealBasis) -> Value {
    let gens: Vec<Value> = i.gens.iter().map(|g| mpoly(g, &i.vars)).collect();
    json!({ "vars": i.vars, "text": i.to_string(), "gens": gens })
}

pub fn monomial(v: &[i64], names: &[String]) -> String {
    MPoly::monomial(v.iter().map(|&e| e as u32).collect()).display(names).to_string()
}

pub fn monomials(basis: &HilbertBasis, names: &[String]) -> Vec<String> {
    basis.generators.iter().map(|g| monomial(g, names)).collect()
}

pub fn vector(v: &[i64]) -> String {
    format!("({})", v.iter().map(i64::to_string).collect::<Vec<_>>().join(", "))
}

fn witness(w: &Witness) -> Value {
    match w {
        Witness::ConstantDifference { j, k, difference } => {
            json!({ "kind": "ConstantDifference", "pair": [j, k], "difference": difference.to_string() })
        }
        Witness::Degrees(d) => json!({ "kind": "Degrees", "degrees": d }),
        Witness::ConstantExponent { index } => json!({ "kind": "ConstantExponent", "index": index }),
        Witness::ZeroDeterminant => json!({ "kind": "ZeroDeterminant" }),
    }
}

pub fn witness_text(w: &Witness) -> String {
    match w {
        Witness::ConstantDifference { j, k, difference } => format!("P{j} - P{k} = {difference} is constant"),
        Witness::Degrees(d) => format!("degrees {d:?} are not positive and distinct"),
        Witness::ConstantExponent { index } => format!("P{index} is constant"),
        Witness::ZeroDeterminant => "determinant is 0".to_string(),
    }
}

pub fn certificate(kind: &str, c: &IndependenceCertificate) -> Value {
    let trace: Vec<Value> = c.trace.iter().map(|h| json!({ "name": h.name, "holds": h.holds })).collect();
    json!({
        "criterion": kind,
        "verdict": c.verdict.to_string(),
        "over": format!("{:?}", c.over),
        "witness": c.witness.as_ref().map(witness),
        "determinant": c.determinant.as_ref().map(|d| d.to_string()),
        "trace": trace,
    })
}

pub fn certificate_text(kind: &str, c: &IndependenceCertificate) -> String {
    let mut out = format!("{kind}: {} over {:?}", c.verdict, c.over);
    if let Some(d) = &c.determinant {
        out += &format!("\n  det = {d}");
    }
    if let Some(w) = &c.witness {
        out += &format!("\n  witness: {}", witness_text(w));
    }
    for h in &c.trace {
        out += &format!("\n  [{}] {}", if h.holds { "x" } else { " " }, h.name);
    }
    out
}
