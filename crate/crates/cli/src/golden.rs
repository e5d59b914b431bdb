//! Replays the worked examples stage by stage against stored goldens.
//!
//! A golden names its input family, optionally a supplied ideal of
//! relations, and an ordered list of stages with expected values. Ideals
//! are compared by ideal equality, generator sets as sets, everything else
//! verbatim.

use std::path::Path;

use serde_json::{json, Value};

use germring::germ::{order_vector, FamilyFile, GermFamily};
use germring::grobner::{ideal_equal, parse_mpoly, IdealBasis};
use germring::presentations::{bar, defining_ideal, relation_lattice, shol_from_ideal, Exactness, Presentation};
use germring::semigroup::{hilbert_basis, Variant};
use germring::toric::{generator_names, monomial_map, toric_ideal, x_names};
use germring::{CancelToken, Error};

use crate::{render, Failure, Outcome};

const EX361: &str = include_str!("../goldens/v1/ex3.6.1.json");
const EX362: &str = include_str!("../goldens/v1/ex3.6.2.json");

pub fn example(name: &str, file: Option<&Path>, token: &CancelToken) -> Result<Outcome, Failure> {
    let text = match (name, file) {
        (_, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?,
        ("3.6.1", None) => EX361.to_string(),
        ("3.6.2", None) => EX362.to_string(),
        _ => return Err(Failure::Usage(format!("unknown example `{name}`; known: 3.6.1, 3.6.2"))),
    };
    let golden: Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("bad golden file: {e}")))?;
    let ctx = Context::new(&golden, token)?;
    let stages = golden["stages"].as_array().ok_or_else(|| Failure::Usage("golden has no stages".into()))?;

    let mut report = Vec::new();
    let mut lines = vec![format!("example {name}")];
    let mut failed = Vec::new();
    for stage in stages {
        let id = stage["stage"].as_str().unwrap_or("?");
        let expected = &stage["expected"];
        let (status, actual) = match ctx.compare(id, expected) {
            Ok((true, actual)) => ("match", actual),
            Ok((false, actual)) => ("mismatch", actual),
            Err(e) => ("error", json!({ "code": e.code(), "message": e.to_string() })),
        };
        if status != "match" {
            failed.push(id.to_string());
        }
        lines.push(format!("  {id}: {status}"));
        report.push(json!({ "stage": id, "status": status, "expected": expected, "actual": actual }));
    }
    lines.push(if failed.is_empty() { "all stages match".into() } else { format!("mismatched: {}", failed.join(", ")) });
    let outcome = Outcome {
        payload: json!({ "example": name, "stages": report, "allMatch": failed.is_empty() }),
        text: lines.join("\n"),
    };
    if failed.is_empty() {
        Ok(outcome)
    } else {
        Err(Failure::Violation {
            code: "GoldenMismatch",
            message: format!("stages differ from the golden: {}", failed.join(", ")),
            outcome,
        })
    }
}

struct Context<'a> {
    fam: GermFamily,
    ell: Vec<i64>,
    p: Presentation,
    token: &'a CancelToken,
}

impl<'a> Context<'a> {
    fn new(golden: &Value, token: &'a CancelToken) -> Result<Self, Failure> {
        let file: FamilyFile = serde_json::from_value(golden["family"].clone())
            .map_err(|e| Failure::Usage(format!("bad family in golden: {e}")))?;
        let fam = file.into_family()?;
        let ell = order_vector(&fam);
        let p = match golden["relations"].as_array() {
            Some(rels) => {
                let vars = x_names(fam.len());
                let gens = rels
                    .iter()
                    .map(|g| parse_mpoly(g.as_str().unwrap_or(""), &vars))
                    .collect::<Result<Vec<_>, _>>()?;
                Presentation { relations: IdealBasis::new(vars, gens), exactness: Exactness::LowerBound }
            }
            None => defining_ideal(&fam, token)?,
        };
        Ok(Context { fam, ell, p, token })
    }

    /// Whether the stage matches, and the computed value.
    fn compare(&self, stage: &str, expected: &Value) -> Result<(bool, Value), Error> {
        let same = |actual: Value| (actual == *expected, actual);
        Ok(match stage {
            "orderVector" => same(json!(self.ell)),
            "relationLattice" => same(json!(relation_lattice(&self.fam)?.basis)),
            "relationConstants" => {
                let l = relation_lattice(&self.fam)?;
                same(json!(l.constants.iter().map(|c| c.to_string()).collect::<Vec<_>>()))
            }
            "exactness" => same(json!(self.p.exactness.to_string())),
            "definingIdeal" => self.ideal(&self.p.relations, expected)?,
            "barIdeal" => self.ideal(&bar(&self.p).relations, expected)?,
            "hilbertBasis" => {
                let mut actual = hilbert_basis(&self.ell).generators;
                let mut want: Vec<Vec<i64>> = serde_json::from_value(expected.clone()).unwrap_or_default();
                let shown = json!(actual);
                actual.sort();
                want.sort();
                (actual == want, shown)
            }
            "generatorMonomials" => {
                let basis = hilbert_basis(&self.ell);
                same(json!(render::monomials(&basis, &x_names(self.ell.len()))))
            }
            "generatorNames" => same(json!(generator_names(&hilbert_basis(&self.ell).generators))),
            "toricIdeal" => {
                let t = toric_ideal(&monomial_map(&self.ell, Variant::N), self.token)?;
                self.ideal(&t.ideal, expected)?
            }
            "sholRelations" => {
                let s = shol_from_ideal(&self.ell, &self.p, self.token)?;
                self.ideal(&s.relations, expected)?
            }
            other => (false, json!({ "error": format!("unknown stage `{other}`") })),
        })
    }

    /// `expected` is `{"vars": [...], "gens": ["..."]}`.
    fn ideal(&self, actual: &IdealBasis, expected: &Value) -> Result<(bool, Value), Error> {
        let shown = json!({ "vars": actual.vars, "gens": actual.display_gens() });
        let vars: Vec<String> = serde_json::from_value(expected["vars"].clone()).unwrap_or_default();
        if vars != actual.vars {
            return Ok((false, shown));
        }
        let gens = expected["gens"]
            .as_array()
            .map(|a| a.iter().map(|g| parse_mpoly(g.as_str().unwrap_or(""), &vars)).collect::<Result<Vec<_>, _>>())
            .transpose()?
            .unwrap_or_default();
        let want = IdealBasis::new(vars, gens);
        Ok((ideal_equal(actual, &want, self.token)?, shown))
    }
}
