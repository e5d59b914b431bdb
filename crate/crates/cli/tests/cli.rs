use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn family(name: &str) -> String {
    root().join("families").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_germring")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    (code(&out), serde_json::from_slice(&out.stdout).expect("JSON on stdout"))
}

fn error_code(v: &Value) -> &str {
    v["error"]["code"].as_str().unwrap()
}

#[test]
fn holomorphic_presentation_of_the_first_example() {
    let out = run(&["present", "--shol", "-f", &family("ex361.json")]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("(t2*t3 - 1)"), "{}", stdout(&out));
    let (c, v) = json(&["present", "--shol", "-f", &family("ex361.json")]);
    assert_eq!(c, 0);
    assert_eq!(v["payload"]["relations"]["vars"], serde_json::json!(["t1", "t2", "t3"]));
}

#[test]
fn order_of_z() {
    let out = run(&["ord", "-e", "z", "--at", "0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn toric_ideal_of_the_second_example() {
    let (c, v) = json(&["toric", "--ell", "1,1,-1,-1"]);
    assert_eq!(c, 0);
    let rel = &v["payload"]["relations"];
    assert_eq!(rel["vars"], serde_json::json!(["t1", "t2", "t13", "t14", "t23", "t24"]));
    assert_eq!(rel["gens"].as_array().unwrap().len(), 3);
}

#[test]
fn user_relations_for_an_abstract_family() {
    let out = run(&["present", "--shol", "-f", &family("ex362.json"), "--p", &family("ex362.p.txt")]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("t13*t14 - 1") && text.contains("LowerBound"), "{text}");
}

#[test]
fn examples_replay_against_their_goldens() {
    for name in ["3.6.1", "3.6.2"] {
        let (c, v) = json(&["example", name]);
        assert_eq!(c, 0, "{name}");
        assert_eq!(v["payload"]["allMatch"], Value::Bool(true));
    }
    let (c, v) = json(&["example", "3.7"]);
    assert_eq!((c, error_code(&v)), (2, "UsageError"));
}

#[test]
fn a_wrong_golden_is_reported() {
    let golden = root().join("crates/cli/goldens/v1/ex3.6.1.json");
    let mut g: Value = serde_json::from_str(&std::fs::read_to_string(golden).unwrap()).unwrap();
    g["stages"][0]["expected"] = serde_json::json!([1, -2, 1]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, g.to_string()).unwrap();
    let (c, v) = json(&["example", "3.6.1", "--golden", path.to_str().unwrap()]);
    assert_eq!((c, error_code(&v)), (5, "GoldenMismatch"));
    assert_eq!(v["payload"]["stages"][0]["status"], "mismatch");
    assert_eq!(v["payload"]["stages"][1]["status"], "match");
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32, &str)] = &[
        (&["ord", "-e", "z +"], 3, "SyntaxError"),
        (&["ord", "-e", "exp(1/z)"], 3, "NonPolynomialExponent"),
        (&["ord", "-e", "exp(z) + 1"], 3, "NotNormalForm"),
        (&["ord", "-e", "1/(z - z)"], 3, "DivisionByZero"),
        (&["thm24", "2", "2", "1"], 2, "BadIndices"),
        (&["present", "--s", "-e", "exp(z)", "-e", "exp(z+1)"], 4, "NonRationalConstant"),
        (&["sweep", "thm22", "--count", "0"], 2, "UsageError"),
        (&["sweep", "nothing"], 2, "UsageError"),
    ];
    for (args, want, name) in cases {
        let (c, v) = json(args);
        assert_eq!((c, error_code(&v)), (*want, *name), "{args:?}");
    }
    let (c, v) = json(&["present", "--sbarhol", "--gen-cap", "1", "-f", &family("ex361.json")]);
    assert_eq!((c, error_code(&v)), (4, "SizeGuard"));
}

#[test]
fn relations_survive_an_irrational_constant() {
    let (c, v) = json(&["relations", "-e", "exp(z)", "-e", "exp(z+1)"]);
    assert_eq!(c, 0);
    assert!(v["payload"]["idealError"].is_object() || v["payload"]["idealError"].is_string());
}

#[test]
fn certificates() {
    let (c, v) = json(&["indep", "--poly", "z", "--poly", "z^2"]);
    assert_eq!(c, 0);
    assert!(v.to_string().contains("AlgebraicallyIndependent"));
    let (c, v) = json(&["indep", "--poly", "z", "--poly", "z+1"]);
    assert_eq!(c, 0);
    assert!(v.to_string().contains("ConstantDifference"));
}

#[test]
fn sweeps_are_deterministic() {
    let args = ["--json", "sweep", "thm22", "--seed", "3", "--count", "12"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn emitted_families_are_accepted_back() {
    let (c, v) = json(&["classify", "-f", &family("ex361.json")]);
    assert_eq!(c, 0);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fam.json");
    std::fs::write(&path, v["payload"]["family"].to_string()).unwrap();
    let (c, again) = json(&["classify", "-f", path.to_str().unwrap()]);
    assert_eq!(c, 0);
    assert_eq!(again, v);
}

fn payload_schema(command: &str) -> jsonschema::Validator {
    let text = std::fs::read_to_string(root().join("docs/schemas/payloads.schema.json")).unwrap();
    let doc: Value = serde_json::from_str(&text).unwrap();
    let wrapped = serde_json::json!({ "$ref": format!("#/$defs/{command}"), "$defs": doc["$defs"] });
    jsonschema::validator_for(&wrapped).expect("schema compiles")
}

#[test]
fn payloads_match_the_published_schemas() {
    let text = std::fs::read_to_string(root().join("docs/schemas/payloads.schema.json")).unwrap();
    let envelope = jsonschema::validator_for(&serde_json::from_str::<Value>(&text).unwrap()).unwrap();
    let ex361 = family("ex361.json");
    let cases: Vec<(&str, Vec<&str>)> = vec![
        ("ord", vec!["ord", "-f", &ex361]),
        ("classify", vec!["classify", "-f", &ex361]),
        ("semigroup", vec!["semigroup", "-f", &ex361]),
        ("semigroup", vec!["semigroup", "--tilde", "--ell", "1,-1"]),
        ("census", vec!["census", "--ell", "1,-2,0"]),
        ("toric", vec!["toric", "--ell", "1,1,-1,-1"]),
        ("check-thm22", vec!["check-thm22", "--ell", "2,-4,-2"]),
        ("check-thm23", vec!["check-thm23", "--ell", "1,-2,0"]),
        ("thm24", vec!["thm24", "1", "2", "3"]),
        ("relations", vec!["relations", "-f", &ex361]),
        ("relations", vec!["relations", "-e", "exp(z)", "-e", "exp(z+1)"]),
        ("present", vec!["present", "--sbarhol", "-f", &ex361]),
        ("indep", vec!["indep", "--poly", "z", "--poly", "z+1", "--wronskian", "-e", "exp(z)", "-e", "z"]),
        ("example", vec!["example", "3.6.2"]),
        ("sweep", vec!["sweep", "thm23", "--count", "3"]),
    ];
    for (command, args) in cases {
        let (c, v) = json(&args);
        assert_eq!(c, 0, "{args:?}");
        assert!(envelope.is_valid(&v), "{args:?}");
        let errors: Vec<String> = payload_schema(command).iter_errors(&v["payload"]).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
    let (_, v) = json(&["example", "nothing"]);
    assert!(envelope.is_valid(&v));
}
