//! End-to-end runs of the command-line front end on the bundled data files.

mod common;

use common::data_path;
use diffdim::cli::{run_with, Outcome};
use diffdim::dimension::OmegaOptions;
use diffdim::system::parse_system;
use jsonschema::JSONSchema;
use serde_json::Value;

fn cli(args: &[&str]) -> Outcome {
    let mut full = vec!["diffdim"];
    full.extend_from_slice(args);
    run_with(full, OmegaOptions::default())
}

fn schema(name: &str) -> JSONSchema {
    let path = format!("{}/schemas/{name}.schema.json", env!("CARGO_MANIFEST_DIR"));
    let value: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    JSONSchema::compile(&value).unwrap_or_else(|e| panic!("schema {name}: {e}"))
}

fn assert_conforms(schema_name: &str, out: &Outcome) -> Value {
    let value: Value = serde_json::from_str(&out.stdout)
        .unwrap_or_else(|e| panic!("not json ({e}):\n{}", out.stdout));
    let compiled = schema(schema_name);
    if let Err(errors) = compiled.validate(&value) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("{schema_name} violations:\n{}\n{}", msgs.join("\n"), out.stdout);
    }
    value
}

#[test]
fn omega_text_output() {
    let out = cli(&["omega", &data_path("burgers.sys"), "--chain", "B"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("ω(ℓ) = 2ℓ + 1 = 2·C(ℓ+1,1) − 1 (stabilizes at ℓ ≥ 2)\n"), "{}", out.stdout);
    assert!(out.stdout.contains("degree: 1\n"));
    assert!(out.stdout.contains("differential dimension: 0\n"));
    assert!(out.stdout.contains("janet cone: u[0,2] multiplicative {t,x}"), "{}", out.stdout);
}

#[test]
fn omega_json_conforms() {
    for (file, chain) in [
        ("burgers.sys", "B"),
        ("nonprime.sys", "S"),
        ("idempotent.sys", "Ssq"),
        ("idempotent.sys", "Slin"),
        ("first_order.sys", "S1"),
        ("first_order.sys", "S2"),
    ] {
        let out = cli(&["omega", &data_path(file), "--chain", chain, "--json"]);
        assert_eq!(out.code, 0, "{file}/{chain}: {}", out.stderr);
        assert_conforms("omega_result", &out);
    }
    let out = cli(&["omega", &data_path("burgers.sys"), "--chain", "B", "--json"]);
    let v = assert_conforms("omega_result", &out);
    assert_eq!(v["binomial_coeffs"], serde_json::json!([-1, 2, 0]));
    assert_eq!(v["standard_coeffs"], serde_json::json!(["1", "2", "0"]));
    assert_eq!(v["stabilization_bound"], 2);
    assert_eq!(v["differential_dimension"], 0);
}

#[test]
fn validate_accepts_and_rejects() {
    let out = cli(&["validate", &data_path("nonprime.sys"), "--chain", "S", "--json"]);
    assert_eq!(out.code, 0);
    let v = assert_conforms("validation_report", &out);
    assert_eq!(v["coherent"], true);
    assert_eq!(v["regularity_of_initials_and_separants"], "unverified-assumed");

    let out = cli(&["validate", &data_path("incoherent.sys"), "--chain", "C", "--json", "--explain"]);
    assert_eq!(out.code, 1);
    let v = assert_conforms("validation_report", &out);
    assert_eq!(v["triangular"], true);
    assert_eq!(v["coherent"], false);
    assert!(!v["delta_checks"].as_array().unwrap().is_empty());

    let out = cli(&["validate", &data_path("incoherent.sys"), "--chain", "T"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("triangular: no"), "{}", out.stdout);
}

#[test]
fn compare_verdicts_and_exit_codes() {
    let idempotent = data_path("idempotent.sys");
    let out = cli(&["compare", &idempotent, "--smaller", "Ssq", "--larger", "Slin", "--json"]);
    assert_eq!(out.code, 1);
    let v = assert_conforms("compare_verdict", &out);
    assert_eq!(v["relation"], "ProperlyContained");
    assert_eq!(v["containment"], "established");

    let out = cli(&["compare", &idempotent, "--smaller", "Slin", "--larger", "Slin", "--json"]);
    assert_eq!(out.code, 0);
    assert_eq!(assert_conforms("compare_verdict", &out)["relation"], "Equal");

    // u is not in I(u^2 - u): containment cannot be witnessed.
    let out = cli(&["compare", &idempotent, "--smaller", "Slin", "--larger", "Ssq", "--json"]);
    assert_eq!(out.code, 2);
    let v = assert_conforms("compare_verdict", &out);
    assert_eq!(v["relation"], "ContainmentUnknown");
    assert_eq!(v["assumed_relation"], "InputContradiction");

    let first_order = data_path("first_order.sys");
    let out = cli(&["compare", &first_order, "--smaller", "S2", "--larger", "S1", "--json"]);
    assert_eq!(out.code, 1);
    let v = assert_conforms("compare_verdict", &out);
    assert_eq!(v["relation"], "OmegaDistinct-ProperlyContained");
    assert_eq!(v["containment"], "established");

    let out = cli(&["compare", &first_order, "--smaller", "S1", "--larger", "S2", "--assert-containment"]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.starts_with("relation: InputContradiction\n"), "{}", out.stdout);
}

#[test]
fn oracle_table_output() {
    let out = cli(&["oracle", &data_path("burgers.sys"), "--chain", "B", "--max-order", "12", "--json"]);
    assert_eq!(out.code, 0);
    let v = assert_conforms("oracle_table", &out);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 13);
    assert_eq!(rows[5]["omega"], 11);
    assert_eq!(rows[5]["krull"], 11);
    assert_eq!(rows[5]["match"], true);
}

#[test]
fn usage_and_input_errors() {
    let burgers = data_path("burgers.sys");
    let out = cli(&["omega", &burgers]);
    assert_eq!(out.code, 64);
    assert!(out.stderr.contains("--chain"), "{}", out.stderr);

    let out = cli(&["omega", &burgers, "--chain", "Nope"]);
    assert_eq!(out.code, 64);
    assert!(out.stderr.contains("unknown chain `Nope`"));
    assert!(out.stderr.contains("Usage"), "{}", out.stderr);

    let out = cli(&["omega", "/nonexistent/file.sys", "--chain", "B"]);
    assert_eq!(out.code, 66);

    let dir = std::env::temp_dir().join(format!("diffdim-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.sys");
    std::fs::write(&bad, "ring derivations=(t) indeterminates=(u)\nranking orderly tiebreak=(u)\nchain S { u[0,1]; }\n").unwrap();
    let out = cli(&["omega", bad.to_str().unwrap(), "--chain", "S"]);
    assert_eq!(out.code, 65);
    assert!(out.stderr.contains("3:"), "{}", out.stderr);
    std::fs::remove_dir_all(&dir).unwrap();

    let out = cli(&["--help"]);
    assert_eq!(out.code, 0);
    for sub in ["validate", "omega", "oracle", "compare"] {
        assert!(out.stdout.contains(sub));
    }
}

#[test]
fn subset_limit_zero_still_answers() {
    let out = run_with(
        ["diffdim", "omega", &data_path("first_order.sys"), "--chain", "S2", "--json"],
        OmegaOptions { subset_limit: 0 },
    );
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(assert_conforms("omega_result", &out)["binomial_coeffs"], serde_json::json!([1, 1, 0]));
}

#[test]
fn data_files_round_trip() {
    for entry in std::fs::read_dir(format!("{}/data", env!("CARGO_MANIFEST_DIR"))).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let sys = parse_system(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let printed = sys.to_string();
        let again = parse_system(&printed).unwrap();
        assert_eq!(sys, again, "{}", path.display());
        assert_eq!(printed, again.to_string());
    }
}

#[test]
fn binary_runs() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_diffdim"))
        .args(["compare", &data_path("idempotent.sys"), "--smaller", "Ssq", "--larger", "Slin"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("relation: ProperlyContained"));
}

#[test]
fn schemas_reject_malformed_documents() {
    let out = cli(&["compare", &data_path("idempotent.sys"), "--smaller", "Ssq", "--larger", "Slin", "--json"]);
    let mut v: Value = serde_json::from_str(&out.stdout).unwrap();
    let s = schema("compare_verdict");
    assert!(s.is_valid(&v));
    v["relation"] = "Maybe".into();
    assert!(!s.is_valid(&v));

    let out = cli(&["omega", &data_path("burgers.sys"), "--chain", "B", "--json"]);
    let mut v: Value = serde_json::from_str(&out.stdout).unwrap();
    v.as_object_mut().unwrap().remove("stabilization_bound");
    assert!(!schema("omega_result").is_valid(&v));
}
