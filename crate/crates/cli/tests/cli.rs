use std::process::{Command, Output};

use fistab::FiSharpModule;
use serde_json::Value;

fn fistab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fistab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = fistab(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn schema() -> Value {
    serde_json::from_str(include_str!("../schema/output.schema.json")).unwrap()
}

/// Validates `value` against the schema entry for `command`.
fn validate(command: &str, value: &Value) {
    let mut root = schema();
    root.as_object_mut().unwrap().remove("oneOf");
    root["$ref"] = Value::String(format!("#/$defs/commands/{command}"));
    let validator = jsonschema::validator_for(&root).unwrap();
    let errors: Vec<String> = validator.iter_errors(value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{command}: {errors:?}\n{value}");
    let top = jsonschema::validator_for(&schema()).unwrap();
    assert!(top.is_valid(value), "{command} output fails the top-level schema");
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["tensor", "M[1]", "M[1]"]), "M[2] + M[1,1] + M[1]");
    assert_eq!(
        stdout(&["charpoly", "M[2,1] + M[3,1]"]),
        "2*C(X1,3) + 3*C(X1,4) + C(X1,2)*X2 - C(X2,2) - X3 - X4"
    );
    assert_eq!(stdout(&["tensor", "M[]", "M[]"]), "M[]");
    assert_eq!(stdout(&["charpoly", "[1]"]), "X1 - 1");
    assert_eq!(stdout(&["schur", "[1,1]", "M[2]"]), "M[3,1] + M[2,1] + M[1,1,1]");
    assert_eq!(stdout(&["dimpoly", "M[2,1] + M[3,1]"]), "2*C(n,3) + 3*C(n,4)");
    assert_eq!(stdout(&["decompose", "M[1]", "4"]), "V[4] + V[3,1]");
}

#[test]
fn module_output_reparses() {
    let cases = [
        ["tensor", "M[2]", "M[2]"],
        ["tensor", "M[1,1] + M[]", "M[2,1]"],
        ["schur", "[2]", "M[1] + M[1,1]"],
        ["schur", "[1,1,1]", "M[1]"],
    ];
    for args in cases {
        let text = stdout(&args);
        let v: FiSharpModule = text.parse().unwrap();
        assert_eq!(v.to_string(), text);
        let json: Value = serde_json::from_str(&stdout(&[args[0], args[1], args[2], "--json"])).unwrap();
        let from_json: FiSharpModule = serde_json::from_value(json).unwrap();
        assert_eq!(from_json, v);
    }
}

#[test]
fn json_outputs_match_the_schema() {
    let corpus: &[(&str, &[&str])] = &[
        ("char", &["char", "M[2,1]", "5"]),
        ("char", &["char", "[3,1]"]),
        ("decompose", &["decompose", "M[2] + M[1]", "4"]),
        ("tensor", &["tensor", "M[1]", "M[2]"]),
        ("schur", &["schur", "[1,1]", "M[2]"]),
        ("charpoly", &["charpoly", "M[2,1] + M[3,1]"]),
        ("charpoly", &["charpoly", "[2,1]"]),
        ("dimpoly", &["dimpoly", "M[3] + 2*M[1]"]),
        ("phi", &["phi", "M[2,1]", "2", "3"]),
        ("stability", &["stability", "M[2,1]", "--a-max", "2", "--max-n", "6"]),
        ("murnaghan", &["murnaghan", "[1]", "[1]"]),
        ("stable-decompose", &["stable-decompose", "M[2,1] + M[1]", "3"]),
        ("stable-decompose", &["stable-decompose", "arnold:2", "4"]),
        ("stable-decompose", &["stable-decompose", "M[1]", "1", "--window", "1", "--max-n", "4"]),
        ("coinvariant", &["coinvariant", "2", "3", "--multidegree", "1,1"]),
        ("coinvariant-dim", &["coinvariant-dim", "1", "3"]),
        ("arnold", &["arnold", "5", "--grade", "2"]),
    ];
    for (command, args) in corpus {
        let mut args = args.to_vec();
        args.push("--json");
        let value: Value = serde_json::from_str(&stdout(&args)).unwrap();
        validate(command, &value);
    }
}

#[test]
fn stable_reports_carry_onsets() {
    let value: Value =
        serde_json::from_str(&stdout(&["stable-decompose", "arnold:2", "4", "--json"])).unwrap();
    assert_eq!(value["observed_onset"], 7);
    assert_eq!(value["stable"], true);
    assert!(value["certified_bound"].is_null());
    let value: Value =
        serde_json::from_str(&stdout(&["stable-decompose", "M[2,1]", "3", "--json"])).unwrap();
    assert_eq!(value["certified_bound"], 5);
}

#[test]
fn exit_codes() {
    assert_eq!(fistab(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(fistab(&["tensor", "M[1,2]", "M[1]"]).status.code(), Some(2));
    assert_eq!(fistab(&["tensor", "M[1]"]).status.code(), Some(2));
    assert_eq!(fistab(&["schur", "[2", "M[1]"]).status.code(), Some(2));
    assert_eq!(fistab(&["char", "M[1]"]).status.code(), Some(2));
    assert_eq!(
        fistab(&["coinvariant", "2", "3", "--multidegree", "1"]).status.code(),
        Some(2)
    );

    let out = fistab(&["schur", "[]", "M[1]", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(err["error"]["kind"], "empty-partition");
    let mut root = schema();
    root["$ref"] = Value::String("#/$defs/error".into());
    root.as_object_mut().unwrap().remove("oneOf");
    assert!(jsonschema::validator_for(&root).unwrap().is_valid(&err));

    let out = fistab(&["arnold", "5", "--grade", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unsupported grade"));
    let out = fistab(&["coinvariant-dim", "1", "6", "--budget", "100", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(err["error"]["kind"], "budget-exceeded");
}

#[test]
fn verify_is_deterministic() {
    let first = fistab(&["verify"]);
    let second = fistab(&["verify"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let text = String::from_utf8(first.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains(" PASS ")).count(), 12);
    assert!(text.trim_end().ends_with("12 passed, 0 failed"));

    let json = fistab(&["verify", "--json"]);
    let value: Value = serde_json::from_slice(&json.stdout).unwrap();
    validate("verify", &value);
    assert_eq!(value["passed"], true);
}
