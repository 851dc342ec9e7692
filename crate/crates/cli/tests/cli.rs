use serde_json::Value;
use spinhol::catalog::default_entries;
use spinhol_cli::spec::{export_spec, from_catalog, params_to_json, spec_from_value};
use spinhol_cli::{analyze, parse_spec};
use std::io::Write;
use std::process::{Command, Output};

fn spinhol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinhol")).args(args).output().expect("binary runs")
}

fn temp_spec(name: &str, body: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("spinhol-cli-{}-{name}.json", std::process::id()));
    std::fs::File::create(&path).unwrap().write_all(body.as_bytes()).unwrap();
    path
}

#[test]
fn exit_codes() {
    let su2 = temp_spec(
        "su2",
        r#"{"dim": 3, "brackets": [[0, 1, 2, 1], [1, 2, 0, 1], [0, 2, 1, -1]],
            "metric": [[0, 0, 2], [1, 1, 2], [2, 2, 2]]}"#,
    );
    let bad_jacobi = temp_spec("nonlie", r#"{"dim": 2, "metric": [[0, 1, 1]], "brackets": [[0, 1, 0, 1]]}"#);
    let malformed = temp_spec("malformed", r#"{"dim": 2, "brackets": [[0, 1, 5, 1]]}"#);
    let not_json = temp_spec("notjson", "{dim: ");

    assert_eq!(spinhol(&["validate", su2.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(spinhol(&["analyze", su2.to_str().unwrap(), "--json"]).status.code(), Some(0));
    assert_eq!(spinhol(&["validate", bad_jacobi.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(spinhol(&["analyze", bad_jacobi.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(spinhol(&["validate", malformed.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(spinhol(&["validate", not_json.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(spinhol(&["validate", "/nonexistent/spec.json"]).status.code(), Some(2));
    assert_eq!(spinhol(&["analyze", "--catalog", "nope"]).status.code(), Some(2));
    assert_eq!(spinhol(&["analyze", "--catalog", "osc", "--params", r#"{"lambda": []}"#]).status.code(), Some(2));
    assert_eq!(spinhol(&["table", "7"]).status.code(), Some(2));
    assert_eq!(spinhol(&["su2", "--rep", "sigma", "--kmax", "13"]).status.code(), Some(2));
    assert_eq!(spinhol(&["frobnicate"]).status.code(), Some(2));
    for p in [su2, bad_jacobi, malformed, not_json] {
        let _ = std::fs::remove_file(p);
    }
}

#[test]
fn subcommands_print_expected_values() {
    let out = spinhol(&["su2", "--rep", "rho", "--kmax", "20", "--json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["counts"][19], serde_json::json!([20, 12]));

    let out = spinhol(&["table", "5", "--json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["rows"][0]["computed"], 3);

    let out = spinhol(&["clifford", "--neg", "2", "--pos", "3", "--check"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("gamma_").count(), 5);
    assert!(text.contains("check: all anticommutators"));

    let out = spinhol(&["analyze", "--catalog", "N2", "--params", r#"{"t": 2}"#, "--markdown"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("| parallel spinors | 4 |"));
}

/// Fields that depend only on the metric Lie algebra, not on how it was entered.
fn intrinsic(v: &Value) -> Value {
    let keys = [
        "dim",
        "valid",
        "signature",
        "center_dim",
        "derived_dim",
        "killing",
        "ricci",
        "scalar_curvature",
        "flags",
        "holonomy",
        "parallel_spinor_dim",
    ];
    keys.iter().map(|k| (k.to_string(), v[k].clone())).collect::<serde_json::Map<_, _>>().into()
}

#[test]
fn catalog_and_explicit_entry_agree() {
    for (name, p) in default_entries() {
        let input = from_catalog(&name, &p).unwrap();
        let explicit = spec_from_value(&export_spec(&input.algebra), "$").unwrap();
        let a: Value = serde_json::from_str(&analyze(&input).to_json()).unwrap();
        let b: Value = serde_json::from_str(&analyze(&explicit).to_json()).unwrap();
        assert_eq!(intrinsic(&a), intrinsic(&b), "{name}");
    }
}

#[test]
fn export_command_round_trips() {
    for (name, p) in default_entries().into_iter().filter(|(n, _)| ["N3", "Tsl2", "tower"].contains(&n.as_str())) {
        let params = params_to_json(&p).to_string();
        let out = spinhol(&["export", "--catalog", &name, "--params", &params]);
        assert!(out.status.success(), "{name}");
        let explicit = parse_spec(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
        let input = from_catalog(&name, &p).unwrap();
        assert_eq!(explicit.algebra.metric, input.algebra.metric, "{name}");
        assert_eq!(explicit.algebra.algebra, input.algebra.algebra, "{name}");
    }
}

#[test]
fn sample_specs_analyze_cleanly() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../specs");
    for (file, spinors) in [("su2.json", 0), ("oscillator.json", 2)] {
        let path = dir.join(file);
        let out = spinhol(&["analyze", path.to_str().unwrap(), "--json"]);
        assert!(out.status.success(), "{file}");
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["parallel_spinor_dim"], spinors, "{file}");
    }
}
