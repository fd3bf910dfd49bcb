use std::process::{Command, Output};

use cyclofactor::{FieldCtx, Poly};
use serde_json::Value;

fn factor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_factor"))
        .args(args)
        .env_remove("CYCLOFACTOR_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).expect("valid JSON")
}

/// Multiplies the printed factors back together.
fn reconstruct(v: &Value) -> (Poly, Poly) {
    let ctx = FieldCtx::parse_spec(v["field"].as_str().unwrap()).unwrap();
    let input = Poly::parse(&ctx, v["input"].as_str().unwrap()).unwrap();
    let mut product = Poly::one(&ctx);
    for f in v["factors"].as_array().unwrap() {
        let poly = Poly::parse(&ctx, f["poly"].as_str().unwrap()).unwrap();
        assert_eq!(poly.degree(), Some(f["degree"].as_u64().unwrap() as usize));
        product = &product * &poly.pow(f["mult"].as_u64().unwrap());
    }
    if let Some(unit) = v.get("unit") {
        let c = cyclofactor::FieldElem::parse(&ctx, unit.as_str().unwrap()).unwrap();
        product = product.scale(&c);
    }
    (input, product)
}

#[test]
fn unity_json() {
    let out = factor(&["unity", "--field", "3", "--n", "8", "--output", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    let factors = v["factors"].as_array().unwrap();
    let degrees: Vec<u64> = factors
        .iter()
        .map(|f| f["degree"].as_u64().unwrap())
        .collect();
    let orders: Vec<u64> = factors
        .iter()
        .map(|f| f["order"].as_u64().unwrap())
        .collect();
    assert_eq!(degrees, [1, 1, 2, 2, 2]);
    assert_eq!(orders, [1, 2, 4, 8, 8]);
    let (input, product) = reconstruct(&v);
    assert_eq!(input, product);
}

#[test]
fn cyclotomic_text() {
    let out = factor(&["cyclotomic", "--field", "3", "--n", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "x^2 + 1  (degree 2, order 4)\n");
}

#[test]
fn linear_binomial() {
    let out = factor(&["binomial", "--field", "5", "--n", "1", "--a", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("x + 2  "));
}

#[test]
fn json_round_trips_in_extension_fields_and_characteristic_powers() {
    for args in [
        &["binomial", "--field", "9", "--n", "12", "--a", "[1,1]"][..],
        &["binomial", "--field", "4", "--n", "6", "--a", "[1,0]"][..],
        &["binomial", "--field", "3", "--n", "18", "--a", "2"][..],
        &["compose", "--field", "5", "--n", "6", "--f", "3*x^2 + 4"][..],
        &["unity", "--field", "2^4/1,0,0,1,1", "--n", "15"][..],
    ] {
        let out = factor(&[args, &["--output", "json", "--show-plan"]].concat());
        assert!(
            out.status.success(),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let v = json(&out);
        assert!(v.get("plan").is_some());
        let (input, product) = reconstruct(&v);
        assert_eq!(input, product, "{args:?}");
    }
}

#[test]
fn show_plan_lists_parameters() {
    let out = factor(&[
        "binomial",
        "--field",
        "7",
        "--n",
        "9",
        "--a",
        "2",
        "--show-plan",
    ]);
    let text = stdout(&out);
    for key in [
        "n1 =",
        "n2 =",
        "w =",
        "s =",
        "d1_s =",
        "d2_s =",
        "s1 =",
        "r =",
        "coset reps",
    ] {
        assert!(text.contains(key), "missing {key} in\n{text}");
    }
}

#[test]
fn verify_passes_on_formula_output() {
    let out = factor(&[
        "verify", "binomial", "--field", "13", "--n", "24", "--a", "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("verification passed\n"));

    let out = factor(&[
        "verify",
        "compose",
        "--field",
        "4",
        "--n",
        "5",
        "--f",
        "x^2 + x + [1,0]",
        "--output",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], Value::Bool(true));
}

#[test]
fn exit_codes() {
    assert_eq!(
        factor(&["unity", "--field", "6", "--n", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        factor(&["binomial", "--field", "5", "--n", "3", "--a", "x"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(factor(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        factor(&["binomial", "--field", "5", "--n", "3", "--a", "0"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        factor(&["compose", "--field", "5", "--n", "3", "--f", "x^2 + 4"])
            .status
            .code(),
        Some(3)
    );
    let err = factor(&["binomial", "--field", "5", "--n", "3", "--a", "0"]);
    assert!(String::from_utf8_lossy(&err.stderr).starts_with("error: "));
    assert!(err.stdout.is_empty());
}

#[test]
fn small_sweep() {
    let out = factor(&["sweep", "--fields", "2,3,4", "--max-n", "12"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "sweep: 72 instances, 72 passed, 0 failed\n");
}

#[test]
fn seed_env_overrides_flag() {
    let run = |env: Option<&str>, flag: &str| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_factor"));
        cmd.args([
            "sweep",
            "--fields",
            "11",
            "--max-n",
            "3",
            "--random-elements",
            "3",
            "--output",
            "json",
            "--seed",
            flag,
        ]);
        match env {
            Some(v) => cmd.env("CYCLOFACTOR_SEED", v),
            None => cmd.env_remove("CYCLOFACTOR_SEED"),
        };
        let out = cmd.output().unwrap();
        assert!(out.status.success());
        serde_json::from_slice::<Value>(&out.stdout).unwrap()
    };
    let from_env = run(Some("7"), "1");
    assert_eq!(from_env["config"]["seed"], 7);
    assert_eq!(from_env, run(None, "7"));
    assert_eq!(run(None, "1")["config"]["seed"], 1);

    let bad = Command::new(env!("CARGO_BIN_EXE_factor"))
        .args(["sweep", "--max-n", "1"])
        .env("CYCLOFACTOR_SEED", "seven")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
