use serde_json::{json, Value};
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quatalg")).args(args).output().expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

fn strings(rows: &[&[i64]]) -> Value {
    json!(rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

#[test]
fn cubic_example() {
    let v = ok_json(&["reproduce", "cubic-example"]);
    assert_eq!(v["g"], "-N + 2 + ij");
    assert_eq!(v["h"], "i - j");
    assert_eq!(v["norm_equation"], "N^3 - 4*N^2 + 5*N - 2 = 0");
    assert_eq!(v["roots"], json!(["j", "i + j"]));
    assert_eq!(v["factorization_holds"], true);
}

#[test]
fn notirred_matrices() {
    let form = r#"{"d":2,"n":2,"coeffs":{"2,0":"1","1,1":"2","0,2":"1"}}"#;
    let v = ok_json(&["linearize", "--form", form]);
    let x1 = strings(&[&[0, 0, 1, 0], &[2, 0, 0, -1], &[1, 0, 0, 0], &[0, -1, 2, 0]]);
    let x2 = strings(&[&[1, 1, 0, 0], &[0, -1, 0, 0], &[0, 0, -1, 1], &[0, 0, 0, 1]]);
    assert_eq!(v["representation"]["matrices"], json!([x1, x2]));
    assert_eq!(v["verification"]["passes"], true);
    assert_eq!(ok_json(&["reproduce", "notirred"])["representation"]["matrices"], json!([x1, x2]));
}

#[test]
fn linearize_round_trips_and_emits() {
    let dir = std::env::temp_dir().join(format!("quatalg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let emit = dir.join("m.json");
    let form = r#"{"d":3,"n":2,"coeffs":{"3,0":"1","2,1":"2","0,3":"-1"}}"#;
    let v = ok_json(&["linearize", "--form", form, "--emit", emit.to_str().unwrap()]);
    assert_eq!(v["verification"]["passes"], true);
    let again = ok_json(&["linearize", "--form", &v["form"].to_string()]);
    assert_eq!(again, v);
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&emit).unwrap()).unwrap();
    assert_eq!(written["matrices"], v["representation"]["matrices"]);

    let f2 = ok_json(&["linearize", "--form", r#"{"d":2,"n":2,"coeffs":{"1,1":"1"}}"#, "--case", "2"]);
    assert_eq!(f2["verification"]["passes"], true);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn same_seed_same_bytes() {
    let args = ["--seed", "42", "--samples", "5", "algebra", "vk", "--d", "3", "--k", "1"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["dim"], "4");
    assert_eq!(v["verdict"]["d_central"], true);
}

#[test]
fn quadratic_with_a_sphere_of_roots() {
    let v = ok_json(&["solve", "quadratic", "--a", "0", "--b", "1"]);
    assert_eq!(v["roots"], json!([]));
    assert_eq!(v["infinite_families"][0]["norm"]["exact"], "1");
}

#[test]
fn factor_and_eigen() {
    let poly = r#"{"coeffs":["i - j","2 + ij","0","1"]}"#;
    let v = ok_json(&["factor", "--poly", poly, "--root", "j"]);
    assert_eq!(v["text"], "(z^2 + (j)z + (1 + ij))(z + (-j))");
    let v = ok_json(&["eigen", "2x2", "--matrix", r#"[["1","0"],["0","2"]]"#]);
    assert!(v.to_string().contains("\"c1\":\"2\""));
}

#[test]
fn exit_codes() {
    let bad = run(&["solve", "quadratic", "--a", "zz", "--b", "1"]);
    assert_eq!(bad.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&bad.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "quaternion");
    assert_eq!(run(&["solve", "quadratic", "--a", "1"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    let root = run(&["factor", "--poly", r#"{"coeffs":["1","0","1"]}"#, "--root", "2"]);
    assert_eq!(root.status.code(), Some(1));
}

#[test]
fn chain_round_trip() {
    let field = r#"{"kind":"finite","p":"2","k":"4"}"#;
    let g = r#"{"p":"2","k":"4","coords":["0","1"]}"#;
    let params = format!("alpha={g},beta=1,gamma=1,delta={g}");
    let q = ok_json(&["chain", "init", "--field", field, "--params", &params]);
    assert_eq!(ok_json(&["chain", "verify", "--state", &q.to_string()])["holds"], true);
    let s = ok_json(&["chain", "step", "--kind", "omega_s", "--params", &format!("a=1,b={g}"), "--state", &q.to_string()]);
    assert_eq!(s["verification"]["holds"], true);
    assert_eq!(s["symbol_matches"], true);
    let s2 = ok_json(&["chain", "step", "--kind", "lambda1", "--gen", "u", "--params", "a=1,b=1", "--state", &s.to_string()]);
    assert_eq!(s2["symbol_matches"], true);
    let bad = run(&["chain", "step", "--kind", "omega_c", "--params", "b=1", "--state", &q.to_string()]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn other_examples() {
    let v = ok_json(&["reproduce", "substitution-witness"]);
    assert_eq!(v["general_value_at_i"], json!({"c1": "0", "ci": "0", "cj": "0", "ck": "2"}));
    assert_eq!(v["differ"], true);
    let v = ok_json(&["reproduce", "infinitude"]);
    assert_eq!(v["cases"][0]["infinitely_many_pure_imaginary_roots"], true);
    assert_eq!(v["cases"][1]["infinitely_many_pure_imaginary_roots"], false);
    let v = ok_json(&["reproduce", "coimage"]);
    assert_eq!(v["coimage"].as_array().unwrap().len(), 4);
    let v = ok_json(&["reproduce", "notrank"]);
    assert_eq!(v["verification"]["passes"], true);
}
