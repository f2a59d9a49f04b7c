//! End-to-end checks of the binary: exit codes, determinism, and the JSON
//! formats on the wire.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_queerq"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn schur_dim_matches_enumeration() {
    let out = run(&["schur-dim", "--n", "2", "--r", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "32");

    let out = run(&["schur-dim", "--n", "1", "--r", "1"]);
    assert_eq!(stdout(&out).trim(), "2");
}

#[test]
fn relcheck_apoly_passes() {
    let out = run(&["relcheck", "--space", "apoly", "--n", "2", "--maxdeg", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("overall: PASS"));
}

#[test]
fn relcheck_tensor_requires_r() {
    let out = run(&["relcheck", "--space", "tensor", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn vmod_act_k1_on_cyclic() {
    let out = run(&["vmod-act", "--gen", "K1", "--n", "2", "--elem", "O0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let json = text
        .lines()
        .take_while(|l| !l.starts_with("//"))
        .collect::<String>();
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    let terms = parsed.as_array().unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["j"], serde_json::json!([1, 0]));
    assert_eq!(terms[0]["coeff"], "1");
}

#[test]
fn dump_basis_is_deterministic() {
    let a = stdout(&run(&["dump-basis", "--n", "2", "--r", "2"]));
    let b = stdout(&run(&["dump-basis", "--n", "2", "--r", "2"]));
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 32);
}

#[test]
fn mult_diagonal_idempotent() {
    let dir = std::env::temp_dir().join(format!("queerq-mult-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("diag.json");
    std::fs::write(&a, r#"{"even":[[1,0],[0,1]],"odd":[[0,0],[0,0]]}"#).unwrap();
    let out = run(&[
        "mult",
        "--n",
        "2",
        "--r",
        "2",
        "--a",
        a.to_str().unwrap(),
        "--b",
        a.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let terms = parsed["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["coeff"], "1");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn schur_gens_writes_files() {
    let dir = std::env::temp_dir().join(format!("queerq-gens-{}", std::process::id()));
    let out = run(&[
        "schur-gens",
        "--n",
        "1",
        "--r",
        "2",
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let k1 = std::fs::read_to_string(dir.join("k1.json")).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&k1).unwrap();
    assert_eq!(parsed["generator"], "k1");
    assert!(dir.join("kb1.json").exists());
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn vmod_truncate_round_trip() {
    let out = run(&["vmod-truncate", "--n", "1", "--elem", "O0", "--rmax", "1"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn bad_generator_is_usage_error() {
    let out = run(&["vmod-act", "--gen", "Z9", "--n", "2", "--elem", "O0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn schur_verify_small_passes() {
    let out = run(&["schur-verify", "--n", "1", "--r", "2", "--seed", "42"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("overall: PASS"));
}
