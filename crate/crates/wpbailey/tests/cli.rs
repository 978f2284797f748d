//! Integration tests for the `wpb` binary: exit codes, seed handling,
//! extra-parameter pinning, and byte-level JSON determinism.

use std::process::{Command, Output};

fn wpb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wpb"))
        .args(args)
        .env_remove("WPB_SEED")
        .output()
        .expect("spawn wpb")
}

fn wpb_with_seed_env(seed: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wpb"))
        .args(args)
        .env("WPB_SEED", seed)
        .output()
        .expect("spawn wpb")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

// ---------------------------------------------------------------------------
// happy paths
// ---------------------------------------------------------------------------

#[test]
fn pair_check_passes() {
    let out = wpb(&["pairs", "check", "--pair", "unit", "--depth", "6", "--seed", "42"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("ok   unit"), "unexpected output: {text}");
    assert!(text.contains("3 checks, 3 passed, 0 failed"));
}

#[test]
fn chain_apply_passes() {
    let out = wpb(&[
        "chains", "apply", "--chain", "new_cn11", "--pair", "singh", "--depth", "5", "--seed",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("new_cn11(singh)"));
}

#[test]
fn identity_verify_passes() {
    let out = wpb(&["identities", "verify", "--id", "jackson", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("jackson"));
}

#[test]
fn listings_name_known_objects() {
    let pairs = wpb(&["pairs", "list"]);
    assert_eq!(pairs.status.code(), Some(0));
    let text = stdout(&pairs);
    for id in ["unit", "singh", "pr4", "mz2", "unit_bailey"] {
        assert!(text.contains(id), "pairs list missing {id}");
    }

    let idents = wpb(&["identities", "list"]);
    assert_eq!(idents.status.code(), Some(0));
    let text = stdout(&idents);
    for id in ["jackson", "q_watson", "mz2_cn333"] {
        assert!(text.contains(id), "identities list missing {id}");
    }
}

#[test]
fn listings_emit_json_arrays() {
    let out = wpb(&["pairs", "list", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    let items = v.as_array().expect("array");
    assert!(items.iter().any(|p| p["id"] == "pr2" && p["kind"] == "wp"));
    assert!(items.iter().any(|p| p["id"] == "singh_bailey" && p["kind"] == "bailey"));
}

#[test]
fn pinned_extras_are_honored() {
    let out = wpb(&[
        "pairs", "check", "--pair", "singh", "--extra", "rho1=+:2/5", "--extra", "rho2=-:3/8",
        "--depth", "3", "--points", "1", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    assert_eq!(v["pass"], true);
    let point = &v["results"][0]["point"];
    assert_eq!(point["grho1"], "2/5");
    assert_eq!(point["grho2"], "-3/8");
}

// ---------------------------------------------------------------------------
// usage errors exit 2 and name the offender
// ---------------------------------------------------------------------------

#[test]
fn unknown_ids_are_usage_errors() {
    let out = wpb(&["pairs", "check", "--pair", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown pair: nope"));

    let out = wpb(&["identities", "verify", "--id", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown identity: nope"));

    let out = wpb(&["chains", "apply", "--chain", "nope", "--pair", "unit"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown chain: nope"));
}

#[test]
fn chain_pair_kind_mismatch_is_usage_error() {
    let out = wpb(&["chains", "apply", "--chain", "bailey_d4", "--pair", "unit"]);
    assert_eq!(out.status.code(), Some(2), "stderr: {}", stderr(&out));

    let out = wpb(&["chains", "apply", "--chain", "new_cn11", "--pair", "unit_bailey"]);
    assert_eq!(out.status.code(), Some(2), "stderr: {}", stderr(&out));
}

#[test]
fn missing_selector_is_usage_error() {
    let out = wpb(&["pairs", "check"]);
    assert_eq!(out.status.code(), Some(2));

    let out = wpb(&["identities", "verify"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_extras_are_usage_errors() {
    for bad in ["rho1=2/5", "rho1=*:2/5", "rho1=+:2/0", "rho3=+:2/5", "rho1"] {
        let out = wpb(&["pairs", "check", "--pair", "singh", "--extra", bad]);
        assert_eq!(out.status.code(), Some(2), "extra '{bad}' should be rejected");
    }
}

// ---------------------------------------------------------------------------
// seeds and determinism
// ---------------------------------------------------------------------------

#[test]
fn json_output_is_deterministic() {
    let args = ["pairs", "check", "--pair", "unit", "--depth", "3", "--points", "2", "--json"];
    let first = wpb(&args);
    let second = wpb(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn seed_env_is_default_and_flag_wins() {
    let base = ["identities", "verify", "--id", "unit_cn11", "--n", "3", "--json"];

    let seed5 = wpb(&["identities", "verify", "--id", "unit_cn11", "--n", "3", "--seed", "5", "--json"]);
    let seed9 = wpb(&["identities", "verify", "--id", "unit_cn11", "--n", "3", "--seed", "9", "--json"]);
    let env5 = wpb_with_seed_env("5", &base);
    let env5_flag9 = wpb_with_seed_env(
        "5",
        &["identities", "verify", "--id", "unit_cn11", "--n", "3", "--seed", "9", "--json"],
    );

    assert_eq!(seed5.status.code(), Some(0));
    assert_eq!(env5.stdout, seed5.stdout, "WPB_SEED should act as the default seed");
    assert_eq!(env5_flag9.stdout, seed9.stdout, "--seed should override WPB_SEED");
    assert_ne!(seed5.stdout, seed9.stdout, "different seeds should sample different points");
}
