use std::process::{Command, Output};

use proptest::prelude::*;
use serde_json::Value;

use ringlat_cli::ast::RingExpr;
use ringlat_cli::parse::parse_ring;

fn ringlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringlat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn bell_four() {
    let out = ringlat(&["count", "bell", "4"]);
    assert!(out.status.success());
    assert_eq!(json(&out), Value::from(15));
    let out = ringlat(&["--format", "text", "count", "stirling", "5", "2"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "15");
}

#[test]
fn diagonal_lattice() {
    let out = ringlat(&["lattice", "Z/4", "Z/4 x Z/4", "--embed", "diagonal"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["count"], 3);
    assert_eq!(v["schema"], 1);
}

#[test]
fn dot_output() {
    let path = std::env::temp_dir().join(format!("ringlat-{}.dot", std::process::id()));
    let out = ringlat(&["lattice", "GF(2)", "GF(2) x GF(2) x GF(2)", "--dot", path.to_str().unwrap()]);
    assert!(out.status.success());
    let dot = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(dot.starts_with("digraph"));
    assert_eq!(json(&out)["count"], 5);
}

#[test]
fn inert_field_extension() {
    let out = ringlat(&["classify", "GF(2)", "GF(2^2)"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["classification"]["kind"], "inert");
}

#[test]
fn crt_and_idealize() {
    let out = ringlat(&["crt", "Z/12", "--ideals", "(4);(3);(3)"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["criterion"]["minimal"], true);
    let out = ringlat(&["idealize", "GF(2)", "--module", "R + R"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["nu"], 5);
}

#[test]
fn exit_codes() {
    let out = ringlat(&["lattice", "Z/", "Z/4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1:"));
    let out = ringlat(&["lattice", "Z/4", "Z/3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ringlat(&["lattice", "Z/2", "Z/8000"]);
    assert_eq!(out.status.code(), Some(3));
    let out = ringlat(&["verify", "--suite", "s9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suite() {
    let out = ringlat(&["verify", "--suite", "s2"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 3);
}

fn ring_expr() -> impl Strategy<Value = RingExpr> {
    let leaf = prop_oneof![
        (2u64..10).prop_map(RingExpr::ZMod),
        prop_oneof![Just(2u64), Just(3), Just(5)].prop_flat_map(|p| (1u32..3).prop_map(move |k| RingExpr::Gf { p, k })),
    ];
    leaf.prop_recursive(3, 8, 3, |inner| {
        prop::collection::vec(inner, 2..4).prop_map(RingExpr::Product)
    })
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(e in ring_expr()) {
        let printed = e.to_string();
        prop_assert_eq!(parse_ring(&printed).unwrap(), e);
    }
}
