#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn penney(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_penney"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Golden files and the invocations that produce them.
pub const GOLDENS: &[(&str, &[&str])] = &[
    ("solve_example.json", &["solve", "--patterns", "THH,HTH,HHT", "--json"]),
    (
        "simulate_example.json",
        &["simulate", "--patterns", "THH,HTH,HHT", "--trials", "100000", "--seed", "0", "--json"],
    ),
    ("best_response_hh.json", &["best-response", "--opponents", "HH", "--length", "2", "--json"]),
    (
        "solve_biased.json",
        &["solve", "--alphabet", "H:1/3,T:2/3", "--patterns", "THH,HTH,HHT", "--json"],
    ),
    ("best_response_hhh.json", &["best-response", "--opponents", "HHH", "--length", "3", "--json"]),
];

/// Runs the invocation and compares stdout byte for byte with the golden file.
pub fn matches_golden(name: &str, args: &[&str]) -> Result<(), String> {
    let out = penney(args);
    if !out.status.success() {
        return Err(format!("{args:?} exited with {:?}", out.status.code()));
    }
    let expected = std::fs::read(golden_path(name)).map_err(|e| format!("{name}: {e}"))?;
    if out.stdout != expected {
        return Err(format!("{name}: output differs from golden"));
    }
    Ok(())
}
