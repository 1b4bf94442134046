//! Exit codes, output stability and SVG shape of the command-line tool.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_symcalc"))
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("symcalc-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

fn diagonal_matrix_json() -> String {
    // diag(0.1, 0.2, 0.3)
    let mut entries = vec![[0.0, 0.0]; 9];
    entries[0] = [0.1, 0.0];
    entries[4] = [0.2, 0.0];
    entries[8] = [0.3, 0.0];
    serde_json::json!({"n": 3, "entries": entries}).to_string()
}

#[test]
fn spectrum_of_a_diagonal_matrix() {
    let path = write_temp("diag.json", &diagonal_matrix_json());
    let out = bin().arg("spectrum").arg(&path).output().unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let pairs = report["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 3);
    assert!(pairs.iter().all(|p| p["k"].as_u64() == Some(1)));
    std::fs::remove_file(&path).ok();
}

#[test]
fn output_is_byte_stable() {
    let path = write_temp("stable.json", &diagonal_matrix_json());
    let first = bin().arg("spectrum").arg(&path).output().unwrap();
    let second = bin().arg("spectrum").arg(&path).output().unwrap();
    assert_eq!(first.stdout, second.stdout);
    std::fs::remove_file(&path).ok();
}

#[test]
fn parse_errors_exit_2() {
    let path = write_temp("broken.json", "{\"n\": 2, \"entries\": [[1.0, 0.0]]}");
    let out = bin().arg("spectrum").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&path).ok();

    let missing = std::env::temp_dir().join("symcalc-definitely-missing.json");
    let out = bin().arg("spectrum").arg(&missing).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn spectral_domain_exits_3() {
    // eigenvalue 1.5 lies outside the unit disk
    let json = serde_json::json!({"n": 1, "entries": [[1.5, 0.0]]}).to_string();
    let path = write_temp("outside.json", &json);
    let out = bin().arg("spectrum").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    std::fs::remove_file(&path).ok();
}

#[test]
fn cluster_ambiguity_exits_4() {
    let json = serde_json::json!({
        "n": 2,
        "entries": [[0.3, 0.0], [0.0, 0.0], [0.0, 0.0], [0.3005, 0.0]]
    })
    .to_string();
    let path = write_temp("ambiguous.json", &json);
    let out = bin()
        .args(["spectrum"])
        .arg(&path)
        .args(["--tol", "1e-4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    std::fs::remove_file(&path).ok();
}

#[test]
fn disk_violation_exits_5() {
    let path = write_temp("specmap.json", &diagonal_matrix_json());
    // 1.2·z leaves the disk
    let out = bin()
        .arg("specmap")
        .arg(&path)
        .args(["--poly", "0,1.2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(5));
    std::fs::remove_file(&path).ok();
}

#[test]
fn specmap_flags_the_expected_agreement_levels() {
    // J₄(0) under z²: literal (0,2), Jordan {(0,2),(0,2)} — set-level
    let mut entries = vec![[0.0, 0.0]; 16];
    for i in 0..3 {
        entries[i * 4 + i + 1] = [1.0, 0.0];
    }
    let path = write_temp(
        "j4.json",
        &serde_json::json!({"n": 4, "entries": entries}).to_string(),
    );
    let out = bin()
        .arg("specmap")
        .arg(&path)
        .args(["--poly", "0,0,1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["agreement"], "set_level");
    std::fs::remove_file(&path).ok();

    // J₃(0) under z²: literal (0,1), Jordan {(0,2),(0,1)} — disagreement
    let mut entries = vec![[0.0, 0.0]; 9];
    for i in 0..2 {
        entries[i * 3 + i + 1] = [1.0, 0.0];
    }
    let path = write_temp(
        "j3.json",
        &serde_json::json!({"n": 3, "entries": entries}).to_string(),
    );
    let out = bin()
        .arg("specmap")
        .arg(&path)
        .args(["--poly", "0,0,1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["agreement"], "disagreement");
    std::fs::remove_file(&path).ok();

    // identity polynomial: three identical spectra — multiset agreement
    let path = write_temp("ident.json", &diagonal_matrix_json());
    let out = bin()
        .arg("specmap")
        .arg(&path)
        .args(["--poly", "0,1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["agreement"], "multiset");
    assert_eq!(report["input"], report["oracle"]);
    std::fs::remove_file(&path).ok();
}

#[test]
fn svg_is_valid_with_one_marker_per_pair() {
    let path = write_temp("svg-input.json", &diagonal_matrix_json());
    let svg_path = std::env::temp_dir().join(format!("symcalc-cli-{}.svg", std::process::id()));
    let out = bin()
        .arg("spectrum")
        .arg(&path)
        .arg("--svg")
        .arg(&svg_path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("class=\"pair\"").count(), 3);
    // well-formed XML: every element opened is closed or self-closing
    assert_eq!(
        svg.matches("<circle").count(),
        svg.matches("/>").count() - svg.matches("<line").count() - svg.matches("<rect").count()
    );
    std::fs::remove_file(&path).ok();
    std::fs::remove_file(&svg_path).ok();
}

#[test]
fn unknown_demo_exits_2() {
    let out = bin().args(["demo", "nonsense"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn nogo_demo_passes_with_its_expected_failure() {
    let out = bin()
        .args(["demo", "nogo", "--grid", "128"])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("bracket failure, (p³, q³)"));
    assert!(!text.contains("FAIL"));
}
