//! End-to-end tests of the binary, including acceptance criterion 11:
//! two seeded runs of the scan must produce byte-identical CSV.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_graphprod")
}

fn config(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../configs")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn criterion_11_rd_scan_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config("edge_z2.toml");
    let cfg = cfg.to_str().unwrap();
    let out1 = dir.path().join("run1");
    let out2 = dir.path().join("run2");
    for (out, threads) in [(&out1, "4"), (&out2, "1")] {
        let result = run(&[
            "--config",
            cfg,
            "--out",
            out.to_str().unwrap(),
            "--seed",
            "123",
            "--threads",
            threads,
            "rd-scan",
        ]);
        assert!(
            result.status.success(),
            "rd-scan failed: {}",
            stderr(&result)
        );
    }
    for name in ["rd_scan.csv", "rd_scan_fits.csv", "clique_constants.csv"] {
        let a = std::fs::read(out1.join(name)).unwrap();
        let b = std::fs::read(out2.join(name)).unwrap();
        assert_eq!(a, b, "{name} differs between identically seeded runs");
    }
    println!("acceptance 11 byte-identical scan CSV across runs and thread counts: PASS");
}

#[test]
fn normal_form_identity_example() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "--config",
        config("edge_z2.toml").to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
        "normal-form",
        "v0:1 v0:1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("lambda = 0"), "{text}");
    assert!(text.contains("ell = 0"), "{text}");
    assert!(text.contains("(identity)"), "{text}");
}

#[test]
fn sphere_respects_window_validation() {
    let dir = tempfile::tempdir().unwrap();
    let ok = run(&[
        "--config",
        config("dihedral.toml").to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
        "sphere",
        "3",
    ]);
    assert!(ok.status.success());
    assert!(stdout(&ok).contains("2 elements"), "{}", stdout(&ok));

    let too_big = run(&[
        "--config",
        config("dihedral.toml").to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
        "sphere",
        "99",
    ]);
    assert_eq!(too_big.status.code(), Some(2));
    assert!(stderr(&too_big).contains("window too small"));
}

#[test]
fn factor_precondition_names_the_quantity() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "--config",
        config("dihedral.toml").to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
        "factor",
        "v0:1 v1:1 v0:1",
        "2",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("λ(g) = k + l"), "{}", stderr(&out));
}

#[test]
fn divisors_of_a_free_product_word() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "--config",
        config("dihedral.toml").to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
        "divisors",
        "v0:1 v1:1 v0:1",
        "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("1"), "{text}");
    assert!(text.contains("v0:1"), "{text}");
    let csv = std::fs::read_to_string(dir.path().join("divisors.csv")).unwrap();
    assert_eq!(csv.lines().count(), 2, "{csv}");
}

#[test]
fn p2_reports_the_decomposition() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "--config",
        config("path_int.toml").to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
        "--format",
        "json",
        "p2",
        "v0:2",
        "v0:3",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("p2.json")).unwrap())
            .unwrap();
    assert_eq!(json["q"], 1);
    assert_eq!(json["clique"][0], 0);
    assert_eq!(json["s1"], "v0:2");
    assert_eq!(json["s2"], "v0:3");
}

#[test]
fn verify_lemmas_pass_on_small_fixture() {
    let dir = tempfile::tempdir().unwrap();
    for sub in ["verify-lemma1", "verify-lemma2", "vanishing"] {
        let out = run(&[
            "--config",
            config("edge_z2.toml").to_str().unwrap(),
            "--out",
            dir.path().to_str().unwrap(),
            sub,
        ]);
        assert!(out.status.success(), "{sub}: {}", stderr(&out));
    }
}

#[test]
fn verify_lemma1_on_dihedral_window() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "--config",
        config("dihedral.toml").to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
        "verify-lemma1",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("violations: 0"));
}

#[test]
fn clique_constants_reports_every_clique() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "--config",
        config("edge_z2.toml").to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
        "clique-constants",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let csv = std::fs::read_to_string(dir.path().join("clique_constants.csv")).unwrap();
    // header + 4 cliques of the single-edge graph
    assert_eq!(csv.lines().count(), 5, "{csv}");
}

#[test]
fn json_format_emits_json_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "--config",
        config("edge_z2.toml").to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
        "--format",
        "json",
        "sphere",
        "1",
    ]);
    assert!(out.status.success());
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("sphere_1.json")).unwrap())
            .unwrap();
    assert_eq!(json.as_array().unwrap().len(), 2);
}

#[test]
fn bad_config_is_a_parse_error_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.toml");
    std::fs::write(&bad, "[graph\n").unwrap();
    let out = run(&[
        "--config",
        bad.to_str().unwrap(),
        "--out",
        dir.path().to_str().unwrap(),
        "sphere",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 1"), "{}", stderr(&out));
}
