use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("corpus")
        .join(name)
}

fn darboux(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_darboux"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn machine(args: &[&str]) -> (i32, serde_json::Value) {
    let mut all = vec!["--format", "machine"];
    all.extend_from_slice(args);
    let out = darboux(&all);
    let json = serde_json::from_slice(&out.stdout).expect("machine output is JSON");
    (out.status.code().unwrap(), json)
}

fn path(name: &str) -> String {
    corpus(name).display().to_string()
}

#[test]
fn classify_accepts_cosymplectic() {
    let (code, r) = machine(&["classify", &path("cosymplectic.toml")]);
    assert_eq!(code, 0);
    assert_eq!(r["schema"], "darboux-report/1");
    assert_eq!(r["command"], "classify");
    assert_eq!(r["requested"], "cosymplectic");
    assert_eq!(r["accepted"], true);
}

#[test]
fn classify_rejects_coinciding_kernels() {
    let out = darboux(&["classify", &path("counter-point.toml")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("accepted: no"));
}

#[test]
fn normalform_rejection_names_the_hypothesis() {
    let (code, r) = machine(&["normalform", &path("counter-point.toml")]);
    assert_eq!(code, 1);
    assert_eq!(r["verified"], false);
    assert!(r["failed_hypothesis"].as_str().unwrap().contains("ker"));
}

#[test]
fn normalform_with_seed() {
    for name in ["two-precosymplectic.toml", "symplectic.toml"] {
        let (code, r) = machine(&["normalform", "--seed", "7", &path(name)]);
        assert_eq!(code, 0, "{name}");
        assert_eq!(r["verified"], true, "{name}");
    }
}

#[test]
fn input_errors_exit_two() {
    let dir = std::env::temp_dir().join(format!("darboux-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.toml");
    std::fs::write(&bad, "version = 1\nkind = \"symplectic\"\ndim = 2\n[[omega]]\nterms = [{ indices = [1, 2], coeff = \"1/0\" }]\n").unwrap();
    let out = darboux(&["classify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.starts_with("error:"), "{err}");
    assert!(err.contains("omega[0].terms"), "{err}");

    let missing = darboux(&["classify", dir.join("absent.toml").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(2));
    let wrong = darboux(&["chart-check", &path("symplectic.toml")]);
    assert_eq!(wrong.status.code(), Some(2));
    let usage = darboux(&["classify"]);
    assert_eq!(usage.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn machine_output_is_reproducible() {
    let args = [
        "--format",
        "machine",
        "normalform",
        "--seed",
        "3",
        &path("two-cosymplectic.toml"),
    ];
    let (a, b) = (darboux(&args), darboux(&args));
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn chart_check_reports_closedness() {
    let (code, r) = machine(&["chart-check", &path("omega-p.toml")]);
    assert_eq!(code, 0, "{r}");
    assert_eq!(r["command"], "chart-check");
    assert!(r["forms"].as_array().is_some_and(|f| !f.is_empty()));
}

#[test]
fn connection_check_reports_torsion() {
    let (code, r) = machine(&["connection-check", &path("contact-connection.toml")]);
    assert_eq!(r["command"], "connection-check");
    assert_eq!(r["torsion_free"], false);
    assert_eq!(code, 0);
    assert_eq!(r["forms"][0]["parallel"], true);
}

#[test]
fn corpus_filter() {
    let (code, r) = machine(&["corpus", "--filter", "section-pullback"]);
    assert_eq!(code, 0);
    assert_eq!(r["examples"].as_array().unwrap().len(), 1);
}
