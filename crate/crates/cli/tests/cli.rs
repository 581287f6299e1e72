use std::path::Path;
use std::process::{Command, Output};

use qtbounds_cli::golden::corpus;
use qtbounds_cli::CodeSpec;

fn qtbounds(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtbounds"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_spec(dir: &Path, text: &str) -> String {
    let path = dir.join("code.toml");
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn bounds_text_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let g = &corpus()[4];
    let code = g.build().unwrap();
    let spec = write_spec(dir.path(), &toml::to_string(&CodeSpec::of(&code)).unwrap());

    let out = qtbounds(&["bounds", &spec]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("d      = 8"));
    assert!(text.contains("pattern: LJS"));

    let out = qtbounds(&["bounds", &spec, "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["d_l"], "8");
    assert_eq!(v["d_j"], "6");
    assert_eq!(v["d_spec"], "4");

    let out = qtbounds(&["--lally-basis", "lex", "bounds", &spec, "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["d_hat"], "2");
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.toml");
    assert_eq!(
        qtbounds(&["bounds", missing.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );

    let bad = write_spec(dir.path(), "q = 6\nm = 3\nell = 1\ngenerators = [[1, 1]]\n");
    let out = qtbounds(&["bounds", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));

    assert_eq!(
        qtbounds(&["--families", "b9", "examples"]).status.code(),
        Some(2)
    );
}

#[test]
fn sweep_writes_csv_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("rows.csv");
    let summary_path = dir.path().join("summary.json");
    let args = |jobs: &str| {
        vec![
            "--jobs".to_string(),
            jobs.to_string(),
            "sweep".into(),
            "--m".into(),
            "3,5".into(),
            "--ell-max".into(),
            "3".into(),
            "--count".into(),
            "3".into(),
            "--out".into(),
            csv_path.to_string_lossy().into_owned(),
            "--summary".into(),
            summary_path.to_string_lossy().into_owned(),
        ]
    };
    let run = |jobs: &str| {
        let a = args(jobs);
        let out = qtbounds(&a.iter().map(String::as_str).collect::<Vec<_>>());
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        std::fs::read_to_string(&csv_path).unwrap()
    };
    let seq = run("1");
    let par = run("2");
    assert_eq!(seq, par);

    let mut reader = csv::Reader::from_reader(seq.as_bytes());
    assert_eq!(reader.headers().unwrap().len(), 18);
    let rows = reader.records().count();
    let summary: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&summary_path).unwrap()).unwrap();
    assert_eq!(summary["nontrivial"], rows as u64);
}

#[test]
fn examples_pass() {
    let out = qtbounds(&["examples"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("FAIL"));
    assert_eq!(
        text.lines().filter(|l| l.starts_with('[')).count(),
        corpus().len()
    );
}
