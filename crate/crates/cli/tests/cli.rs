use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use minorprime::{corpus, MatrixDocument, PolyMatrix};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minorprime"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests").join(name);
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn write_case(dir: &std::path::Path, file: &str, name: &str) -> PathBuf {
    let path = dir.join(file);
    fs::write(&path, corpus::case(name).unwrap().document.to_json()).unwrap();
    path
}

fn write_rows(dir: &std::path::Path, file: &str, rows: &[&[&str]]) -> PathBuf {
    let doc = MatrixDocument {
        vars: vec!["z1".into(), "z2".into(), "z3".into()],
        rows: rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect(),
        label: None,
    };
    let path = dir.join(file);
    fs::write(&path, doc.to_json()).unwrap();
    path
}

#[test]
fn factorize_f4() {
    let dir = scratch("factorize_f4");
    let f = write_case(&dir, "f.json", "F4");
    let o = run(&["factorize", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("decision: factorizable"));
    assert!(text.contains("verified: true"));
}

#[test]
fn factorize_f1_prints_certificate() {
    let dir = scratch("factorize_f1");
    let f = write_case(&dir, "f.json", "F1");
    for algorithm in ["new", "guan"] {
        let o = run(&["factorize", f.to_str().unwrap(), "--algorithm", algorithm]);
        assert_eq!(o.status.code(), Some(2));
        let text = stdout(&o);
        assert!(text.contains("not factorizable") && text.contains("H ="), "{text}");
    }
}

#[test]
fn malformed_input() {
    let dir = scratch("malformed");
    let bad = dir.join("bad.json");
    fs::write(&bad, r#"{"vars": ["z1"], "rows": [["z1 +"]]}"#).unwrap();
    let o = run(&["factorize", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("row 1, column 1"));
    fs::write(&bad, "not json").unwrap();
    assert_eq!(run(&["rank", bad.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(
        run(&["factorize", dir.join("missing.json").to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn json_and_text_agree() {
    let dir = scratch("json_and_text");
    let f = write_case(&dir, "f.json", "F6");
    let json = run(&["factorize", f.to_str().unwrap(), "--output", "json"]);
    assert_eq!(json.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["decision"], "mlp");
    let ring = corpus::case("F6").unwrap().document.ring().unwrap();
    let grid = |key: &str| {
        let rows: Vec<Vec<String>> = serde_json::from_value(v[key].clone()).unwrap();
        let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.iter().map(String::as_str).collect()).collect();
        PolyMatrix::parse(&ring, &rows).unwrap()
    };
    let (g0, f0) = (grid("g0"), grid("f0"));
    let text = stdout(&run(&["factorize", f.to_str().unwrap()]));
    assert!(text.contains(&format!("G0 =\n{g0}")));
    assert!(text.contains(&format!("F0 =\n{f0}")));
}

#[test]
fn check_triples() {
    let dir = scratch("check");
    let f = write_case(&dir, "f.json", "F4");
    let g0 = write_rows(
        &dir,
        "g0.json",
        &[&["0", "z1"], &["z3 - 1", "0"], &["z1*z2", "z1*z3 - z1"]],
    );
    let f0 = write_rows(&dir, "f0.json", &[&["z1*z3", "0", "z2 + 1"], &["z1*z2 + z1", "1", "0"]]);
    let o = run(&["check", f.to_str().unwrap(), g0.to_str().unwrap(), f0.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let bad = write_rows(
        &dir,
        "bad.json",
        &[&["1", "z1"], &["z3 - 1", "0"], &["z1*z2", "z1*z3 - z1"]],
    );
    let o = run(&[
        "check",
        f.to_str().unwrap(),
        bad.to_str().unwrap(),
        f0.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn inspection_commands() {
    let dir = scratch("inspect");
    let f = write_case(&dir, "f.json", "F1");
    let o = run(&["rank", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("r = 2"));
    let minors = stdout(&run(&["minors", f.to_str().unwrap(), "--size", "2"]));
    assert_eq!(minors.lines().count(), 9);
    let e1 = write_case(&dir, "e1.json", "F4");
    let dr = stdout(&run(&["dr", e1.to_str().unwrap(), "--size", "1"]));
    assert_eq!(dr.trim(), "d_1 = 1");
}

#[test]
fn bench_directory() {
    let dir = scratch("bench_dir");
    write_case(&dir, "a.json", "F1");
    write_case(&dir, "b.json", "F4");
    let o = run(&["bench", "--corpus", dir.to_str().unwrap(), "--reps", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("t1/t2"));
    assert!(text.lines().any(|l| l.starts_with('a') && l.contains("none")));
    assert!(text.lines().any(|l| l.starts_with('b') && l.contains("mlp")));
}

#[test]
fn bench_aborts_on_label_mismatch() {
    let dir = scratch("bench_mismatch");
    let mut doc = corpus::case("F1").unwrap().document;
    doc.label = Some(minorprime::Label::Mlp);
    fs::write(dir.join("wrong.json"), doc.to_json()).unwrap();
    let o = run(&["bench", "--corpus", dir.to_str().unwrap(), "--reps", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("wrong: labelled mlp"));
}
