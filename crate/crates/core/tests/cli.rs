use std::fs;
use std::process::Command;

fn bcx(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bcx")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

const FIG2: &str = "\
1:A-B
2:A-C
3:C-D
4:D-E
5:E-B
6:C-D
7:D-B
8:D-F
9:F-H
10:H-B
11:F-G
12:G-B
";

#[test]
fn hvector_and_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig2.txt");
    fs::write(&path, FIG2).unwrap();
    let p = path.to_str().unwrap();

    let (code, out, _) = bcx(&["hvector", p]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("x^7+4x^6+9x^5+12x^4+10x^3+5x^2+x"));

    let (code, out, _) = bcx(&["analyze", p, "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["report"]["p1"], 2);
    assert_eq!(v["report"]["p2"], 1);
    assert_eq!(v["decomposition"]["components"].as_array().unwrap().len(), 4);

    let dot = dir.path().join("d.dot");
    let (code, _, _) = bcx(&["decompose", p, "--dot", dot.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(fs::read_to_string(dot).unwrap().starts_with("graph"));
}

#[test]
fn verify_and_gen() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = bcx(&["verify", "--suite", "delta1-eq-p2", "--max", "5", "--sequential"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("PASS delta1-eq-p2"));

    let (code, _, err) = bcx(&["gen", "--mode", "blocks", "--max", "4", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let text = fs::read_to_string(dir.path().join("blocks-4.ndjson")).unwrap();
    assert!(text.lines().count() >= 4);
}

#[test]
fn errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "1 2\n1 2 3 4\n").unwrap();
    let (code, _, err) = bcx(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");

    let (code, _, _) = bcx(&["verify", "--suite", "nope"]);
    assert_eq!(code, 2);
}
