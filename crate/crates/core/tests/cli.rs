use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn waist(args: &[&str], cwd: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_waist"));
    cmd.args(args);
    if let Some(dir) = cwd {
        cmd.current_dir(dir);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn dumped_corpus_validates() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["minimal", "ef4", "delta3"] {
        let dump = waist(&["corpus", "dump", name], None);
        assert_eq!(dump.status.code(), Some(0));
        let path = dir.path().join(format!("{name}.txt"));
        fs::write(&path, &dump.stdout).unwrap();
        let o = waist(&["validate", path.to_str().unwrap()], None);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert!(stdout(&o).starts_with("ok:"));
    }
}

#[test]
fn broken_tables_are_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let assoc = dir.path().join("assoc.txt");
    fs::write(&assoc, "4 1 0\n0 0 0 0\n0 1 2 3\n0 2 3 0\n0 3 2 0\n").unwrap();
    let o = waist(&["validate", assoc.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("(2*2)*2"), "{}", stderr(&o));

    let short = dir.path().join("short.txt");
    fs::write(&short, "4 1 0\n0 0 0\n0 1 2\n0 2 1\n").unwrap();
    let o = waist(&["validate", short.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("parse error at line 2"), "{}", stderr(&o));
}

#[test]
fn analyze_json_has_schema() {
    let o = waist(&["analyze", "ef4", "--json"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["semigroup"]["order"], 9);
    assert_eq!(v["right_chain"], false);
}

#[test]
fn single_check_exit_codes() {
    let o = waist(&["verify", "chain_x4", "--check", "Thm4.8"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Thm4.8  Holds"));

    let o = waist(&["verify", "chain_x4", "--check", "Nope1"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn discrepancy_exits_one() {
    let o = waist(&["verify", "ef4"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("Cor2.14       Discrepancy"));
}

#[test]
fn ndjson_matches_count() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("four.ndjson");
    let o = waist(&["enumerate", "4", "--ndjson", path.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "15");
    let text = fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 15);
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["n"], 4);
        assert_eq!(v["table"].as_array().unwrap().len(), 4);
        assert!(v["canonical"].is_string());
    }
}

#[test]
fn corpus_names_win_over_files() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("minimal"), "3 1 0\n0 0 0\n0 1 2\n0 2 1\n").unwrap();
    let o = waist(&["analyze", "minimal"], Some(dir.path()));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("order 2"));
}

#[test]
fn bad_arguments() {
    assert_eq!(waist(&["enumerate", "9"], None).status.code(), Some(2));
    assert_eq!(waist(&["analyze", "no_such_thing"], None).status.code(), Some(2));
    assert_eq!(waist(&["corpus", "dump", "no_such_thing"], None).status.code(), Some(2));
}
