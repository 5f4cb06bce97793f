use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hvb"))
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert!(o.status.success(), "{args:?}: {}", stderr(&o));
    stdout(&o)
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&ok(&full)).unwrap()
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hvb_cli_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn bott_text_and_json() {
    assert_eq!(ok(&["bott", "--space", "p:2", "--weight", "-2,1"]), "degree 1, nu (0,0) [dim 1]\n");
    assert_eq!(ok(&["bott", "--space", "p:2", "--bundle", "O(-3)"]), "degree 2, nu (0,0) [dim 1]\n");
    let v = json(&["bott", "--space", "gr:1,3", "--weight", "0,1,0"]);
    assert_eq!(v["degree"], 0);
    assert_eq!(v["nu"], serde_json::json!([0, 1, 0]));
    assert!(ok(&["bott", "--space", "p:2", "--weight", "-1,0"]).contains("vanish"));
}

#[test]
fn tables_and_counts() {
    let rows = json(&["chambers", "--space", "p:4"]);
    let weights: Vec<serde_json::Value> = rows.as_array().unwrap().iter().map(|r| r["weight"].clone()).collect();
    assert_eq!(weights[4], serde_json::json!([-5, 0, 0, 0]));
    assert_eq!(ok(&["hasse", "--space", "gr:1,4"]), "5\n");
    assert_eq!(ok(&["components", "--type", "E", "--rank", "6"]), "3\n");
}

#[test]
fn cohomology_of_sample_files() {
    assert_eq!(ok(&["cohomology", "--rep", &data("euler_dual_p2.json")]), "all cohomology vanishes\n");
    let split = json(&["cohomology", "--rep", &data("euler_dual_p2_split.json")]);
    let degrees: Vec<i64> = split.as_array().unwrap().iter().map(|r| r["degree"].as_i64().unwrap()).collect();
    assert_eq!(degrees, vec![0, 1]);
    let graded = json(&["cohomology", "--graded", "--rep", &data("euler_dual_p2.json")]);
    assert_eq!(graded, split);
}

#[test]
fn rep_from_stdin() {
    let text = std::fs::read_to_string(data("euler_dual_p2_split.json")).unwrap();
    let mut child = bin()
        .args(["cohomology", "--rep", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("(0,0)"));
}

#[test]
fn rescale_round_trip_through_files() {
    let original = std::fs::read_to_string(data("ex73_generic.json")).unwrap();
    let comm = ok(&["rescale", "--rep", &data("ex73_generic.json")]);
    let p = temp_file("comm.json", &comm);
    let back = ok(&["rescale", "--inverse", "--rep", p.to_str().unwrap()]);
    assert_eq!(back.trim_end(), original.trim_end());
    let bad = run(&["check", "--rep", p.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn stability_commands() {
    let v = json(&["stability", "path", "--rep", &data("euler_dual_p2.json")]);
    assert_eq!(v["semistable"], true);
    let v = json(&["stability", "path", "--rep", &data("euler_dual_p2_split.json")]);
    assert_eq!(v["semistable"], false);
    let e = ok(&["stability", "ex73", "--rep", &data("ex73_generic.json")]);
    assert!(e.contains("locus: generic"), "{e}");
    let u = json(&["stability", "ex73", "--f2", "5,-2"]);
    assert_eq!(u["locus"], "unstable");
    let t = json(&["stability", "tangent", "--rep", &data("ex73_generic.json")]);
    assert_eq!(t["dim"], 1);
}

#[test]
fn oracle_commands() {
    let v = json(&["oracle", "two-step", "--partition", "", "--rows", "1,2", "--m", "2"]);
    assert_eq!(v["normalized"], serde_json::json!(["1/1", "-1/1"]));
    assert_eq!(v["scaled"], v["predicted"]);
    assert!(ok(&["oracle", "p2", "--k", "3"]).contains("identities hold: true"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["--json", "chambers", "--space", "gr:1,4"],
        vec!["--json", "cohomology", "--rep", &data("ex73_generic.json")],
        vec!["--json", "stability", "character", "--rep", &data("ex73_generic.json")],
    ] {
        let a = ok(&args);
        let b = ok(&args);
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn malformed_inputs_exit_with_codes() {
    let valid = std::fs::read_to_string(data("euler_dual_p2.json")).unwrap();
    let corpus: Vec<(&str, String, i32)> = vec![
        ("truncated", valid[..valid.len() / 2].to_string(), 2),
        ("not_json", "hello".into(), 2),
        ("unknown_field", valid.replacen("\"space\"", "\"extra\": 1, \"space\"", 1), 2),
        ("zero_denominator", valid.replace("\"1/1\"", "\"1/0\""), 2),
        ("ragged", valid.replace("\"1/1\"", "\"1/1\", \"2/1\""), 2),
        ("bad_space", valid.replacen("\"k\": 0", "\"k\": 7", 1), 2),
        ("short_weight", valid.replacen("-2,\n        1", "-2", 1), 2),
    ];
    for (name, text, code) in corpus {
        let p = temp_file(&format!("{name}.json"), &text);
        let o = run(&["cohomology", "--rep", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(code), "{name}: {}", stderr(&o));
        assert!(stderr(&o).starts_with("error: "), "{name}");
        assert!(stdout(&o).is_empty(), "{name}");
    }
    for (args, code) in [
        (vec!["bott", "--space", "p:2", "--weight", "1,x"], 2),
        (vec!["bott", "--space", "gr:1,3", "--weight", "0,0"], 2),
        (vec!["bott", "--space", "p:2", "--weight", "0,-1"], 1),
        (vec!["bott", "--space", "p:2"], 2),
        (vec!["bott", "--space", "p:2", "--bundle", "S[1,2]U"], 2),
        (vec!["components", "--type", "E", "--rank", "9"], 1),
        (vec!["truncated", "--steps", "0", "--rep", &data("euler_dual_p2.json")], 1),
        (vec!["check", "--rep", "/nonexistent/rep.json"], 2),
        (vec!["no-such-command"], 2),
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(code), "{args:?}: {}", stderr(&o));
    }
}
