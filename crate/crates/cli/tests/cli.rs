//! Black-box tests of the binary: exit codes, witness printing, JSON
//! output, and lossless piping between subcommands.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value as Json;
use tempfile::TempDir;

const A3: &str = r#"{"kind":"quadratic","matrix":[[1,1,0],[1,2,1],[0,1,1]]}"#;
const A3_SWAPPED: &str = r#"{"kind":"quadratic","matrix":[[2,1,1],[1,1,0],[1,0,1]]}"#;
const A4: &str =
    r#"{"kind":"quadratic","matrix":[[3,2,1,0],[2,3,2,1],[1,2,2,1],[0,1,1,1]]}"#;
const S1: &str = r#"{"kind":"set","points":[[0,0,0],[1,0,-1]]}"#;
const S2: &str = r#"{"kind":"set","points":[[0,0,0],[0,1,0]]}"#;
const SEP: &str = r#"{"kind":"separable","pieces":[{"start":-2,"values":[4,1,0,1,4]},{"start":-1,"values":["1/2",0,"1/2"]}]}"#;

fn dca(args: &[&str]) -> Output {
    dca_env(args, &[])
}

fn dca_env(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_dca"));
    cmd.args(args);
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path
}

fn path_str(p: &PathBuf) -> &str {
    p.to_str().unwrap()
}

#[test]
fn holding_property_exits_zero() {
    let dir = TempDir::new().unwrap();
    let a3 = write(dir.path(), "a3.json", A3);
    let out = dca(&["check", "--property", "quad-mm", path_str(&a3)]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("quad-mm: holds"));

    let out = dca(&["check", "--property", "multimodular", path_str(&a3)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("multimodular: holds"));
}

#[test]
fn failing_property_exits_one_and_prints_the_witness() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.json", A3_SWAPPED);
    let out = dca(&["check", "--property", "quad-mm", path_str(&bad)]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("quad-mm: fails"));
    assert!(text.contains("witness:"));
    assert!(text.contains("(i,j)=(1,3)"));

    let out = dca(&["check", "--property", "multimodular", path_str(&bad)]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("witness: f(z+d) + f(z+d')"));
}

#[test]
fn json_report_parses_and_carries_the_witness() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.json", A3_SWAPPED);
    let out = dca(&["check", "--property", "quad-mm", "--json", path_str(&bad)]);
    assert_eq!(code(&out), 1);
    let v: Json = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["holds"], Json::Bool(false));
    assert_eq!(v["witness"]["points"][0], serde_json::json!([1, 3]));
}

#[test]
fn box_flags_broadcast_or_match_the_dimension() {
    let dir = TempDir::new().unwrap();
    let a3 = write(dir.path(), "a3.json", A3);
    let out = dca(&[
        "check",
        "--property",
        "multimodular",
        "--box",
        "-1..1",
        path_str(&a3),
    ]);
    assert_eq!(code(&out), 0);

    let out = dca(&[
        "check",
        "--property",
        "multimodular",
        "--box",
        "-1..1",
        "--box",
        "0..1",
        path_str(&a3),
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("expected 1 or 3"));

    let out = dca(&[
        "check",
        "--property",
        "multimodular",
        "--box",
        "oops",
        path_str(&a3),
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn unusable_input_exits_two() {
    let dir = TempDir::new().unwrap();
    let out = dca(&["check", "--property", "multimodular", "/nonexistent.json"]);
    assert_eq!(code(&out), 2);

    let garbled = write(dir.path(), "garbled.json", "{not json");
    let out = dca(&["check", "--property", "multimodular", path_str(&garbled)]);
    assert_eq!(code(&out), 2);

    let float = write(
        dir.path(),
        "float.json",
        r#"{"kind":"table","lower":[0],"upper":[1],"values":[0.5,1]}"#,
    );
    let out = dca(&["check", "--property", "multimodular", path_str(&float)]);
    assert_eq!(code(&out), 2);

    let a3 = write(dir.path(), "a3.json", A3);
    let out = dca(&["check", "--property", "bogus", path_str(&a3)]);
    assert_eq!(code(&out), 2);

    let out = dca(&["check", "--property", "mm-set", path_str(&a3)]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("needs a set input"));
}

#[test]
fn op_output_pipes_back_into_check() {
    let dir = TempDir::new().unwrap();
    let a3 = write(dir.path(), "a3.json", A3);
    let shifted = dir.path().join("shifted.json");
    let out = dca(&[
        "op",
        "shift",
        "--by",
        "1,1,1",
        "-o",
        path_str(&shifted),
        path_str(&a3),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let v: Json = serde_json::from_str(&fs::read_to_string(&shifted).unwrap()).unwrap();
    assert_eq!(v["kind"], "table");

    let out = dca(&["check", "--property", "multimodular", path_str(&shifted)]);
    assert_eq!(code(&out), 0);
}

#[test]
fn rational_values_survive_piping_exactly() {
    let dir = TempDir::new().unwrap();
    let sep = write(dir.path(), "sep.json", SEP);
    let base = dir.path().join("base.json");
    let up = dir.path().join("up.json");
    let down = dir.path().join("down.json");
    assert_eq!(
        code(&dca(&["op", "scale-values", "--factor", "1", "-o", path_str(&base), path_str(&sep)])),
        0
    );
    assert_eq!(
        code(&dca(&["op", "scale-values", "--factor", "3/7", "-o", path_str(&up), path_str(&sep)])),
        0
    );
    assert_eq!(
        code(&dca(&["op", "scale-values", "--factor", "7/3", "-o", path_str(&down), path_str(&up)])),
        0
    );
    let a: Json = serde_json::from_str(&fs::read_to_string(&base).unwrap()).unwrap();
    let b: Json = serde_json::from_str(&fs::read_to_string(&down).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn sweep_out_produces_the_half_integer_matrix() {
    let dir = TempDir::new().unwrap();
    let a4 = write(dir.path(), "a4.json", A4);
    let out = dca(&["op", "sweep-out", "--index", "3", path_str(&a4)]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let v: Json = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["matrix"][0][0], "5/2");
    assert_eq!(v["matrix"][0][1], 1);
    assert_eq!(v["matrix"][0][2], "-1/2");
    assert_eq!(v["matrix"][2][2], "1/2");
}

#[test]
fn permutation_flags_are_one_based() {
    let dir = TempDir::new().unwrap();
    let a3 = write(dir.path(), "a3.json", A3);
    let permuted = dir.path().join("permuted.json");
    let out = dca(&[
        "op",
        "permute",
        "--perm",
        "2,1,3",
        "-o",
        path_str(&permuted),
        path_str(&a3),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    // transposing the first two variables breaks the property
    let out = dca(&["check", "--property", "multimodular", path_str(&permuted)]);
    assert_eq!(code(&out), 1);

    let out = dca(&["op", "restrict", "--subset", "1,3", path_str(&a3)]);
    assert_eq!(code(&out), 0);
    let v: Json = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["lower"], serde_json::json!([-2, -2]));
}

#[test]
fn minkowski_sum_breaks_the_set_property() {
    let dir = TempDir::new().unwrap();
    let s1 = write(dir.path(), "s1.json", S1);
    let s2 = write(dir.path(), "s2.json", S2);
    assert_eq!(code(&dca(&["check", "--property", "mm-set", path_str(&s1)])), 0);
    let sum = dir.path().join("sum.json");
    let out = dca(&[
        "op",
        "minkowski",
        "-o",
        path_str(&sum),
        path_str(&s1),
        path_str(&s2),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let out = dca(&["check", "--property", "mm-set", path_str(&sum)]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("witness:"));
}

#[test]
fn transform_maps_compose_with_checks() {
    let dir = TempDir::new().unwrap();
    let a3 = write(dir.path(), "a3.json", A3);
    let g = dir.path().join("g.json");
    let out = dca(&[
        "transform",
        "--map",
        "to-lnat",
        "-o",
        path_str(&g),
        path_str(&a3),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert_eq!(code(&dca(&["check", "--property", "lnat", path_str(&g)])), 0);

    let out = dca(&["transform", "--map", "conj-quad", path_str(&a3)]);
    assert_eq!(code(&out), 0);
    let v: Json = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        v["matrix"],
        serde_json::json!([[1, 0, -1], [0, 1, 0], [-1, 0, 1]])
    );
}

#[test]
fn minimize_reports_the_exact_minimum() {
    let dir = TempDir::new().unwrap();
    let a3 = write(dir.path(), "a3.json", A3);
    let out = dca(&["minimize", "--verify", path_str(&a3)]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("minimum value: 0"));
    assert!(text.contains("verified global: yes"));

    let out = dca(&["minimize", "--start", "2,-2,1", "--json", path_str(&a3)]);
    assert_eq!(code(&out), 0);
    let v: Json = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["value"], Json::from(0));
    assert!(v["steps"].as_u64().unwrap() >= 1);
}

#[test]
fn closure_campaigns_match_their_expectations() {
    let out = dca(&["closure", "--op", "shift", "--trials", "4", "--seed", "7"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("result: match"));

    let out = dca(&["closure", "--op", "permute", "--trials", "4", "--seed", "7", "--json"]);
    assert_eq!(code(&out), 0);
    let v: Json = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["matches_expectation"], Json::Bool(true));
    assert_eq!(v["expected"], "N");

    let out = dca(&["closure", "--op", "nonsense"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("choices:"));
}

#[test]
fn every_catalog_scenario_reproduces() {
    let listed = dca(&["repro", "list"]);
    assert_eq!(code(&listed), 0);
    let listing = stdout(&listed);
    for token in ["3.1", "4.1", "4.2", "T-n4", "table-1"] {
        assert!(listing.contains(token));
        let out = dca(&["repro", token]);
        assert_eq!(code(&out), 0, "scenario {token}: {}", stdout(&out));
        assert!(stdout(&out).contains("result: match"), "scenario {token}");
    }
    assert_eq!(code(&dca(&["repro", "9.9"])), 2);
}

#[test]
fn summary_row_matches_and_respects_the_thread_cap() {
    let out = dca_env(
        &["table1", "--trials", "3", "--seed", "1"],
        &[("DCA_THREADS", "1")],
    );
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("N Y Y N Y Y N N"));
    assert!(text.contains("MATCH"));

    let out = dca_env(&["repro", "list"], &[("DCA_THREADS", "zero")]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("DCA_THREADS"));
}
