//! End-to-end checks of the command-line binary: exact stdout bytes, exit
//! codes, JSON round-trips, and determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

use tutte::benzenoid::{closed_chain, reference_fixtures, ChainFamily};
use tutte::poly::Poly;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tutte"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tutte"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("tutte-cli-{}-{}", std::process::id(), name));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn compute_fan_examples() {
    let out = run(&[
        "compute", "--family", "fan", "--n", "2", "--method", "delcon",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "x^2 + x + y\n");
}

#[test]
fn compute_pyrene_matches_reference() {
    let out = run(&["compute", "--family", "pyrene", "--n", "1"]);
    assert!(out.status.success());
    let want = format!("{}\n", reference_fixtures().pyrene[0].to_canonical_text());
    assert_eq!(stdout_of(&out), want);
}

#[test]
fn compute_graph_file() {
    let path = temp_file("k2.txt", "vertices 2\n0 1\n");
    let out = run(&["compute", "--graph", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "x\n");
}

#[test]
fn compute_custom_family() {
    let path = temp_file("base.txt", "vertices 2\n0 1\n");
    let out = run(&[
        "compute",
        "--base",
        path.to_str().unwrap(),
        "--marks",
        "0,1",
        "--shape",
        "F++",
        "--n",
        "2",
    ]);
    assert!(out.status.success());
    let direct = run(&[
        "compute",
        "--base",
        path.to_str().unwrap(),
        "--marks",
        "0,1",
        "--shape",
        "F++",
        "--n",
        "2",
        "--method",
        "subset",
    ]);
    assert_eq!(stdout_of(&out), stdout_of(&direct));
}

#[test]
fn tau_examples() {
    for (family, n, want) in [
        ("linear", "2", "35"),
        ("triphenylene", "2", "1369728"),
        ("pyrene", "3", "1212779520"),
    ] {
        let out = run(&["tau", "--family", family, "--n", n]);
        assert!(out.status.success(), "{family} n={n}");
        assert_eq!(stdout_of(&out), format!("{want}\n"), "{family} n={n}");
    }
}

#[test]
fn tau_methods_agree() {
    for method in ["recurrence", "eval", "kirchhoff"] {
        let out = run(&["tau", "--family", "pyrene", "--n", "2", "--method", method]);
        assert!(out.status.success(), "{method}");
        assert_eq!(stdout_of(&out), "1150848\n", "{method}");
    }
}

#[test]
fn text_output_is_deterministic() {
    let a = run(&["compute", "--family", "triphenylene", "--n", "2"]);
    let b = run(&["compute", "--family", "triphenylene", "--n", "2"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn json_output_round_trips() {
    let out = run(&[
        "compute",
        "--family",
        "triphenylene",
        "--n",
        "1",
        "--output",
        "json",
    ]);
    assert!(out.status.success());
    let parsed = Poly::from_json(stdout_of(&out).trim()).unwrap();
    assert_eq!(parsed, closed_chain(ChainFamily::Triphenylene, 1).unwrap());
}

#[test]
fn verify_scopes_pass() {
    for scope in ["appendix", "duality"] {
        let out = run(&["verify", scope]);
        assert!(out.status.success(), "{scope} failed");
        let text = stdout_of(&out);
        assert!(
            text.lines().any(|l| l.starts_with("PASS ")),
            "{scope}: {text}"
        );
        assert!(!text.contains("FAIL"), "{scope}: {text}");
        assert!(
            text.lines().last().unwrap().contains("0 failed"),
            "{scope}: {text}"
        );
    }
}

#[test]
fn exit_code_input_error() {
    let out = run(&["compute", "--family", "wheel", "--n", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["compute", "--family", "linear"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["tau", "--family", "linear", "--n", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_code_infeasible() {
    let out = run(&[
        "compute", "--family", "linear", "--n", "5", "--method", "subset",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let path = temp_file("closed.txt", "vertices 2\n0 1\n");
    let out = run(&[
        "compute",
        "--graph",
        path.to_str().unwrap(),
        "--method",
        "closed",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["tau", "--family", "wheel", "--n", "4"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn subset_limit_env_var() {
    // fan-12 has 23 edges: over the default limit, under the raised one.
    let args = [
        "compute", "--family", "fan", "--n", "12", "--method", "subset",
    ];
    let default_limit = run(&args);
    assert_eq!(default_limit.status.code(), Some(3));
    let raised = run_with_env(&args, "TUTTE_SUBSET_EDGE_LIMIT", "23");
    assert!(
        raised.status.success(),
        "raised limit should admit 23 edges"
    );
    let lowered = run_with_env(
        &[
            "compute", "--family", "fan", "--n", "3", "--method", "subset",
        ],
        "TUTTE_SUBSET_EDGE_LIMIT",
        "4",
    );
    assert_eq!(lowered.status.code(), Some(3));
    let bad = run_with_env(
        &[
            "compute", "--family", "fan", "--n", "2", "--method", "subset",
        ],
        "TUTTE_SUBSET_EDGE_LIMIT",
        "many",
    );
    assert_eq!(bad.status.code(), Some(2));
}
