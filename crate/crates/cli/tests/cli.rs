//! End-to-end tests of the command-line surface: output formats, stdin
//! handling and exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const C5: &str = "Dhc"; // the five-cycle 0-1-2-3-4-0
const P4: &str = "Ch"; // the path 0-1-2-3

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cographs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cographs"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(input.as_bytes())
        .expect("write stdin");
    child.wait_with_output().expect("binary exits")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn recognize_c5() {
    let out = run(&["recognize", C5]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("cograph: NO"));
    assert!(text.contains("2-cograph: NO (witness: 0 1 2 3 4)"));
}

#[test]
fn recognize_with_k_flag() {
    let out = run(&["recognize", C5, "--k", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("3-cograph: YES"));
}

#[test]
fn recognize_from_stdin_prefixes_lines() {
    let out = run_with_stdin(&["recognize", "-"], &format!("{C5}\n{P4}\n"));
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains(&format!("{C5} 2-cograph: NO")));
    assert!(text.contains(&format!("{P4} 2-cograph: YES")));
}

#[test]
fn decompose_p4_evaluates_back() {
    let out = run(&["decompose", P4]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with('('), "expected an s-expression, got {text}");
    assert!(text.contains("K1"));
}

#[test]
fn decompose_c5_prints_witness() {
    let out = run(&["decompose", C5]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "witness: 0 1 2 3 4");
}

#[test]
fn minimal_c5() {
    let out = run(&["minimal", C5]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("minimal non-2-cograph: YES"));
    assert!(text.contains("in class G: YES"));
}

#[test]
fn iso_c5_is_self_complementary() {
    // DUW is the complement of Dhc
    let out = run(&["iso", C5, "DUW"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "isomorphic");

    let out = run(&["iso", C5, P4]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "non-isomorphic");
}

#[test]
fn enumerate_order_five_json() {
    let out = run(&["enumerate", "--order", "5", "--jobs", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"order\":5"));
    assert!(text.contains("\"members_total\":1"));
    assert!(text.contains("\"self_complementary\":1"));
}

#[test]
fn enumerate_reads_graph6_input_files() {
    let dir = std::env::temp_dir().join("cographs-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("five.g6");
    let g6: Vec<String> = {
        use cographs::enumerate::generate_graphs;
        use cographs::graph6::emit_graph6;
        generate_graphs(5).unwrap().map(|g| emit_graph6(&g)).collect()
    };
    std::fs::write(&input, g6.join("\n")).unwrap();
    let emitted = dir.join("reps.g6");
    let out = run(&[
        "enumerate",
        "--order",
        "5",
        "--jobs",
        "1",
        "--input",
        input.to_str().unwrap(),
        "--emit-g6",
        emitted.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"members_total\":1"));
    let reps = std::fs::read_to_string(&emitted).unwrap();
    assert_eq!(reps.lines().count(), 1);
}

#[test]
fn dot_plain_output() {
    let out = run(&["dot", "A_"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "graph {\n  0;\n  1;\n  0 -- 1;\n}\n");
}

#[test]
fn malformed_input_exits_two() {
    let out = run(&["recognize", "D"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn verify_small_bound_passes() {
    // order 5 keeps the census tiny; the fixed-cost checks still run
    let out = run(&["verify", "--max-order", "5", "--jobs", "1"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("PASS criterion 1"));
    assert!(text.contains("all 12 checks passed"));
    assert!(!text.contains("FAIL"));
}
