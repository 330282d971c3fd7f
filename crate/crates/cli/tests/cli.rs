use std::path::PathBuf;
use std::process::{Command, Output};

const K4: &str = "p opd 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";
const CYCLE: &str = "c five-cycle\np opd 5 5\nk 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";

fn file(name: &str, text: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn opd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_opd")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn check_exit_codes() {
    let k4 = file("check_k4.txt", K4);
    let c5 = file("check_c5.txt", CYCLE);
    assert_eq!(code(&opd(&["check", k4.to_str().unwrap()])), 1);
    assert_eq!(code(&opd(&["check", c5.to_str().unwrap()])), 0);
}

#[test]
fn input_errors_exit_three() {
    let bad = file("bad.txt", "p opd 2 1\ne 1 3\n");
    let out = opd(&["check", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(code(&opd(&["check", "/nonexistent/file"])), 3);
    assert_eq!(code(&opd(&["frobnicate"])), 3);
    let k4 = file("nobudget_k4.txt", K4);
    assert_eq!(code(&opd(&["kernelize", k4.to_str().unwrap()])), 3);
}

#[test]
fn opd_exact_reports_value_or_cap() {
    let k4 = file("exact_k4.txt", K4);
    let out = opd(&["opd-exact", k4.to_str().unwrap(), "--cap", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "opd 1");
    let out = opd(&["opd-exact", k4.to_str().unwrap(), "--cap", "0"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn kernelize_outputs_parseable_instance_and_stats() {
    let k4 = file("kern_k4.txt", K4);
    let out = opd(&["kernelize", k4.to_str().unwrap(), "-k", "0", "--stats", "json"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("c verdict trivially-no"));
    let parsed = opd_kernel::pipeline::parse_instance(&text).unwrap();
    assert_eq!(parsed.k, Some(0));
    let stats: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(stats["verdict"], "trivially-no");

    let c5 = file("kern_c5.txt", CYCLE);
    let out = opd(&["kernelize", c5.to_str().unwrap(), "--mode", "strict", "--provider", "heuristic"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn kernelize_emits_trace_and_rule_fires() {
    let gen = opd(&["gen", "--seed", "4", "--n", "14", "--apex", "1", "--p", "0.5"]);
    let path = file("kern_gen.txt", &stdout(&gen));
    let out = opd(&["kernelize", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("c rule-fires "));
    assert!(text.lines().any(|l| l.starts_with("c trace ")));
}

#[test]
fn gen_is_deterministic_and_verifies() {
    let a = opd(&["gen", "--seed", "11", "--n", "12", "--apex", "2", "--p", "0.3"]);
    let b = opd(&["gen", "--seed", "11", "--n", "12", "--apex", "2", "--p", "0.3"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let g1 = file("gen1.txt", &stdout(&a));
    let g2 = file("gen2.txt", CYCLE);
    let out = opd(&["verify", g1.to_str().unwrap(), g2.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("passed 2 failed 0 errors 0"));
    assert_eq!(code(&opd(&["gen", "--seed", "1", "--n", "5", "--p", "2"])), 3);
}

#[test]
fn obstruction_subcommand() {
    let k4 = file("obs_k4.txt", K4);
    assert_eq!(code(&opd(&["obstruction", k4.to_str().unwrap(), "-k", "0"])), 0);
    assert_eq!(code(&opd(&["obstruction", k4.to_str().unwrap(), "-k", "1"])), 1);
}
