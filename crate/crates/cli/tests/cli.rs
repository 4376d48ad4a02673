use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn latmod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latmod"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn z12(dir: &TempDir) -> PathBuf {
    let out = latmod(&["gen", "zn", "--n", "12"]);
    assert!(out.status.success());
    write(dir.path(), "z12.latspec", &stdout(&out))
}

#[test]
fn gen_then_check() {
    let dir = TempDir::new().unwrap();
    let path = z12(&dir);
    let out = latmod(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("ok: |L| = 6, |M| = 6\n"), "{text}");
    assert!(text.contains("multiplication module: true"));
}

#[test]
fn gen_is_deterministic() {
    let a = stdout(&latmod(&["gen", "frame", "--shape", "boolean(2)"]));
    let b = stdout(&latmod(&["gen", "frame", "--shape", "boolean:2"]));
    assert_eq!(a, b);
    assert!(
        a.starts_with("#LATSPEC 1\nlattice\nelements {1,2} {1} {2} {}\n"),
        "{a}"
    );
}

#[test]
fn check_reports_axiom_failures() {
    let dir = TempDir::new().unwrap();
    // Diamond with a·b = 1.
    let text = "#LATSPEC 1
lattice
elements 0 a b 1
leq 0 a
leq 0 b
leq a 1
leq b 1
mul 0 0 0
mul 0 a 0
mul 0 b 0
mul 0 1 0
mul a a a
mul a b 1
mul a 1 a
mul b b b
mul b 1 b
mul 1 1 1
end
";
    let path = write(dir.path(), "bad.latspec", text);
    let out = latmod(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stdout(&out).contains("product-below-meet"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn parse_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    let path = write(
        dir.path(),
        "open.latspec",
        "#LATSPEC 1\nlattice\nelements a\n",
    );
    let out = latmod(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no `end`"));
}

#[test]
fn classify_one_element() {
    let dir = TempDir::new().unwrap();
    let path = z12(&dir);
    let out = latmod(&["classify", path.to_str().unwrap(), "--element", "(4)"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split('\t').collect();
    // element, proper, maximal, prime, primary, ...
    assert_eq!(&row[..5], &["(4)", "yes", "no", "no", "yes"]);
    assert_eq!(row.last(), Some(&"(2)"));

    let out = latmod(&["classify", path.to_str().unwrap(), "--element", "(5)"]);
    assert_eq!(out.status.code(), Some(2));
    let out = latmod(&["classify", path.to_str().unwrap(), "--side", "l"]);
    assert_eq!(stdout(&out).lines().count(), 7);
}

#[test]
fn verify_single_and_all() {
    let dir = TempDir::new().unwrap();
    let path = z12(&dir);
    let p = path.to_str().unwrap();
    let out = latmod(&["verify", p, "--theorem", "T-C41", "--tsv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "T-C41\tPASS\t5\t-\n");

    let out = latmod(&["verify", p]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!stdout(&out).contains("FAIL"));

    let out = latmod(&["verify", p, "--theorem", "T-C99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_uses_declared_expansions() {
    let dir = TempDir::new().unwrap();
    let mut text = stdout(&latmod(&["gen", "zn", "--n", "4"]));
    text.push_str("expansion up on module\nmap (0) (2)\nmap (2) (2)\nmap (1) (1)\nend\n");
    let path = write(dir.path(), "z4.latspec", &text);
    let out = latmod(&["check", path.to_str().unwrap()]);
    assert!(stdout(&out).contains("expansions: 1 on M, 0 on L"));
    let out = latmod(&["verify", path.to_str().unwrap(), "--tsv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().any(|l| l.starts_with("T-C2\tPASS")));
}

#[test]
fn dot_output() {
    let dir = TempDir::new().unwrap();
    let path = z12(&dir);
    let a = stdout(&latmod(&["dot", path.to_str().unwrap(), "--side", "m"]));
    let b = stdout(&latmod(&["dot", path.to_str().unwrap(), "--side", "m"]));
    assert_eq!(a, b);
    assert!(a.starts_with("digraph module {"));
    assert_eq!(a.matches("->").count(), 7);
}

#[test]
fn search_lines() {
    let out = latmod(&[
        "search",
        "--goal",
        "delta1-not-delta0",
        "--family",
        "zn",
        "--max",
        "12",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().any(|l| l == "Z12\t(4)"));

    let out = latmod(&[
        "search",
        "--goal",
        "theorem-fail(T-C41)",
        "--family",
        "frame-chain",
        "--max",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(latmod(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(latmod(&["gen", "zn", "--n", "1"]).status.code(), Some(2));
    assert_eq!(
        latmod(&["search", "--goal", "x", "--family", "zn", "--max", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        latmod(&[
            "search",
            "--goal",
            "primary-not-prime",
            "--family",
            "zn",
            "--max",
            "0"
        ])
        .status
        .code(),
        Some(2)
    );
}
