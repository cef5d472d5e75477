use std::path::PathBuf;
use std::process::Command;

use repalg::quiver::{parse_dot, parse_presentation};

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_repalg")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn shipped(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../presentations")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn temp_file(name: &str, contents: &str) -> String {
    let path = std::env::temp_dir().join(format!("repalg-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn empty_file_is_an_input_error() {
    let f = temp_file("empty.txt", "");
    let (code, _, err) = run(&["validate", &f]);
    assert_eq!(code, 2);
    assert!(err.contains("empty presentation"));
}

#[test]
fn infinite_algebra_is_an_input_error() {
    let f = temp_file("loop.txt", "vertex 1\narrow x: 1 -> 1\n");
    assert_eq!(run(&["validate", &f]).0, 2);
}

#[test]
fn missing_file_and_bad_module_spec() {
    assert_eq!(run(&["validate", "/nonexistent/file.txt"]).0, 2);
    assert_eq!(run(&["loewy", &shipped("sl2_o0.txt"), "--module", "Q(1)"]).0, 2);
    assert_eq!(run(&["loewy", &shipped("sl2_o0.txt"), "--module", "P(7)"]).0, 2);
}

#[test]
fn a2_is_not_symmetric_nor_self_injective() {
    let (code, out, _) = run(&["symmetric", &shipped("a2.txt")]);
    assert_eq!(code, 1);
    assert!(out.starts_with("not symmetric"));
    assert_eq!(run(&["nakayama-perm", &shipped("a2.txt")]).0, 1);
}

#[test]
fn loewy_renders_layers() {
    let (code, out, _) = run(&["loewy", &shipped("sl2_o0.txt"), "--module", "P(2)"]);
    assert_eq!(code, 0);
    assert!(out.contains("dims: 1 2"));
    assert!(out.contains("loewy length: 3"));
    let layers: Vec<&str> = out.lines().skip_while(|l| *l != "layers:").skip(1).map(str::trim).collect();
    assert_eq!(layers, vec!["2", "1", "2"]);
}

#[test]
fn dot_round_trips() {
    let file = shipped("d_principal_n6.txt");
    let (code, dot, _) = run(&["dot", &file]);
    assert_eq!(code, 0);
    let original = parse_presentation(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(parse_dot(&dot).unwrap(), original.quiver);
}

#[test]
fn block_output_validates_and_is_deterministic() {
    let (code, a, _) = run(&["q2", "block", "principal", "--truncate", "5"]);
    assert_eq!(code, 0);
    assert_eq!(run(&["q2", "block", "d", "--truncate", "5"]).1, a);
    let f = temp_file("d5.txt", &a);
    let (code, out, _) = run(&["validate", &f]);
    assert_eq!(code, 0);
    assert!(out.contains("vertices: 10"));
}

#[test]
fn serre_check_is_reproducible() {
    let args = ["serre-check", &shipped("b_typical.txt"), "--seed", "5", "--trials", "4"];
    let first = run(&args);
    assert_eq!(first.0, 0);
    assert_eq!(first.1, run(&args).1);
    assert!(first.1.contains("holds: true"));
}

#[test]
fn q2_commands() {
    let (code, out, _) = run(&["q2", "ext1"]);
    assert_eq!((code, out.trim()), (0, "dim Ext¹(L(0), ΠL(0)) = 1"));
    let (code, out, _) = run(&["q2", "characters", "--k", "1/2"]);
    assert_eq!(code, 0);
    assert!(out.contains("length P(λ^k): 3"));
    assert!(out.contains("dim Ind N(λ^k): 32"));
    let (code, out, _) = run(&["q2", "verify", "c", "--truncate", "6"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("holds: true"));
    let (code, out, _) = run(&["q2", "classify", "1/2,-1/2"]);
    assert_eq!(code, 0);
    assert!(out.contains("block: c (half-integer-atypical)"));
    assert_eq!(run(&["q2", "classify", "0,1"]).0, 2);
    assert_eq!(run(&["q2", "block", "e"]).0, 2);
}

#[test]
fn ext_and_coapprox() {
    let (code, out, _) = run(&["ext", &shipped("sl2_o0.txt"), "--from", "S(1)", "--to", "S(1)", "--degree", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "dim Ext^2(S(1), S(1)) = 1");
    let (code, out, _) = run(&["coapprox", &shipped("sl2_o0.txt"), "--module", "P(1)"]);
    assert_eq!(code, 0);
    assert!(out.contains("dims: 0 1"));
    let (code, out, _) = run(&["c2-check", &shipped("sl2_o0.txt")]);
    assert_eq!(code, 0);
    assert!(out.contains("holds: true"));
}
