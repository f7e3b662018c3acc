//! The command line driven through `cli::run` with files in a temporary directory.

use domdim::algebra::Algebra;
use domdim::cli::{run, EXIT_INCONCLUSIVE, EXIT_INVALID, EXIT_OK};
use domdim::corpus::{a3_path, dual_numbers};
use domdim::domdim::canonical_tilting;
use domdim::exactla::Field;
use domdim::io::{algebra_to_json, module_to_json};
use domdim::modrep::{inj, proj, regular, top, Module};
use domdim::quiver::linear_quiver_algebra;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, MutexGuard};
use tempfile::TempDir;

// ALG_CAP is process-wide, so every test holds this lock.
static ENV: Mutex<()> = Mutex::new(());

fn lock() -> MutexGuard<'static, ()> {
    let g = ENV.lock().unwrap_or_else(|e| e.into_inner());
    std::env::remove_var("ALG_CAP");
    g
}

fn call(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("domdim").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

struct Files {
    dir: TempDir,
}

impl Files {
    fn new() -> Files {
        Files { dir: tempfile::tempdir().unwrap() }
    }

    fn write(&self, name: &str, v: &Value) -> PathBuf {
        let p = self.dir.path().join(name);
        std::fs::write(&p, serde_json::to_string_pretty(v).unwrap()).unwrap();
        p
    }

    fn algebra(&self, name: &str, a: &Algebra) -> PathBuf {
        self.write(name, &algebra_to_json(a))
    }

    fn module(&self, name: &str, m: &Module, algebra_file: &str) -> PathBuf {
        self.write(name, &module_to_json(m, json!(algebra_file)))
    }
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn parse(out: &str) -> Value {
    serde_json::from_str(out).unwrap_or_else(|e| panic!("{e}: {out}"))
}

fn lq3() -> Arc<Algebra> {
    linear_quiver_algebra(3).unwrap()
}

#[test]
fn inspect_reports_invariants() {
    let _g = lock();
    let f = Files::new();
    let a = f.algebra("a3.json", &a3_path(Field::Rational).unwrap());
    let (code, out, _) = call(&["inspect", s(&a)]);
    assert_eq!(code, EXIT_OK);
    let v = parse(&out);
    assert_eq!(v["command"], "inspect");
    assert_eq!(v["results"]["dim"], 6);
    assert_eq!(v["results"]["cartan"].as_array().unwrap().len(), 3);
    assert_eq!(v["results"]["dm"], json!({"kind": "finite", "value": 1}));
    assert_eq!(v["inputs"][s(&a)].as_str().unwrap().len(), 64);
}

#[test]
fn reports_are_byte_stable() {
    let _g = lock();
    let f = Files::new();
    let a = f.algebra("lq.json", &lq3());
    let first = call(&["domdim", s(&a)]);
    let second = call(&["domdim", s(&a)]);
    assert_eq!(first, second);
    assert_eq!(first.0, EXIT_OK);
    assert!(!first.1.contains("timing_ms"));
    let (_, with_timing, _) = call(&["domdim", s(&a), "--timing"]);
    assert!(parse(&with_timing)["timing_ms"].is_u64());
}

#[test]
fn markdown_output() {
    let _g = lock();
    let f = Files::new();
    let a = f.algebra("d.json", &dual_numbers(Field::Rational).unwrap());
    let (code, out, _) = call(&["--format", "markdown", "inspect", s(&a)]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("# `inspect`"));
    assert!(out.contains("**dm**: ∞"));
    assert!(out.contains("| **0** | 2 |"));
}

#[test]
fn malformed_json_reports_location() {
    let _g = lock();
    let f = Files::new();
    let p = f.dir.path().join("broken.json");
    std::fs::write(&p, "{\n  \"field\": \"Q\",\n  \"dim\": ,\n}").unwrap();
    let (code, out, err) = call(&["inspect", s(&p)]);
    assert_eq!(code, EXIT_INVALID);
    assert!(out.is_empty());
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn unknown_flags_print_usage() {
    let _g = lock();
    let (code, _, err) = call(&["inspect", "--frobnicate", "x.json"]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("Usage"), "{err}");
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("repro"));
}

#[test]
fn cap_flag_and_environment() {
    let _g = lock();
    let f = Files::new();
    let a = f.algebra("lq.json", &lq3());
    let (code, out, _) = call(&["domdim", s(&a), "--cap", "2"]);
    assert_eq!(code, EXIT_INCONCLUSIVE);
    assert_eq!(parse(&out)["results"]["dm"], json!({"kind": "at_least", "cap": 2}));

    std::env::set_var("ALG_CAP", "2");
    let (code, _, _) = call(&["domdim", s(&a)]);
    assert_eq!(code, EXIT_INCONCLUSIVE);
    let (code, out, _) = call(&["domdim", s(&a), "--cap", "10"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(parse(&out)["results"]["dm"], json!({"kind": "finite", "value": 3}));
    std::env::set_var("ALG_CAP", "lots");
    let (code, _, err) = call(&["domdim", s(&a)]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("ALG_CAP"));
    std::env::remove_var("ALG_CAP");
}

#[test]
fn domdim_of_a_module() {
    let _g = lock();
    let f = Files::new();
    let alg = lq3();
    let a = f.algebra("lq.json", &alg);
    let m = f.module("reg.json", &regular(&alg), "lq.json");
    let (code, out, _) = call(&["domdim", s(&a), "--module", s(&m)]);
    assert_eq!(code, EXIT_OK);
    let v = parse(&out);
    assert_eq!(v["results"]["dm"], json!({"kind": "finite", "value": 3}));
    assert_eq!(v["results"]["module_dim"], alg.dim());
    assert_eq!(v["inputs"].as_object().unwrap().len(), 2);
}

#[test]
fn tilting_check_and_gradient() {
    let _g = lock();
    let f = Files::new();
    let alg = lq3();
    let a = f.algebra("lq.json", &alg);
    let t1 = f.module("t1.json", &canonical_tilting(&alg, 1, 16).unwrap(), "lq.json");
    let (code, out, _) = call(&["tilting", "check", s(&a), s(&t1)]);
    assert_eq!(code, EXIT_OK);
    let v = parse(&out);
    assert_eq!(v["results"]["is_tilting"], true);
    assert_eq!(v["results"]["pd"], json!({"kind": "finite", "value": 1}));

    let (code, out, _) = call(&["gradient", s(&a), s(&t1)]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(parse(&out)["results"]["global"], json!({"kind": "finite", "value": 1}));

    let simple = f.module("s.json", &top(&proj(&alg, 0)).unwrap().0, "lq.json");
    let (code, out, _) = call(&["tilting", "check", s(&a), s(&simple)]);
    assert_eq!(code, EXIT_INVALID);
    assert_eq!(parse(&out)["results"]["is_tilting"], false);
    let (code, _, _) = call(&["gradient", s(&a), s(&simple)]);
    assert_eq!(code, EXIT_INVALID);
}

#[test]
fn endomorphism_algebra_with_cartan() {
    let _g = lock();
    let f = Files::new();
    let alg = a3_path(Field::Rational).unwrap();
    let a = f.algebra("a3.json", &alg);
    let m = f.module("i.json", &inj(&alg, 0), "a3.json");
    let (code, out, _) = call(&["endo", s(&a), s(&m), "--cartan"]);
    assert_eq!(code, EXIT_OK);
    let v = parse(&out);
    assert_eq!(v["command"], "endo --cartan");
    assert_eq!(v["results"]["dim"], 1);
    assert_eq!(v["results"]["cartan"], json!([[1]]));
}

#[test]
fn invalid_module_is_rejected() {
    let _g = lock();
    let f = Files::new();
    let alg = a3_path(Field::Rational).unwrap();
    let a = f.algebra("a3.json", &alg);
    let bad = f.write("bad.json", &json!({"algebra": "a3.json", "dim": 1, "action": vec![json!([[1]]); alg.dim()]}));
    let (code, _, err) = call(&["domdim", s(&a), "--module", s(&bad)]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.starts_with("error:"), "{err}");
}

#[test]
fn reproductions_pass() {
    let _g = lock();
    let (code, out, _) = call(&["repro", "liu-schulz"]);
    assert_eq!(code, EXIT_OK);
    let v = parse(&out);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["ok"] == true));
    let (code, out, _) = call(&["repro", "linear-quiver", "--n", "3"]);
    assert_eq!(code, EXIT_OK, "{out}");
    let (code, _, _) = call(&["repro", "linear-quiver", "--n", "2"]);
    assert_eq!(code, EXIT_INVALID);
    let (code, _, _) = call(&["repro", "liu-schulz", "--q", "1"]);
    assert_eq!(code, EXIT_INVALID);
}
