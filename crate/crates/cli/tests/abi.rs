//! The command-line contract: report layout, exit codes, schemas.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_llvkit"))
}

fn specs_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../specs")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_spec(name: &str) -> (Value, i32) {
    let path = specs_dir().join(name);
    let out = run(&["run", path.to_str().unwrap()]);
    let v: Value = serde_json::from_slice(&out.stdout).expect("report is JSON");
    (v, out.status.code().unwrap())
}

fn temp_spec(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("llvkit-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn every_sample_spec_runs_ok() {
    let mut n = 0;
    for entry in std::fs::read_dir(specs_dir()).unwrap() {
        let p = entry.unwrap().path();
        if p.extension().and_then(|e| e.to_str()) != Some("json") {
            continue;
        }
        let out = run(&["run", p.to_str().unwrap()]);
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["status"], "ok", "{}: {}", p.display(), v);
        assert_eq!(out.status.code(), Some(0), "{}", p.display());
        n += 1;
    }
    assert!(n >= 8);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let p = specs_dir().join("llv_abelian_surface.json");
    let a = run(&["run", p.to_str().unwrap()]).stdout;
    let b = run(&["run", p.to_str().unwrap()]).stdout;
    assert_eq!(a, b);
}

#[test]
fn report_echoes_hash_and_version() {
    let p = specs_dir().join("involution_symplectic.json");
    let bytes = std::fs::read(&p).unwrap();
    let (v, _) = run_spec("involution_symplectic.json");
    assert_eq!(v["input_sha256"], llvkit_cli::run::sha256_hex(&bytes));
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert!(v.get("timing_ms").is_none());
}

#[test]
fn known_values_from_sample_specs() {
    let (v, _) = run_spec("llv_abelian_surface.json");
    assert_eq!(v["result"]["llv_dim"], 28);
    assert_eq!(v["result"]["jordan_lefschetz"], true);

    let (v, _) = run_spec("llv_k3_type.json");
    assert_eq!(v["result"]["llv_dim"], 10);

    let (v, _) = run_spec("decompose_swap_quotient.json");
    assert_eq!(v["result"]["ideal_dims"], serde_json::json!([3, 3]));

    let (v, _) = run_spec("involution_symplectic.json");
    assert_eq!(v["result"]["type"], "Symplectic");
    assert_eq!(v["result"]["skew_dim"], 3);

    let (v, _) = run_spec("groupalg_s3.json");
    assert_eq!(v["result"]["idempotent_count"], 3);
    assert_eq!(v["result"]["isotypic_dims"], serde_json::json!([1, 2, 0]));

    let (v, _) = run_spec("clifford.json");
    assert_eq!(v["result"]["elements"][0]["similitude"], "1/4");
}

#[test]
fn out_flag_writes_file_and_seed_override_is_recorded() {
    let p = specs_dir().join("spinor.json");
    let out = std::env::temp_dir().join(format!("llvkit-out-{}.json", std::process::id()));
    let o = run(&["run", p.to_str().unwrap(), "--seed", "11", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_slice(&std::fs::read(&out).unwrap()).unwrap();
    assert_eq!(v["seed"], 11);
    std::fs::remove_file(out).ok();
}

#[test]
fn timing_flag_adds_field() {
    let p = specs_dir().join("witt.json");
    let o = run(&["run", p.to_str().unwrap(), "--timing"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["timing_ms"].is_u64());
}

#[test]
fn malformed_json_exits_2() {
    let p = temp_spec("bad.json", "{ not json");
    let o = run(&["run", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["error"]["code"], "schema");
}

#[test]
fn unknown_field_exits_2() {
    let p = temp_spec("unknown.json", r#"{"kind":"llv","payload":{"algebra":"unit","extra":1}}"#);
    let o = run(&["run", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn library_precondition_exits_2_with_code() {
    let p = temp_spec("degenerate.json", r#"{"kind":"involution","payload":{"adjoint":[["1","0"],["0","0"]]}}"#);
    let o = run(&["run", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "error");
    assert_ne!(v["error"]["code"], "schema");
}

#[test]
fn missing_file_exits_2() {
    let o = run(&["run", "/nonexistent/spec.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn schema_for_every_kind() {
    for kind in ["llv", "decompose", "involution", "spinor", "clifford", "witt", "groupalg", "selftest"] {
        let o = run(&["schema", kind]);
        assert_eq!(o.status.code(), Some(0), "{kind}");
        let v: Value = serde_json::from_slice(&o.stdout).unwrap();
        assert!(v["properties"]["payload"].is_object(), "{kind}");
    }
}

#[test]
fn selftest_filter_prints_lines() {
    let o = run(&["selftest", "--filter", "groupalg"]);
    assert_eq!(o.status.code(), Some(0));
    let s = String::from_utf8(o.stdout).unwrap();
    assert_eq!(s.lines().count(), 2);
    assert!(s.lines().all(|l| l.contains("PASS")));
}

#[test]
fn selftest_unknown_filter_exits_2() {
    let o = run(&["selftest", "--filter", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}
