use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use msetkit::io::read_monoid;
use msetkit_core::enumeration::canonical_form;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn msetkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_msetkit"))
        .args(args)
        .env_remove("MSETKIT_CACHE_DIR")
        .output()
        .unwrap()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = msetkit(args);
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_exit_codes() {
    assert_eq!(run(&["validate", path(&data("c2.monoid"))]).0, 0);
    let (code, _, err) = run(&["validate", path(&data("broken.monoid"))]);
    assert_eq!(code, 2);
    assert!(err.contains("AssocViolation a=1 b=1 c=1"), "{err}");
    assert_eq!(run(&["validate", "no/such/file.monoid"]).0, 1);
}

#[test]
fn profile_flags() {
    let (code, out, _) = run(&["profile", path(&data("rz3.monoid"))]);
    assert_eq!(code, 0);
    assert!(out.contains("strongly_connected         true"));
    assert!(out.contains("de_morgan                  false"));
    let (_, json, _) = run(&["profile", "--json", path(&data("e2.monoid"))]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["profile"]["bilocal"], true);
    let (_, json, _) = run(&["profile", "--json", path(&data("t1.monoid"))]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["profile"]["trivial"], true);
}

#[test]
fn omega_counts_ideals() {
    assert!(run(&["omega", path(&data("e2.monoid"))])
        .1
        .starts_with("ideals: 3\n"));
    assert!(run(&["omega", path(&data("c2.monoid"))])
        .1
        .starts_with("ideals: 2\n"));
}

#[test]
fn points_of_end2_have_an_initial_object() {
    let (code, out, _) = run(&["points", path(&data("end2.monoid"))]);
    assert_eq!(code, 0);
    assert!(out.contains("initial point: 0"), "{out}");
    assert!(out.contains("terminal point: none"), "{out}");
}

#[test]
fn exponential_of_data_files() {
    let (code, out, _) = run(&[
        "exp",
        path(&data("c2.monoid")),
        path(&data("c2_regular.mset")),
        path(&data("c2_two_points.mset")),
    ]);
    assert_eq!(code, 0);
    // Maps C2 × C2 → 2 are determined by their values on (1, p).
    assert!(out.starts_with("carrier: 4\n"), "{out}");
}

#[test]
fn exp_rejects_sets_over_another_monoid() {
    let dir = tempfile::tempdir().unwrap();
    fs::copy(data("e2.monoid"), dir.path().join("e2.monoid")).unwrap();
    let x = dir.path().join("x.mset");
    fs::write(&x, "monoid e2.monoid\n1\n0 0\n").unwrap();
    let (code, _, err) = run(&["exp", path(&data("c2.monoid")), path(&x), path(&x)]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn enumerate_writes_canonical_files() {
    let dir = tempfile::tempdir().unwrap();
    for (n, count) in [(1, 1), (2, 2), (3, 7)] {
        let out = dir.path().join(format!("n{n}"));
        assert_eq!(
            run(&["enumerate", "--order", &n.to_string(), "--out", path(&out)]).0,
            0
        );
        let files: Vec<PathBuf> = fs::read_dir(&out)
            .unwrap()
            .map(|e| e.unwrap().path())
            .collect();
        assert_eq!(files.len(), count);
        for f in files {
            assert_eq!(run(&["validate", path(&f)]).0, 0);
            let m = read_monoid(&f).unwrap();
            let c = canonical_form(&m);
            assert_eq!(m, c.monoid());
            assert_eq!(f.file_stem().unwrap().to_str().unwrap(), c.hex());
        }
    }
    assert_eq!(
        run(&["enumerate", "--order", "20", "--out", path(dir.path())]).0,
        4
    );
}

#[test]
fn harness_reports_are_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let args = |out: &Path| {
        vec![
            "harness".to_string(),
            "--max-order".into(),
            "2".into(),
            "--blind".into(),
            "3".into(),
            "--out".into(),
            path(out).into(),
        ]
    };
    for out in [&a, &b] {
        let args = args(out);
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, stdout, _) = run(&args);
        assert_eq!(code, 0);
        assert!(stdout.starts_with("3 monoids, 0 disagreements"), "{stdout}");
    }
    let (a, b) = (fs::read(a).unwrap(), fs::read(b).unwrap());
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["monoids"].as_array().unwrap().len(), 3);
    assert_eq!(v["disagreements"], 0);
    assert_eq!(v["bounds"]["blind"], 3);
}

#[test]
fn harness_refuses_large_orders() {
    let (code, _, err) = run(&["harness", "--max-order", "20"]);
    assert_eq!(code, 4);
    assert!(err.contains("CapExceeded"), "{err}");
}

#[test]
fn check_prints_a_report_document() {
    let (code, json, _) = run(&["check", "--json", "--blind", "3", path(&data("rz3.monoid"))]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let theorems = v["theorems"].as_array().unwrap();
    assert_eq!(theorems.len(), 10);
    assert!(theorems.iter().all(|t| t["agreement"] == true));
    let de_morgan = theorems.iter().find(|t| t["id"] == "de_morgan").unwrap();
    assert_eq!(de_morgan["verdict"], false);
}

#[test]
fn cache_directory_is_filled_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let out = dir.path().join("out");
    let run_cached = || {
        Command::new(env!("CARGO_BIN_EXE_msetkit"))
            .args(["enumerate", "--order", "3", "--out", path(&out)])
            .env("MSETKIT_CACHE_DIR", &cache)
            .output()
            .unwrap()
            .status
    };
    assert!(run_cached().success());
    let bytes = fs::read(cache.join("order-3.bin")).unwrap();
    assert_eq!(bytes.len(), 7 * 10);
    assert!(run_cached().success());
    assert_eq!(fs::read(cache.join("order-3.bin")).unwrap(), bytes);
}
