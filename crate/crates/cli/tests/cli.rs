//! End-to-end runs of the binary: exit codes, output determinism, and the
//! document round trip.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tdsys_cli::document::SystemDocument;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tdsys"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn workdir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("tdsys-cli-tests").join(format!(
        "{}-{}",
        name,
        std::process::id()
    ));
    std::fs::create_dir_all(&dir).expect("create scratch dir");
    dir
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf-8")
}

/// Writes the degenerate worked instance and returns its path.
fn degenerate_doc(dir: &Path) -> PathBuf {
    let path = dir.join("degenerate.json");
    let out = bin()
        .args([
            "diameter2",
            "0",
            "1",
            "2",
            "0",
            "1",
            "2",
            "1",
            "1",
            "1",
            "--out",
        ])
        .arg(&path)
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    path
}

fn irreducible_doc(dir: &Path) -> PathBuf {
    let path = dir.join("irreducible.json");
    let out = bin()
        .args([
            "diameter2",
            "0",
            "1",
            "2",
            "0",
            "1",
            "2",
            "1",
            "1",
            "5",
            "--out",
        ])
        .arg(&path)
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    path
}

#[test]
fn check_levels_give_the_documented_exit_codes() {
    let dir = workdir("check-levels");
    let degenerate = degenerate_doc(&dir);
    let irreducible = irreducible_doc(&dir);

    let mtd = bin().args(["check"]).arg(&degenerate).output().unwrap();
    assert_eq!(mtd.status.code(), Some(0));
    assert!(stdout_of(&mtd).contains("PASS (mtd level)"));

    let td = bin()
        .args(["check", "--level", "td"])
        .arg(&degenerate)
        .output()
        .unwrap();
    assert_eq!(td.status.code(), Some(1));
    assert!(stdout_of(&td).contains("FAIL (td level)"));
    assert!(stdout_of(&td).contains("irreducible: no"));

    let td_ok = bin()
        .args(["check", "--level", "td"])
        .arg(&irreducible)
        .output()
        .unwrap();
    assert_eq!(td_ok.status.code(), Some(0));
    assert!(stdout_of(&td_ok).contains("irreducible: yes"));
}

#[test]
fn malformed_documents_exit_two_with_context() {
    let dir = workdir("malformed");
    let missing = dir.join("missing.json");
    let out = bin().args(["check"]).arg(&missing).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("missing.json"));

    let truncated = dir.join("truncated.json");
    std::fs::write(&truncated, "{\"field\":").unwrap();
    let out = bin().args(["check"]).arg(&truncated).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("invalid JSON"));

    // A structurally valid document with one unparseable scalar: the error
    // names the offending cell.
    let degenerate = degenerate_doc(&dir);
    let text = std::fs::read_to_string(&degenerate).unwrap();
    let broken = text.replacen("\"1\"", "\"one\"", 1);
    let bad_scalar = dir.join("bad-scalar.json");
    std::fs::write(&bad_scalar, broken).unwrap();
    let out = bin().args(["check"]).arg(&bad_scalar).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr_of(&out).contains("a["),
        "error should carry a cell location: {}",
        stderr_of(&out)
    );
}

#[test]
fn wrong_operators_fail_at_exit_one() {
    let dir = workdir("assembly");
    let degenerate = degenerate_doc(&dir);
    let text = std::fs::read_to_string(&degenerate).unwrap();
    // Corrupt one matrix entry: the document stays well-formed but the
    // operator no longer matches its declared eigenvalues.
    let doc: SystemDocument = SystemDocument::parse_str(&text).unwrap();
    let mut tampered = doc.clone();
    tampered.a[0][0] = "99".to_owned();
    let path = dir.join("tampered.json");
    std::fs::write(&path, tampered.to_canonical_json()).unwrap();
    let out = bin().args(["check"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).contains("eigenvalue verification failed"));
}

#[test]
fn machine_output_is_deterministic() {
    let dir = workdir("determinism");
    let degenerate = degenerate_doc(&dir);
    let first = bin()
        .args(["check", "--format", "machine", "--level", "td"])
        .arg(&degenerate)
        .output()
        .unwrap();
    let second = bin()
        .args(["check", "--format", "machine", "--level", "td"])
        .arg(&degenerate)
        .output()
        .unwrap();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.status.code(), second.status.code());

    let q1 = bin()
        .args(["quotient", "--format", "machine"])
        .arg(&degenerate)
        .output()
        .unwrap();
    let q2 = bin()
        .args(["quotient", "--format", "machine"])
        .arg(&degenerate)
        .output()
        .unwrap();
    assert_eq!(q1.stdout, q2.stdout);
    assert_eq!(q1.status.code(), Some(0));

    let d1 = run(&[
        "diameter2",
        "0",
        "1",
        "2",
        "0",
        "1",
        "2",
        "1",
        "1",
        "1",
        "--format",
        "machine",
        "--expect",
    ]);
    let d2 = run(&[
        "diameter2",
        "0",
        "1",
        "2",
        "0",
        "1",
        "2",
        "1",
        "1",
        "1",
        "--format",
        "machine",
        "--expect",
    ]);
    assert_eq!(d1.stdout, d2.stdout);
    assert_eq!(d1.status.code(), Some(0));
}

#[test]
fn emitted_documents_are_canonical() {
    let dir = workdir("canonical");
    let path = degenerate_doc(&dir);
    let text = std::fs::read_to_string(&path).unwrap();
    let doc = SystemDocument::parse_str(&text).unwrap();
    assert_eq!(doc.to_canonical_json(), text, "emitted file is canonical");
    assert_eq!(doc.dimension, 4);
    assert_eq!(doc.thetas, vec!["0", "1", "2"]);
}

#[test]
fn parallel_checks_match_serial_output() {
    let dir = workdir("jobs");
    let mut paths = Vec::new();
    for (i, zeta2) in ["1", "2", "3", "5", "7"].iter().enumerate() {
        let path = dir.join(format!("sys{i}.json"));
        let out = bin()
            .args([
                "diameter2",
                "0",
                "1",
                "2",
                "0",
                "1",
                "2",
                "1",
                "1",
                zeta2,
                "--out",
            ])
            .arg(&path)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        paths.push(path);
    }
    let serial = bin()
        .args(["check", "--level", "td", "--format", "machine"])
        .args(&paths)
        .output()
        .unwrap();
    let parallel = bin()
        .args([
            "check", "--level", "td", "--format", "machine", "--jobs", "4",
        ])
        .args(&paths)
        .output()
        .unwrap();
    assert_eq!(serial.stdout, parallel.stdout);
    assert_eq!(
        serial.status.code(),
        Some(1),
        "the degenerate member fails td"
    );
    assert_eq!(parallel.status.code(), Some(1));
}

#[test]
fn field_flag_grammar_is_enforced() {
    let gf7 = run(&[
        "diameter2",
        "0",
        "1",
        "2",
        "0",
        "1",
        "2",
        "1",
        "1",
        "1",
        "--field",
        "GFp:7",
    ]);
    assert_eq!(gf7.status.code(), Some(0), "{}", stderr_of(&gf7));

    let composite = run(&[
        "diameter2",
        "0",
        "1",
        "2",
        "0",
        "1",
        "2",
        "1",
        "1",
        "1",
        "--field",
        "GFp:6",
    ]);
    assert_eq!(composite.status.code(), Some(2));
    assert!(stderr_of(&composite).contains("--field"));

    let junk = run(&[
        "diameter2",
        "0",
        "1",
        "2",
        "0",
        "1",
        "2",
        "1",
        "1",
        "1",
        "--field",
        "R",
    ]);
    assert_eq!(junk.status.code(), Some(2));
}

#[test]
fn diameter2_validation_failures_exit_one() {
    let zeta2_zero = run(&["diameter2", "0", "1", "2", "0", "1", "2", "1", "1", "0"]);
    assert_eq!(zeta2_zero.status.code(), Some(1));
    assert!(stderr_of(&zeta2_zero).contains("zeta_2"));

    let duplicate = run(&["diameter2", "0", "0", "2", "0", "1", "2", "1", "1", "1"]);
    assert_eq!(duplicate.status.code(), Some(1));

    let zeta0 = run(&["diameter2", "0", "1", "2", "0", "1", "2", "2", "1", "1"]);
    assert_eq!(zeta0.status.code(), Some(1));

    // zeta_2 = -8 zeroes the admissibility sum for these eigenvalues.
    let inadmissible = run(&[
        "diameter2",
        "0",
        "1",
        "2",
        "0",
        "1",
        "2",
        "1",
        "1",
        "--",
        "-8",
    ]);
    assert_eq!(inadmissible.status.code(), Some(1));
    assert!(stderr_of(&inadmissible).to_lowercase().contains("admissib"));
}

#[test]
fn scalar_parse_errors_name_their_argument() {
    let out = run(&["diameter2", "0", "1", "2", "0", "x", "2", "1", "1", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("theta_star_1"));
}

#[test]
fn quotient_rejects_unreadable_or_nonsharp_inputs() {
    let dir = workdir("quotient-errors");
    let missing = dir.join("absent.json");
    let out = bin().args(["quotient"]).arg(&missing).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Doubling a system keeps the axioms but breaks sharpness.
    let degenerate = degenerate_doc(&dir);
    let doc = SystemDocument::parse_str(&std::fs::read_to_string(&degenerate).unwrap()).unwrap();
    let n = doc.dimension;
    let zero_row = vec!["0".to_owned(); n];
    let double = |m: &Vec<Vec<String>>| -> Vec<Vec<String>> {
        let mut out = Vec::new();
        for row in m {
            let mut r = row.clone();
            r.extend(zero_row.iter().cloned());
            out.push(r);
        }
        for row in m {
            let mut r = zero_row.clone();
            r.extend(row.iter().cloned());
            out.push(r);
        }
        out
    };
    let mut doubled = doc.clone();
    doubled.dimension = 2 * n;
    doubled.a = double(&doc.a);
    doubled.a_star = double(&doc.a_star);
    let path = dir.join("doubled.json");
    std::fs::write(&path, doubled.to_canonical_json()).unwrap();

    let check = bin().args(["check"]).arg(&path).output().unwrap();
    assert_eq!(
        check.status.code(),
        Some(0),
        "doubled system is still mock tridiagonal"
    );
    let out = bin().args(["quotient"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("sharp"));
}

#[test]
fn quotient_reports_the_expected_golden_data() {
    let dir = workdir("quotient-golden");
    let degenerate = degenerate_doc(&dir);
    let out = bin().args(["quotient"]).arg(&degenerate).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("quotient dimension: 3"));
    assert!(text.contains("maximal submodule dimension: 1"));

    let irreducible = irreducible_doc(&dir);
    let out = bin().args(["quotient"]).arg(&irreducible).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("maximal submodule dimension: 0"));
    assert!(text.contains("quotient dimension: 4"));
}
