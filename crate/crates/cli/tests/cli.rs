//! End-to-end checks of the `qcc` binary: output shapes, exit codes,
//! cache behavior, and report determinism.

use std::path::Path;
use std::process::{Command, Output};

fn qcc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcc"))
        .args(args)
        .env_remove("QCC_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn qnc_k5_row() {
    let out = qcc(&["qnc", "--n", "5", "--c", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("Q(5,5) = 5"), "{text}");
    assert!(text.contains("D~{"), "{text}");
}

#[test]
fn ramsey_33_text() {
    let out = qcc(&["ramsey", "--s", "3", "--t", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("= 6 exact"), "{text}");
}

#[test]
fn omega_brute_c5() {
    let out = qcc(&["omega", "--n", "5", "--k", "2", "--brute"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("omega(5,2) = 2 exact"), "{text}");
    // The witness is the canonical 5-cycle.
    assert!(text.contains("witness DqK"), "{text}");
}

#[test]
fn json_output_parses() {
    let out = qcc(&["--format", "json", "qnc", "--n", "6", "--c", "4"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["value"]["lo"], 3);
    assert_eq!(v["method"], "brute_force");
    let g6 = v["witness_g6"].as_str().unwrap();
    let g = qcc_core::Graph::from_graph6(g6).unwrap();
    assert_eq!(g.chromatic_number(), 4);
    assert_eq!(g.clique_number(), 3);
}

#[test]
fn formula_and_brute_agree_via_cli() {
    let brute = qcc(&["--format", "json", "qnc", "--n", "7", "--c", "5", "--method", "brute"]);
    let formula = qcc(&["--format", "json", "qnc", "--n", "7", "--c", "5", "--method", "formula"]);
    let vb: serde_json::Value = serde_json::from_str(&stdout(&brute)).unwrap();
    let vf: serde_json::Value = serde_json::from_str(&stdout(&formula)).unwrap();
    assert_eq!(vb["value"]["lo"], 4);
    assert_eq!(vf["value"]["lo"], 4);
    assert_eq!(vf["value"]["hi"], 4);
}

#[test]
fn usage_errors_exit_two() {
    // Unparseable flags (clap).
    assert_eq!(qcc(&["qnc", "--n", "five", "--c", "1"]).status.code(), Some(2));
    // c > n.
    assert_eq!(qcc(&["qnc", "--n", "5", "--c", "9"]).status.code(), Some(2));
    // Decimal rate rejected with the exact-fraction explanation.
    let out = qcc(&["construct", "--r", "0.4", "--n", "10", "--kind", "simple"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("exact fraction"), "{err}");
    // Formula outside its domain.
    assert_eq!(
        qcc(&["qnc", "--n", "6", "--c", "4", "--method", "formula"]).status.code(),
        Some(2)
    );
    // Split construction at a reciprocal rate.
    assert_eq!(
        qcc(&["construct", "--r", "1/3", "--n", "30", "--kind", "join"]).status.code(),
        Some(2)
    );
}

#[test]
fn construct_join_writes_g6(/* r = 3/10, n = 20 */) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("witness.g6");
    let out = qcc(&[
        "construct", "--r", "3/10", "--n", "20", "--kind", "join",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let g6 = std::fs::read_to_string(&path).unwrap();
    let g = qcc_core::Graph::from_graph6(g6.trim()).unwrap();
    assert_eq!(g.n(), 20);
    assert_eq!(g.chromatic_number(), 6);
    assert!(g.clique_number() <= 5);
}

#[test]
fn cache_round_trip_through_processes() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let first = qcc(&["--cache-dir", cache, "omega", "--n", "6", "--k", "2", "--brute"]);
    assert!(first.status.success());
    assert!(Path::new(cache).join("omega_nk.jsonl").exists());
    // Second run hits the cache and reports the same value and witness.
    let second = qcc(&["--cache-dir", cache, "omega", "--n", "6", "--k", "2", "--brute"]);
    assert_eq!(stdout(&first), stdout(&second));
    // Corrupt the trailing line: the run still succeeds by recomputing.
    let file = Path::new(cache).join("omega_nk.jsonl");
    let mut text = std::fs::read_to_string(&file).unwrap();
    text.push_str("{\"torn");
    std::fs::write(&file, text).unwrap();
    let third = qcc(&["--cache-dir", cache, "omega", "--n", "6", "--k", "2", "--brute"]);
    assert!(third.status.success());
    assert_eq!(stdout(&first), stdout(&third));
}

#[test]
fn verify_is_thread_count_invariant() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("t1.csv");
    let p8 = dir.path().join("t8.csv");
    let a = qcc(&[
        "--threads", "1", "verify", "--r", "1/2,2/5", "--n-max", "6",
        "--out", p1.to_str().unwrap(),
    ]);
    let b = qcc(&[
        "--threads", "8", "verify", "--r", "1/2,2/5", "--n-max", "6",
        "--out", p8.to_str().unwrap(),
    ]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(
        std::fs::read(&p1).unwrap(),
        std::fs::read(&p8).unwrap(),
        "reports differ across thread counts"
    );
    // JSON flavor as well.
    let j1 = dir.path().join("t1.json");
    let j8 = dir.path().join("t8.json");
    qcc(&["--threads", "1", "--format", "json", "verify", "--r", "2/5", "--n-max", "5", "--out", j1.to_str().unwrap()]);
    qcc(&["--threads", "8", "--format", "json", "verify", "--r", "2/5", "--n-max", "5", "--out", j8.to_str().unwrap()]);
    assert_eq!(std::fs::read(&j1).unwrap(), std::fs::read(&j8).unwrap());
}

#[test]
fn g6_format_prints_bare_witness() {
    let out = qcc(&["--format", "g6", "qnc", "--n", "4", "--c", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "C~"); // K4
}

#[test]
fn qnc_table_mode() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("table.csv");
    let out = qcc(&["qnc", "--n", "5", "--all", "--out", csv_path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&csv_path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,c,Q,witness_g6,method"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 5);
    let q: Vec<&str> = rows.iter().map(|r| r[2]).collect();
    assert_eq!(q, ["1", "2", "2", "4", "5"]);
    // Each witness decodes and certifies its row.
    for row in &rows {
        let g = qcc_core::Graph::from_graph6(row[3]).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.chromatic_number().to_string(), row[1]);
        assert_eq!(g.clique_number().to_string(), row[2]);
    }
    // Witness-list flavor: one graph6 string per line.
    let list = qcc(&["--format", "g6", "qnc", "--n", "5", "--all"]);
    let text = stdout(&list);
    assert_eq!(text.trim().lines().count(), 5);
    for line in text.trim().lines() {
        qcc_core::Graph::from_graph6(line).unwrap();
    }
    // --c and --all are mutually exclusive.
    assert_eq!(
        qcc(&["qnc", "--n", "5", "--c", "3", "--all"]).status.code(),
        Some(2)
    );
}
