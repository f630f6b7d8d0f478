use std::path::PathBuf;

use serde_json::Value;
use tropical_rating::cli::{run_from, CheckRecord, FrontRecord, RateRecord};

fn data(name: &str) -> String {
    format!("{}/examples/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("tropical-rating").chain(args.iter().copied());
    let code = run_from(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn close(v: &tropical_rating::cli::Number, want: f64) -> bool {
    (v.value.unwrap() - want).abs() <= 1e-9 * want.abs().max(1.0)
}

#[test]
fn check_valid_file() {
    let (code, out, _) = run(&["check", &data("four_alternatives.json")]);
    assert_eq!(code, 0);
    let rec: CheckRecord = serde_json::from_str(&out).unwrap();
    assert!(rec.valid);
    let idx = rec.consistency_index.unwrap();
    assert!(close(&idx.a, 2.0) && close(&idx.b, 2.0));
}

#[test]
fn check_reports_located_violation() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_temp(&dir, "bad.json", r#"{"n": 2, "A": [[1, 3], ["1/2", 1]], "B": [[1, 1], [1, 1]]}"#);
    let (code, out, err) = run(&["check", "--input", p.to_str().unwrap()]);
    assert_eq!(code, 3);
    let rec: CheckRecord = serde_json::from_str(&out).unwrap();
    assert!(!rec.valid);
    assert_eq!((rec.violations[0].row, rec.violations[0].col), (1, 2));
    assert!(err.contains("(1, 2)"), "{err}");
}

#[test]
fn malformed_number_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_temp(&dir, "bad.json", r#"{"n": 1, "A": [["1/x"]], "B": [[1]]}"#);
    let (code, out, err) = run(&["check", p.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("A[1][1]"), "{err}");
    let (code, _, _) = run(&["front", "/nonexistent/problem.json"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["front"]);
    assert_eq!(code, 2);
}

#[test]
fn front_of_segment_instance_with_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("front.csv");
    let (code, out, _) = run(&[
        "front",
        &data("two_alternatives.json"),
        "--samples",
        "3",
        "--output",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let rec: FrontRecord = serde_json::from_str(&out).unwrap();
    assert_eq!(rec.kind, "segment");
    assert!(close(&rec.alpha_range[0], 4.0 / 3.0) && close(&rec.alpha_range[1], 3.0));
    assert!(close(&rec.endpoints[0].beta, 4.5) && close(&rec.endpoints[1].beta, 2.0));
    assert_eq!(rec.beta_bound_terms.len(), 1);

    let mut reader = csv::Reader::from_path(&csv_path).unwrap();
    assert_eq!(reader.headers().unwrap(), vec!["alpha", "beta"]);
    let rows: Vec<(f64, f64)> = reader.deserialize().map(Result::unwrap).collect();
    let want = [(4.0 / 3.0, 4.5), (2.0, 3.0), (3.0, 2.0)];
    assert_eq!(rows.len(), 3);
    for ((a, b), (wa, wb)) in rows.iter().zip(want) {
        assert!((a - wa).abs() < 1e-9 && (b - wb).abs() < 1e-9);
    }
}

#[test]
fn front_of_point_instance() {
    let (code, out, _) = run(&["front", &data("four_alternatives.json")]);
    assert_eq!(code, 0);
    let rec: FrontRecord = serde_json::from_str(&out).unwrap();
    assert_eq!(rec.kind, "point");
    assert_eq!(rec.endpoints.len(), 1);
    assert!(close(&rec.endpoints[0].alpha, 2.0) && close(&rec.endpoints[0].beta, 3.0));
}

#[test]
fn front_of_single_alternative() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_temp(&dir, "one.json", r#"{"n": 1, "A": [[1]], "B": [[1]]}"#);
    let (code, out, _) = run(&["front", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    let rec: FrontRecord = serde_json::from_str(&out).unwrap();
    assert_eq!(rec.kind, "point");
    assert!(close(&rec.endpoints[0].alpha, 1.0) && close(&rec.endpoints[0].beta, 1.0));
}

#[test]
fn rate_point_instance() {
    let (code, out, _) = run(&["rate", &data("four_alternatives.json")]);
    assert_eq!(code, 0);
    let rec: RateRecord = serde_json::from_str(&out).unwrap();
    assert_eq!(rec.solutions.len(), 1);
    let reps = &rec.solutions[0].representatives;
    assert_eq!(reps.len(), 1);
    let decimals: Vec<&str> = reps[0].rating.iter().map(|n| n.decimal.as_str()).collect();
    assert_eq!(decimals, ["1", "0.166666666667", "0.5", "0.25"]);
}

#[test]
fn rate_at_alpha() {
    let (code, out, _) = run(&["rate", &data("two_alternatives.json"), "--at-alpha", "3"]);
    assert_eq!(code, 0);
    let rec: RateRecord = serde_json::from_str(&out).unwrap();
    let x = &rec.solutions[0].representatives[0].rating;
    let ratio = x[1].value.unwrap() / x[0].value.unwrap();
    assert!((ratio - 1.5).abs() < 1e-9);

    let (code, out, err) = run(&["rate", &data("two_alternatives.json"), "--at-alpha", "10"]);
    assert_eq!(code, 5);
    assert!(out.is_empty());
    assert!(err.contains("out-of-range"), "{err}");

    let (code, _, _) = run(&["rate", &data("two_alternatives.json"), "--at-alpha", "4/3"]);
    assert_eq!(code, 0);
    let (code, _, _) = run(&["rate", &data("two_alternatives.json"), "--at-alpha", "3", "--all"]);
    assert_eq!(code, 2);
}

#[test]
fn rate_all_with_verification() {
    let (code, out, err) = run(&["rate", &data("two_alternatives.json"), "--all", "--verify"]);
    assert_eq!(code, 0, "{err}");
    let rec: RateRecord = serde_json::from_str(&out).unwrap();
    assert_eq!(rec.solutions.len(), 5);
    assert!(rec.verification.unwrap().agrees);
}

#[test]
fn infeasible_bounds_are_a_validation_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_temp(&dir, "b.json", r#"{"n": 2, "A": [[1, 2], ["1/2", 1]], "B": [[1, 2], ["1/2", 1]], "g": [2, 1], "h": [1, 1]}"#);
    let (code, _, _) = run(&["rate", p.to_str().unwrap()]);
    assert_eq!(code, 3);
    let (code, out, _) = run(&["check", p.to_str().unwrap()]);
    assert_eq!(code, 3);
    let rec: CheckRecord = serde_json::from_str(&out).unwrap();
    assert!(rec.bounds_error.is_some());
}

#[test]
fn zero_entries_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_temp(&dir, "z.json", r#"{"n": 2, "A": [[0, 2], [0, 0]], "B": [[1, 1], [1, 1]]}"#);
    let (code, _, err) = run(&["front", p.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(err.contains("validation"), "{err}");
}

#[test]
fn oversized_grid_is_a_solver_error() {
    let (code, out, err) =
        run(&["rate", &data("four_alternatives.json"), "--verify", "--grid-resolution", "100000"]);
    assert_eq!(code, 4);
    assert!(out.is_empty());
    assert!(err.contains("resource"), "{err}");
}

#[test]
fn flags_override_file_options() {
    let (code, out, _) = run(&["front", &data("two_alternatives.json"), "--samples", "7"]);
    assert_eq!(code, 0);
    let rec: FrontRecord = serde_json::from_str(&out).unwrap();
    assert_eq!(rec.samples.len(), 7);
    let (code, out, _) = run(&["front", &data("two_alternatives.json")]);
    assert_eq!(code, 0);
    let rec: FrontRecord = serde_json::from_str(&out).unwrap();
    assert_eq!(rec.samples.len(), 5);
    let (code, _, _) = run(&["rate", &data("two_alternatives.json"), "--log-base", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn rate_record_round_trip() {
    let (code, out, _) = run(&["rate", &data("two_alternatives.json"), "--all"]);
    assert_eq!(code, 0);
    let rec: RateRecord = serde_json::from_str(&out).unwrap();
    let again = serde_json::to_string_pretty(&rec).unwrap();
    let back: RateRecord = serde_json::from_str(&again).unwrap();
    assert_eq!(rec, back);
    for (a, b) in rec.solutions.iter().zip(&back.solutions) {
        assert_eq!(a.alpha.value.unwrap().to_bits(), b.alpha.value.unwrap().to_bits());
        assert_eq!(a.alpha.fraction, b.alpha.fraction);
    }
    let original: Value = serde_json::from_str(&out).unwrap();
    let reparsed: Value = serde_json::from_str(&again).unwrap();
    assert_eq!(original, reparsed);
}

#[test]
fn help_goes_to_stdout() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("rate"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_tropical-rating");
    let status = std::process::Command::new(bin)
        .args(["rate", &data("two_alternatives.json"), "--at-alpha", "10"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(5));
    let ok = std::process::Command::new(bin).args(["check", &data("four_alternatives.json")]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(ok.stderr.is_empty());
}
