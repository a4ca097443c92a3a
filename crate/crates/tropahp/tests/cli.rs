use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn tropahp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tropahp"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn solve_vacation_as_text() {
    let o = tropahp(&[
        "solve",
        fixture("vacation.json").to_str().unwrap(),
        "--format",
        "text",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("C ⪰ S ≻ D ⪰ Q"), "{text}");
    assert!(!text.contains("baseline"));
}

#[test]
fn school_baseline_section() {
    let o = tropahp(&[
        "solve",
        fixture("school.json").to_str().unwrap(),
        "--baseline",
        "--format",
        "text",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let baseline = text.split("baseline").nth(1).expect("baseline section");
    assert!(baseline.contains("B ≻ A ≻ C"), "{text}");
}

#[test]
fn solve_writes_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = tropahp(&[
        "solve",
        fixture("vacation.json").to_str().unwrap(),
        "--mode",
        "least",
        "--tie-tol",
        "1e-6",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(report["options"]["mode"], "least");
    assert_eq!(report["options"]["tie_tol"], 1e-6);
    assert!(report["most"].is_null());
    // μ/4λ with μ = 2·5^(5/8)·7^(1/2) and λ = 5^(3/4)
    let delta = 2.0 * 5f64.powf(0.625) * 7f64.sqrt() / (4.0 * 5f64.powf(0.75));
    let got = report["least"]["delta_min"].as_f64().unwrap();
    assert!((got - delta).abs() < 1e-11 * delta, "{got}");
}

#[test]
fn spectral_radius_of_criteria_matrix() {
    let o = tropahp(&["spectral", fixture("vacation_criteria.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3.34370152488\n");
}

#[test]
fn kleene_star_of_a_star_is_itself() {
    let o = tropahp(&["kleene", fixture("ex1.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("λ = 1"), "{text}");
    assert!(text.contains("1.33333333333"), "{text}");
}

#[test]
fn geometry_of_matrix_and_problem() {
    let o = tropahp(&["geometry", fixture("ex2.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let g: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(g["delta_min"], 1.0);
    assert_eq!(g["delta_max"], 2.0);
    assert_eq!(g["most"]["segments"].as_array().unwrap().len(), 4);

    let o = tropahp(&["geometry", fixture("school.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let g: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(g["name"], "school");

    let o = tropahp(&["geometry", fixture("vacation.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn validation_errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    let text = std::fs::read_to_string(fixture("school.json")).unwrap().replacen(
        "[1, \"1/3\", \"1/2\"]",
        "[1, 2, \"1/2\"]",
        1,
    );
    std::fs::write(&path, text).unwrap();
    let o = tropahp(&["solve", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("reciprocal"), "{err}");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(tropahp(&[]).status.code(), Some(2));
    assert_eq!(tropahp(&["solve"]).status.code(), Some(2));
    assert_eq!(
        tropahp(&["solve", "x.json", "--mode", "some"]).status.code(),
        Some(2)
    );
    assert_eq!(tropahp(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(tropahp(&["--help"]).status.code(), Some(0));
}
