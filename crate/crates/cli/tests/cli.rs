//! End-to-end tests that drive the compiled binary the way a user would:
//! real argv, real files, and assertions on exit codes and the emitted JSON.

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn simplex_lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_simplex-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&output.stdout)
        )
    })
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("not killed by a signal")
}

#[test]
fn volume_of_the_unsigned_empty_pairing_point() {
    let out = simplex_lab(&["volume", "--point", "pairing:empty:+1", "--n", "4"]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["ring"], "rational");
    assert_eq!(v["volume"], "5/9216");
    assert_eq!(v["volume_gram"], "5/9216");
    assert_eq!(v["routes_agree"], true);
}

#[test]
fn areas_of_a_cycle_point_are_all_three_sixteenths() {
    let out = simplex_lab(&["areas", "--point", "cycle:0-1-2-3-4", "--n", "4"]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["ring"], "quadratic-extension");
    let entries = v["entries"].as_array().expect("entries array");
    assert_eq!(entries.len(), 10);
    for e in entries {
        assert_eq!(e["a"], "3/16");
        assert_eq!(e["b"], "0");
    }
}

#[test]
fn catalog_table_reproduces_the_four_volume_classes() {
    let out = simplex_lab(&["catalog", "--n", "4", "--table"]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["size"], 64);
    assert_eq!(v["points"].as_array().unwrap().len(), 64);
    let classes = v["volume_classes"].as_array().expect("classes array");
    let summary: Vec<(String, u64, String)> = classes
        .iter()
        .map(|c| {
            (
                c["family"].as_str().unwrap().to_string(),
                c["points"].as_u64().unwrap(),
                c["volume"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    assert_eq!(
        summary,
        vec![
            ("pairing of size 0".to_string(), 2, "5/9216".to_string()),
            ("pairing of size 1".to_string(), 20, "-1/3072".to_string()),
            ("pairing of size 2".to_string(), 30, "-3/1024".to_string()),
            ("five-cycle".to_string(), 12, "5/1024".to_string()),
        ]
    );
}

#[test]
fn catalog_sizes_grow_with_dimension() {
    for (n, size) in [("4", 64u64), ("5", 152), ("6", 464)] {
        let out = simplex_lab(&["catalog", "--n", n]);
        assert_eq!(exit_code(&out), 0);
        assert_eq!(stdout_json(&out)["size"], size);
    }
}

#[test]
fn edge_file_input_round_trips() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("triangle.json");
    let mut file = std::fs::File::create(&path).expect("create file");
    // unit equilateral triangle: its squared volume is its squared area
    write!(
        file,
        r#"{{"n": 2, "ring": "rational", "entries": ["1", "1", "1"]}}"#
    )
    .unwrap();
    let out = simplex_lab(&["volume", "--edges", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["n"], 2);
    assert_eq!(v["volume"], "3/16");
}

#[test]
fn complex_edges_are_accepted() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("segment.json");
    std::fs::write(
        &path,
        r#"{"n": 1, "ring": "complex", "entries": [[4.0, 0.0]]}"#,
    )
    .unwrap();
    let out = simplex_lab(&["volume", "--edges", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["volume"][0], 4.0);
    assert_eq!(v["volume"][1], 0.0);
}

#[test]
fn jacobian_at_a_catalog_point_has_full_rank() {
    let out = simplex_lab(&["jacobian", "--point", "pairing:0-1:-1", "--n", "4"]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["rows"], 10);
    assert_eq!(v["cols"], 10);
    assert_eq!(v["rank"], 10);
    assert_eq!(v["full_column_rank"], true);
    assert!(v.get("matrix").is_none());

    let out = simplex_lab(&[
        "jacobian",
        "--point",
        "pairing:0-1:-1",
        "--n",
        "4",
        "--matrix",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["matrix"].as_array().unwrap().len(), 10);
}

#[test]
fn sampled_image_sweep_passes() {
    let out = simplex_lab(&["images", "--n", "5", "--sample", "10", "--seed", "1"]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["points"], 152);
    assert_eq!(v["mismatches"], 0);
    assert_eq!(v["rank_failures"], 0);
    assert_eq!(v["exhaustive"], false);
    assert_eq!(v["passed"], true);
}

#[test]
fn image_sweep_needs_at_least_dimension_five() {
    let out = simplex_lab(&["images", "--n", "4"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("error:"));
}

#[test]
fn curve_claims_hold_and_the_volume_expansion_is_reported() {
    let out = simplex_lab(&["curve", "--family", "dim4:1,1,1"]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["family"], "dim4:1,1,1");
    assert_eq!(v["n"], 4);
    assert_eq!(v["all_claims_hold"], true);
    assert_eq!(v["volume"]["4"], "-1/36");
    assert_eq!(v["volume"]["0"], "1/9");
    assert_eq!(v["volume"]["-20"], "-1/1152");

    let out = simplex_lab(&["curve", "--family", "odd:3", "--expansions"]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["n"], 5);
    assert_eq!(v["all_claims_hold"], true);
    assert_eq!(v["volume"]["1"], "1/230400");
    assert!(v["edges"]["entries"].as_array().unwrap().len() == 15);
}

#[test]
fn default_witnesses_certify_each_family() {
    for family in ["dim4:1,1,1", "dim5:2,1,3", "odd:3"] {
        let out = simplex_lab(&["witness", "--family", family]);
        assert_eq!(exit_code(&out), 0, "family {family}");
        let v = stdout_json(&out);
        assert_eq!(v["certificate_holds"], true, "family {family}");
        assert_eq!(v["areas_bounded"], true, "family {family}");
    }
}

#[test]
fn an_unsuitable_witness_fails_the_certificate_with_exit_one() {
    // on this curve the chosen product stays bounded away from zero, so the
    // degree inequality cannot hold and the run must report failure
    let out = simplex_lab(&[
        "witness",
        "--family",
        "dim4:1,1,1",
        "--witness",
        "area-product:0-1-2-3-4",
    ]);
    assert_eq!(exit_code(&out), 1);
    let v = stdout_json(&out);
    assert_eq!(v["certificate_holds"], false);
    assert_eq!(v["volume_degree"], 4);
    assert_eq!(v["product_degree"], 4);
}

#[test]
fn fiber_tracking_to_a_seeded_random_target() {
    let out = simplex_lab(&["fiber", "--seed-target", "11", "--seed", "2"]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["paths"], 64);
    assert_eq!(v["path_failures"], 0);
    assert_eq!(v["all_paths_converged"], true);
    assert!(v["class_count"].as_u64().unwrap() <= 32);
    assert!(v["real_positive_classes"].as_u64().unwrap() >= 1);
    assert!(v["max_residual"].as_f64().unwrap() < 1e-8);
}

#[test]
fn fiber_tracking_to_the_equiareal_target_recovers_the_catalog() {
    let dir = tempfile::tempdir().expect("temp dir");
    let target = dir.path().join("target.json");
    let out = simplex_lab(&[
        "areas",
        "--point",
        "pairing:0-1:+1",
        "--n",
        "4",
        "--out",
        target.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(out.stdout.is_empty());

    let out = simplex_lab(&["fiber", "--target", target.to_str().unwrap(), "--endpoints"]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["path_failures"], 0);
    assert_eq!(v["distinct_endpoints"], 64);
    assert_eq!(v["class_count"], 32);
    assert_eq!(v["real_positive_classes"], 26);
    assert_eq!(v["endpoints"].as_array().unwrap().len(), 64);
}

#[test]
fn laurent_vectors_are_rejected_as_tracking_targets() {
    let dir = tempfile::tempdir().expect("temp dir");
    let target = dir.path().join("curve.json");
    std::fs::write(&target, r#"{"n": 4, "ring": "laurent", "entries": []}"#).unwrap();
    let out = simplex_lab(&["fiber", "--target", target.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a numeric target"));
}

#[test]
fn probe_finds_only_the_reference_and_its_negation() {
    let out = simplex_lab(&[
        "probe",
        "--n",
        "5",
        "--seed-reference",
        "7",
        "--starts",
        "6",
        "--seed",
        "1",
    ]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["starts"], 6);
    assert_eq!(v["converged"], 6);
    assert_eq!(v["anomalies"], 0);
    assert_eq!(v["passed"], true);
}

#[test]
fn all_checks_passes_and_prints_one_line_per_check() {
    let out = simplex_lab(&[
        "all-checks",
        "--oracle-cases",
        "4",
        "--image-sample",
        "12",
        "--targets",
        "2",
        "--probe-starts",
        "6",
    ]);
    assert_eq!(exit_code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["passed"], true);
    let checks = v["checks"].as_array().expect("checks array");
    assert_eq!(checks.len(), 21);
    let stderr = String::from_utf8_lossy(&out.stderr);
    let pass_lines = stderr.lines().filter(|l| l.starts_with("pass")).count();
    assert_eq!(pass_lines, 21);
}

#[test]
fn out_file_receives_the_json_instead_of_stdout() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("catalog.json");
    let out = simplex_lab(&["catalog", "--n", "5", "--out", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["size"], 152);
}

#[test]
fn usage_problems_exit_with_code_two() {
    // unparsable point label
    let out = simplex_lab(&["volume", "--point", "bogus:spec", "--n", "4"]);
    assert_eq!(exit_code(&out), 2);
    // no input source at all
    let out = simplex_lab(&["volume"]);
    assert_eq!(exit_code(&out), 2);
    // missing edge file
    let out = simplex_lab(&["volume", "--edges", "/nonexistent/edges.json"]);
    assert_eq!(exit_code(&out), 2);
    // clap-level error: unknown subcommand
    let out = simplex_lab(&["frobnicate"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn thread_cap_env_variable_is_validated() {
    let out = Command::new(env!("CARGO_BIN_EXE_simplex-lab"))
        .args(["catalog", "--n", "4"])
        .env("SIMPLEX_LAB_THREADS", "1")
        .output()
        .expect("binary runs");
    assert_eq!(exit_code(&out), 0);

    let out = Command::new(env!("CARGO_BIN_EXE_simplex-lab"))
        .args(["catalog", "--n", "4"])
        .env("SIMPLEX_LAB_THREADS", "zero")
        .output()
        .expect("binary runs");
    assert_eq!(exit_code(&out), 2);
}
