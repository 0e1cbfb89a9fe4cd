use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charlier-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn csv_rows(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r
        .records()
        .map(|rec| rec.unwrap().iter().map(String::from).collect())
        .collect();
    (header, rows)
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn eval_at_zero_angle_is_i_minus_one() {
    let out = lab(&[
        "eval", "--theta", "0", "--alpha", "1", "--beta", "1", "--deg", "1,0", "--pt", "5,3", "--format", "json",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let doc = json(&out);
    assert_eq!(doc["schema"], "charlier-lab/1");
    assert_eq!(doc["command"], "eval");
    assert!((doc["result"]["value"].as_f64().unwrap() - 4.0).abs() < 1e-14);
    assert_eq!(doc["result"]["discrepancy"].as_f64().unwrap(), 0.0);
}

#[test]
fn schema_comes_first() {
    let out = lab(&["eval", "--deg", "0,0", "--pt", "1,1", "--format", "json"]);
    assert!(stdout(&out)
        .trim_start()
        .starts_with("{\n  \"schema\": \"charlier-lab/1\""));
}

#[test]
fn ground_state_is_one_for_every_algorithm() {
    for alg in ["raising", "genfun", "hyper", "decomp"] {
        for params in [
            ["--theta", "0.4", "--alpha", "0.7", "--beta", "-1.3"],
            ["--theta", "2.1", "--alpha", "1.5", "--beta", "0.2"],
        ] {
            let mut args = vec![
                "eval",
                "--deg",
                "0,0",
                "--pt",
                "4,7",
                "--algorithm",
                alg,
                "--format",
                "json",
            ];
            args.extend(params);
            let out = lab(&args);
            assert_eq!(code(&out), 0, "{alg}: {}", stderr(&out));
            assert!((json(&out)["result"]["value"].as_f64().unwrap() - 1.0).abs() < 1e-14);
        }
    }
}

#[test]
fn decomposition_refuses_on_the_axes() {
    let out = lab(&[
        "eval",
        "--algorithm",
        "decomposition",
        "--theta",
        "0",
        "--deg",
        "1,1",
        "--pt",
        "2,2",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("decomposition undefined at sinθcosθ=0"));
}

#[test]
fn hypergeometric_names_the_vanishing_denominator() {
    let out = lab(&[
        "eval",
        "--theta-pi-frac",
        "1/4",
        "--algorithm",
        "hyper",
        "--deg",
        "2,1",
        "--pt",
        "3,2",
    ]);
    assert_eq!(code(&out), 2);
    let err = stderr(&out);
    assert!(err.contains("vanishes") && err.contains("raising"), "{err}");
}

#[test]
fn extended_precision_closes_the_gap() {
    let args = [
        "eval",
        "--theta",
        "1.1",
        "--alpha",
        "0.8",
        "--beta",
        "1.7",
        "--deg",
        "4,2",
        "--pt",
        "9,7",
        "--algorithm",
        "hyper",
        "--format",
        "json",
    ];
    let ext = lab(&[&args[..], &["--precision", "extended"]].concat());
    assert_eq!(code(&ext), 0, "{}", stderr(&ext));
    let r = &json(&ext)["result"];
    assert!(r["discrepancy"].as_f64().unwrap() < 1e-25);
    assert!(r["error_estimate"].as_f64().unwrap() < 1e-25);
}

#[test]
fn d_variate_eval_matches_between_algorithms() {
    let out = lab(&[
        "eval",
        "--alphas",
        "0.8,1.1,0.6",
        "--deg",
        "1,2,1",
        "--pt",
        "3,0,2",
        "--algorithm",
        "genfun",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(json(&out)["result"]["discrepancy"].as_f64().unwrap() < 1e-13);

    let out = lab(&["eval", "--alphas", "0.8,1.1,0.6", "--deg", "1,2", "--pt", "3,0,2"]);
    assert_eq!(code(&out), 2);
    let out = lab(&[
        "eval",
        "--alphas",
        "0.8,1.1",
        "--deg",
        "1,2",
        "--pt",
        "3,0",
        "--algorithm",
        "hyper",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn rotation_is_read_from_json() {
    let path = tmp("rotation.json");
    let (c, s) = (0.6f64, 0.8f64);
    std::fs::write(&path, format!("[[{c}, {s}, 0], [{}, {c}, 0], [0, 0, 1]]", -s)).unwrap();
    let path_str = path.to_str().unwrap();
    let out = lab(&[
        "eval",
        "--R",
        path_str,
        "--alphas",
        "1,2,0.5",
        "--deg",
        "2,1,1",
        "--pt",
        "1,3,2",
        "--algorithm",
        "genfun",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let doc = json(&out);
    assert_eq!(doc["params"]["R"][1][0].as_f64().unwrap(), -0.8);
    assert!(doc["result"]["discrepancy"].as_f64().unwrap() < 1e-13);

    std::fs::write(&path, "[[1, 1], [0, 1]]").unwrap();
    let out = lab(&[
        "eval", "--R", path_str, "--alphas", "1,2", "--deg", "1,0", "--pt", "0,0",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("not orthogonal"));

    let out = lab(&[
        "eval",
        "--R",
        "/definitely/missing.json",
        "--alphas",
        "1,2",
        "--deg",
        "1,0",
        "--pt",
        "0,0",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("/definitely/missing.json"));
}

#[test]
fn table_has_one_row_per_lattice_cell_in_order() {
    let out = lab(&[
        "table",
        "--theta",
        "1.1",
        "--alpha",
        "0.8",
        "--beta",
        "1.7",
        "--degmax",
        "2",
        "--ptmax",
        "2",
        "--algorithm",
        "hyper",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let (header, rows) = csv_rows(&stdout(&out));
    assert_eq!(
        header,
        ["m", "n", "i", "k", "value", "algorithm", "discrepancy_vs_reference"]
    );
    assert_eq!(rows.len(), 81);
    let keys: Vec<Vec<usize>> = rows
        .iter()
        .map(|r| r[..4].iter().map(|c| c.parse().unwrap()).collect())
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    for r in &rows {
        assert_eq!(r[5], "hypergeometric");
        assert!(r[6].parse::<f64>().unwrap() < 1e-10, "{r:?}");
        // 17 significant digits
        let mantissa = r[4].trim_start_matches('-').split('e').next().unwrap();
        assert_eq!(mantissa.len(), 18, "{}", r[4]);
    }
}

#[test]
fn table_output_is_byte_identical_across_runs() {
    let (a, b) = (tmp("table-a.csv"), tmp("table-b.csv"));
    for path in [&a, &b] {
        let out = lab(&[
            "table",
            "--theta",
            "0.5",
            "--alpha",
            "0.9",
            "--beta",
            "1.2",
            "--algorithm",
            "genfun",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0, "{}", stderr(&out));
        assert!(out.stdout.is_empty());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    let out = lab(&["table", "--out", "/definitely/missing/dir/t.csv"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("/definitely/missing/dir/t.csv"));
}

#[test]
fn table_in_three_variables() {
    let out = lab(&[
        "table",
        "--alphas",
        "0.8,1.1,0.6",
        "--degmax",
        "1",
        "--ptmax",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let rows = json(&out)["result"]["rows"].as_array().unwrap().clone();
    assert_eq!(rows.len(), 64);
    assert_eq!(rows[0]["deg"], serde_json::json!([0, 0, 0]));
    assert_eq!(rows[1]["pt"], serde_json::json!([0, 0, 1]));
}

#[test]
fn default_verify_suite_passes() {
    let out = lab(&[
        "verify",
        "--theta-pi-frac",
        "1/6",
        "--alpha",
        "1",
        "--beta",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0, "{}{}", stdout(&out), stderr(&out));
    let doc = json(&out);
    assert_eq!(doc["result"]["pass"], true);
    let suites: Vec<&str> = doc["result"]["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["suite"].as_str().unwrap())
        .collect();
    assert_eq!(
        suites,
        [
            "orthogonality",
            "recurrence",
            "difference",
            "lowering",
            "duality",
            "integral",
            "cross"
        ]
    );
}

#[test]
fn under_truncated_orthogonality_fails_with_tail_diagnostic() {
    let out = lab(&[
        "verify",
        "--theta-pi-frac",
        "1/6",
        "--suite",
        "orthogonality",
        "--cutoff",
        "5",
    ]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("[FAIL] orthogonality"));
    assert!(text.contains("tail bound"), "{text}");
    assert!(
        stderr(&out).contains("worst") || stderr(&out).contains(" at "),
        "{}",
        stderr(&out)
    );
}

#[test]
fn duality_on_degenerate_parameters_exits_two() {
    let theta = 2.0f64.atan2(3.0).to_string();
    let out = lab(&[
        "verify", "--theta", &theta, "--alpha", "2", "--beta", "3", "--suite", "duality",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("degenerate dual parameters"));
}

#[test]
fn tight_tolerance_is_reported_as_failure() {
    let out = lab(&[
        "verify",
        "--theta",
        "0.3",
        "--suite",
        "orthogonality",
        "--degmax",
        "2",
        "--tol",
        "1e-40",
        "--format",
        "csv",
    ]);
    assert_eq!(code(&out), 1);
    let (header, rows) = csv_rows(&stdout(&out));
    assert_eq!(header[0], "suite");
    assert_eq!(rows[0][2], "false");

    let out = lab(&["verify", "--tol", "-1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn d_variate_orthogonality() {
    let out = lab(&["verify", "--alphas", "0.8,1.1,0.6", "--degmax", "2", "--cutoff", "30"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let out = lab(&["verify", "--alphas", "0.8,1.1,0.6", "--suite", "duality"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn limit_converges_and_names_the_convention() {
    let out = lab(&[
        "limit",
        "--theta-pi-frac",
        "1/6",
        "--deg",
        "1,1",
        "--pt",
        "2,1",
        "--Ns",
        "16,64,256,1024",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let r = &json(&out)["result"];
    assert_eq!(r["converged"], "charlier");
    let errors: Vec<f64> = r["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| row["error"].as_f64().unwrap())
        .collect();
    assert_eq!(errors.len(), 4);
    assert!(errors.windows(2).all(|w| w[1] < w[0]), "{errors:?}");
    assert!(errors[3] < 0.05);
}

#[test]
fn limit_of_the_ground_state_is_exact() {
    let out = lab(&[
        "limit", "--deg", "0,0", "--pt", "3,2", "--theta", "0.7", "--format", "csv",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let (header, rows) = csv_rows(&stdout(&out));
    assert_eq!(header, ["N", "krawtchouk", "error_charlier", "error_flipped_y"]);
    for r in rows {
        assert_eq!(r[2].parse::<f64>().unwrap(), 0.0);
    }
}

#[test]
fn limit_reports_simplex_errors() {
    let out = lab(&["limit", "--deg", "3,3", "--pt", "4,4", "--Ns", "4,16"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("simplex"), "{}", stderr(&out));
}

#[test]
fn bench_times_all_four_evaluators() {
    let out = lab(&[
        "bench",
        "--theta-pi-frac",
        "1/6",
        "--alpha",
        "0.7",
        "--beta",
        "1.3",
        "--degmax",
        "6",
        "--ptmax",
        "4",
        "--repetitions",
        "3",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let (header, rows) = csv_rows(&stdout(&out));
    assert!(header.contains(&"repetitions".to_string()) && header.contains(&"warmup".to_string()));
    assert_eq!(rows.len(), 4);
    let col = |name: &str| header.iter().position(|h| h == name).unwrap();
    for r in &rows {
        assert_eq!(r[col("status")], "ok");
        assert_eq!(r[col("repetitions")], "3");
        assert!(r[col("max_discrepancy")].parse::<f64>().unwrap() < 1e-10, "{r:?}");
        assert!(r[col("total_seconds")].parse::<f64>().unwrap() > 0.0);
    }
}

#[test]
fn bench_on_a_single_cell() {
    let out = lab(&["bench", "--degmax", "0", "--ptmax", "0", "--theta", "0.3"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let (_, rows) = csv_rows(&stdout(&out));
    assert_eq!(rows.len(), 4);
    for r in rows {
        assert_eq!(r[2], "1");
        assert!(r[6].parse::<f64>().unwrap() > 0.0);
    }
}

#[test]
fn bench_skips_evaluators_that_refuse() {
    let out = lab(&[
        "bench",
        "--theta-pi-frac",
        "1/4",
        "--degmax",
        "2",
        "--ptmax",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let rows = json(&out)["result"]["rows"].as_array().unwrap().clone();
    let skipped: Vec<&str> = rows
        .iter()
        .filter(|r| r["status"].as_str().unwrap().starts_with("skipped"))
        .map(|r| r["algorithm"].as_str().unwrap())
        .collect();
    assert_eq!(skipped, ["hypergeometric", "decomposition"]);
}

#[test]
fn invalid_parameters_exit_two() {
    assert_eq!(code(&lab(&["eval", "--alpha", "0", "--deg", "1,0", "--pt", "0,0"])), 2);
    assert_eq!(code(&lab(&["eval", "--deg", "1", "--pt", "0,0"])), 2);
    assert_eq!(
        code(&lab(&["eval", "--theta-pi-frac", "1/0", "--deg", "1,0", "--pt", "0,0"])),
        2
    );
    assert_eq!(
        code(&lab(&[
            "eval", "--theta", "1", "--alphas", "1,2", "--deg", "1,0", "--pt", "0,0"
        ])),
        2
    );
}
