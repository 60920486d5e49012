//! End-to-end tests of the `mgf` binary: exit codes, output contracts,
//! determinism, and the golden-store plumbing.

use std::process::{Command, Output};

fn mgf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mgf"))
        .args(args)
        .env_remove("MGF_GOLDEN_PATH")
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs")
}

fn stdout_str(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn eval_boundary_value_json() {
    let o = mgf(&["eval", "bn", "--u", "0,1", "--out", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&o)).unwrap();
    let log_g = v["results"]["log_g"].as_f64().unwrap();
    assert!((log_g - 2.144729885849400174).abs() < 1e-6, "{log_g}");
    assert_eq!(v["results"]["status"], "finite");
}

#[test]
fn eval_divergent_exits_3_and_never_prints_inf() {
    for out in ["table", "json", "csv"] {
        let o = mgf(&["eval", "bn", "--u", "0.5,1", "--out", out]);
        assert_eq!(o.status.code(), Some(3), "format {out}");
        let s = stdout_str(&o);
        assert!(s.contains("divergent"), "format {out}: {s}");
        assert!(!s.to_lowercase().contains("inf"), "format {out}: {s}");
    }
}

#[test]
fn eval_unknown_label_exits_2() {
    let o = mgf(&["eval", "nosuch", "--u", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn eval_dimension_mismatch_exits_2() {
    let o = mgf(&["eval", "bn", "--u", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn eval_linear_refuses_overflow() {
    // log G(0.9999, 0.9999) is in the thousands: far beyond exp() range
    let o = mgf(&["eval", "bn", "--u", "0.9999,0.9999", "--linear"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn eval_factorization_matches_log_g() {
    let o = mgf(&["eval", "bn", "--u", "0.5,0.5", "--factorization", "--out", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&o)).unwrap();
    let log_g = v["results"]["log_g"].as_f64().unwrap();
    let prod = v["results"]["factorization"]["log_product"].as_f64().unwrap();
    assert!((log_g - prod).abs() < 1e-8, "{log_g} vs {prod}");
}

#[test]
fn results_payload_is_deterministic() {
    let run = || {
        let o = mgf(&["eval", "bn", "--u", "0.3,0.8", "--out", "json"]);
        let v: serde_json::Value = serde_json::from_str(&stdout_str(&o)).unwrap();
        serde_json::to_string(&v["results"]).unwrap()
    };
    assert_eq!(run(), run());
}

#[test]
fn trace_csv_contract() {
    let o = mgf(&[
        "curve", "trace", "--curve", "vertical-ray", "--schedule", "geometric:2,8", "--out", "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout_str(&o);
    let mut lines = s.lines();
    assert_eq!(lines.next(), Some("t,log_g,status"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 7); // j = 2..=8
    for row in rows {
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(cols.len(), 3, "{row}");
        cols[0].parse::<f64>().unwrap();
        cols[1].parse::<f64>().unwrap();
        assert_eq!(cols[2], "finite");
    }
    assert!(s.ends_with('\n'));
}

#[test]
fn ray_vertical_hits_finite_boundary() {
    let o = mgf(&["ray", "bn", "--dir", "0,1", "--out", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&o)).unwrap();
    assert_eq!(v["results"]["class"], "case2-finite-boundary");
    let theta = v["results"]["theta_star"].as_f64().unwrap();
    assert!((theta - 1.0).abs() < 1e-6, "{theta}");
}

#[test]
fn scan_csv_and_worker_determinism() {
    let o = mgf(&["scan", "bn", "--n", "8", "--out", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout_str(&o);
    assert_eq!(s.lines().next(), Some("index,dir_x,dir_y,theta_star,class,log_g,status"));
    assert_eq!(s.lines().count(), 9);

    let results = |args: &[&str]| {
        let o = mgf(args);
        assert_eq!(o.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_str(&stdout_str(&o)).unwrap();
        serde_json::to_string(&v["results"]).unwrap()
    };
    let serial = results(&["scan", "bn", "--n", "8", "--out", "json"]);
    let parallel = results(&["scan", "bn", "--n", "8", "--out", "json", "--workers", "4"]);
    assert_eq!(serial, parallel);
}

#[test]
fn accumulate_item3_detects_targets() {
    let o = mgf(&[
        "curve",
        "accumulate",
        "--curve",
        "item3:targets=20,200",
        "--schedule",
        "geometric:2,18",
        "--out",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&o)).unwrap();
    let detected = v["results"]["detected"].as_array().unwrap();
    assert_eq!(detected.len(), 2);
    for d in detected {
        let target: f64 = d["level"].as_f64().unwrap();
        let got = d["limit"].as_f64().unwrap();
        assert!((got - target.ln()).abs() <= 0.05 * target.ln(), "{target}: {got}");
    }
    assert_eq!(v["results"]["saturated_at_infinity"], false);
}

#[test]
fn verify_single_criterion_and_goldens() {
    let o = mgf(&["verify", "--only", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout_str(&o));
    let s = stdout_str(&o);
    assert!(s.contains("criterion  2 [pass]"), "{s}");
    assert!(s.contains("verification passed"), "{s}");
}

#[test]
fn verify_refresh_requires_confirmation() {
    let o = mgf(&["verify", "--goldens-only", "--refresh-goldens"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn golden_path_override_detects_regression() {
    let dir = std::env::temp_dir().join("mgf-golden-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("goldens.toml");
    std::fs::write(
        &path,
        r#"version = 1

[[entry]]
density = "normal"
quantity = "log_mgf(2)"
value = "3.0"
tolerance = 1e-9
provenance = "oracle-derived"
note = "deliberately wrong value for the regression test"
"#,
    )
    .unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_mgf"))
        .args(["verify", "--goldens-only"])
        .env("MGF_GOLDEN_PATH", &path)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout_str(&o).contains("FAIL"));
}
