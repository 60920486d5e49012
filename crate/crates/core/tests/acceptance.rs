//! The acceptance gate: every criterion of the verification suite must hold.
//!
//! One pass/fail line is printed per criterion. The lines go straight to
//! the stdout handle (not through `println!`) so they are visible even
//! without `--nocapture`.

use std::io::Write;

use mgf_core::verify::run_criterion;

#[test]
fn all_acceptance_criteria_pass() {
    let mut out = std::io::stdout();
    let mut failed = Vec::new();
    for id in 1..=11 {
        let t0 = std::time::Instant::now();
        let o = run_criterion(id).expect("criterion id");
        let status = if o.passed { "pass" } else { "FAIL" };
        writeln!(
            out,
            "criterion {:>2} [{status}] ({:6.2}s) {} — {}",
            o.id,
            t0.elapsed().as_secs_f64(),
            o.title,
            o.detail
        )
        .unwrap();
        if !o.passed {
            failed.push(o.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
