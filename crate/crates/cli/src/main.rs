//! `mgf` — command-line front end to the MGF boundary-singularity laboratory.
//!
//! Grammar: `mgf <eval|ray|scan|curve|verify> [flags]`. All MGF values are
//! printed in log scale; infinity is rendered as the token `divergent` in
//! every format. Exit codes: 0 success, 2 usage error, 3 divergent result,
//! 4 verification failure.

mod golden;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use mgf_core::curve::{
    self, geometric_schedule, parse_curve_spec, phase_ks, schedule_item3, trace, trace_limit,
    Curve, ParsedCurve,
};
use mgf_core::logval::LogValue;
use mgf_core::measures::{bn_factorization, mgf_quadrature, resolve_density, Method};
use mgf_core::quad::{ExtrapolateConfig, QuadConfig};
use mgf_core::ray::{domain_scan, domain_scan_parallel, ray_classify, RayClass, RayConfig};
use mgf_core::verify;
use serde_json::{json, Value};

use report::{emit, logval_cell, logval_json, status, OutFormat, Report};

/// Natural log of the largest finite f64; `--linear` refuses anything above.
const LINEAR_OVERFLOW_CAP: f64 = 709.782712893384;

#[derive(Parser)]
#[command(
    name = "mgf",
    version,
    about = "Numerical laboratory for MGF boundary singularities",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate log G(u) for a registered density
    Eval(EvalArgs),
    /// Locate the finiteness threshold along a ray and classify the boundary
    Ray(RayArgs),
    /// Classify every direction of a scan of the domain
    Scan(ScanArgs),
    /// Trace curves approaching the boundary and detect accumulation points
    Curve(CurveCmd),
    /// Run the verification suite and compare against the golden store
    Verify(VerifyArgs),
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Output format
    #[arg(long, value_enum, default_value = "table")]
    out: OutFormat,
    /// Relative quadrature tolerance (default: engine default)
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct EvalArgs {
    /// Density label (bn, laplace, damped-cauchy, normal, bn⊗bn, product:…)
    label: Option<String>,
    /// Density label (flag form, same as the positional)
    #[arg(long, conflicts_with = "label")]
    density: Option<String>,
    /// Evaluation point, comma-separated: --u 0,1
    #[arg(long, allow_hyphen_values = true)]
    u: String,
    /// Force the evaluation route (default: closed form when available)
    #[arg(long, value_parser = ["auto", "closed", "quadrature"], default_value = "auto")]
    method: String,
    /// Also print the strip factorization G = I1·I2·I3 (bn only)
    #[arg(long)]
    factorization: bool,
    /// Also print the linear-scale value; refuses values above the overflow cap
    #[arg(long)]
    linear: bool,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args)]
struct RayArgs {
    /// Density label
    label: Option<String>,
    #[arg(long, conflicts_with = "label")]
    density: Option<String>,
    /// Ray direction, comma-separated: --dir 0,1
    #[arg(long, allow_hyphen_values = true)]
    dir: String,
    /// Probe by quadrature only, ignoring closed forms
    #[arg(long)]
    force_quadrature: bool,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args)]
struct ScanArgs {
    /// Density label
    label: Option<String>,
    #[arg(long, conflicts_with = "label")]
    density: Option<String>,
    /// Number of scan directions (2-D densities)
    #[arg(long, default_value_t = 16)]
    n: usize,
    /// Worker threads; >1 parallelizes with deterministic merge order
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Probe by quadrature only, ignoring closed forms
    #[arg(long)]
    force_quadrature: bool,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args)]
struct CurveCmd {
    #[command(subcommand)]
    action: CurveAction,
}

#[derive(Subcommand)]
enum CurveAction {
    /// Evaluate log G along a curve over a schedule t_j ↑ 1
    Trace(CurveArgs),
    /// Detect the accumulation points of G along a curve
    Accumulate(CurveArgs),
}

#[derive(Args)]
struct CurveArgs {
    /// Curve spec: paper-item1, endpoint-item1[:beta=B], item2:p=P,
    /// item3:targets=a,b,…, vertical-ray, constant:u=a,b, bn4d:base=<spec>
    #[arg(long)]
    curve: String,
    /// Schedule: geometric:j0,j1 gives t_j = 1 − 2^{−j} (phase indices for
    /// accumulation subsequences)
    #[arg(long, default_value = "geometric:2,20")]
    schedule: String,
    /// Evaluation route for each point
    #[arg(long, value_parser = ["closed", "quadrature"], default_value = "closed")]
    evaluator: String,
    /// Levels to chase when accumulating along a plain (non-item3) curve
    #[arg(long, allow_hyphen_values = true)]
    levels: Option<String>,
    /// Worker threads for multi-subsequence accumulation
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run only these criteria, comma-separated ids (default: all)
    #[arg(long)]
    only: Option<String>,
    /// Skip the acceptance criteria and check only the golden store
    #[arg(long)]
    goldens_only: bool,
    /// Recompute oracle-derived golden values and rewrite the store
    #[arg(long)]
    refresh_goldens: bool,
    /// Required confirmation for --refresh-goldens
    #[arg(long)]
    i_understand: bool,
    #[command(flatten)]
    common: CommonOpts,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Ray(a) => cmd_ray(a),
        Command::Scan(a) => cmd_scan(a),
        Command::Curve(c) => match c.action {
            CurveAction::Trace(a) => cmd_curve_trace(a),
            CurveAction::Accumulate(a) => cmd_curve_accumulate(a),
        },
        Command::Verify(a) => cmd_verify(a),
    };
    match r {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

// ---------------------------------------------------------------------------
// shared plumbing
// ---------------------------------------------------------------------------

fn density_label(positional: Option<String>, flag: Option<String>) -> Result<String, String> {
    positional
        .or(flag)
        .ok_or_else(|| "missing density label (positional or --density)".into())
}

fn parse_f64_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|p| {
            let p = p.trim();
            if p.eq_ignore_ascii_case("inf") || p.eq_ignore_ascii_case("infinity") {
                Ok(f64::INFINITY)
            } else {
                p.parse::<f64>().map_err(|e| format!("bad number {p:?}: {e}"))
            }
        })
        .collect()
}

fn parse_schedule(s: &str) -> Result<(u32, u32), String> {
    let rest = s
        .strip_prefix("geometric:")
        .ok_or_else(|| format!("unsupported schedule {s:?}, expected geometric:j0,j1"))?;
    let parts: Vec<&str> = rest.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("schedule {s:?} needs exactly two indices"));
    }
    let j0: u32 = parts[0].trim().parse().map_err(|e| format!("bad j0: {e}"))?;
    let j1: u32 = parts[1].trim().parse().map_err(|e| format!("bad j1: {e}"))?;
    if j1 < j0 {
        return Err(format!("schedule {s:?} has j1 < j0"));
    }
    Ok((j0, j1))
}

fn quad_config(tol: Option<f64>) -> Result<QuadConfig, String> {
    let mut cfg = QuadConfig::default();
    if let Some(t) = tol {
        if !(t > 0.0 && t < 1.0) {
            return Err(format!("--tol must be in (0,1), got {t}"));
        }
        cfg.rel_tol = t;
    }
    Ok(cfg)
}

fn fingerprint(cfg: &QuadConfig) -> String {
    format!("quad(rel_tol={:e},windows={},panels={})", cfg.rel_tol, cfg.max_windows, cfg.initial_panels)
}

fn parse_method(s: &str) -> Method {
    if s == "quadrature" { Method::Quadrature } else { Method::ClosedForm }
}

/// Render θ-like scalars: `unbounded` instead of a float infinity.
fn theta_json(theta: f64) -> Value {
    if theta.is_finite() { json!(theta) } else { json!("unbounded") }
}

fn class_token(class: RayClass) -> &'static str {
    match class {
        RayClass::Case1Blowup => "case1-blowup",
        RayClass::Case2FiniteBoundary => "case2-finite-boundary",
        RayClass::EntireRay => "entire-ray",
        RayClass::Inconsistent => "inconsistent",
    }
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

fn cmd_eval(a: EvalArgs) -> Result<ExitCode, String> {
    let label = density_label(a.label, a.density)?;
    let density = resolve_density(&label).map_err(|e| e.to_string())?;
    let u = parse_f64_list(&a.u)?;
    if u.len() != density.dimension {
        return Err(format!(
            "density {label} is {}-dimensional, --u has {} coordinates",
            density.dimension,
            u.len()
        ));
    }
    let cfg = quad_config(a.common.tol)?;
    let t0 = Instant::now();
    let (value, method_used) = match a.method.as_str() {
        "quadrature" => (mgf_quadrature(&density, &u, &cfg).value, "quadrature"),
        "closed" => {
            let v = density
                .closed_form_log_mgf(&u)
                .ok_or_else(|| format!("density {label} has no closed form"))?;
            (v, "closed-form")
        }
        _ => {
            let p = density.log_mgf(&u, &cfg);
            let m = if p.method == Method::ClosedForm { "closed-form" } else { "quadrature" };
            (p.value, m)
        }
    };

    let mut results = json!({
        "log_g": logval_json(&value),
        "status": status(&value),
        "method": method_used,
    });
    if a.linear {
        match value.finite_log() {
            Some(x) if x <= LINEAR_OVERFLOW_CAP => {
                results["linear"] = json!(x.exp());
            }
            Some(x) => {
                return Err(format!(
                    "refusing --linear output: log value {x:.3} exceeds the overflow cap"
                ));
            }
            None => {
                results["linear"] = json!(status(&value));
            }
        }
    }
    if a.factorization {
        if label != "bn" {
            return Err("--factorization is only defined for the bn density".into());
        }
        if value.is_divergent() {
            return Err("no factorization at a point outside the domain".into());
        }
        let f = bn_factorization([u[0], u[1]], &cfg).map_err(|e| e.to_string())?;
        results["factorization"] = json!({
            "log_i1": f.i1,
            "log_i2": f.i2,
            "log_i3": f.i3,
            "log_product": f.log_product(),
        });
    }

    let report = Report::new(
        "eval",
        json!({ "density": label, "u": u, "method": a.method }),
        results,
        fingerprint(&cfg),
        t0.elapsed().as_secs_f64(),
    );
    let row = format!("0,{},{}", logval_cell(&value), status(&value));
    emit(&report, a.common.out, Some(("t,log_g,status", &[row])));
    Ok(if value.is_divergent() { ExitCode::from(3) } else { ExitCode::SUCCESS })
}

// ---------------------------------------------------------------------------
// ray
// ---------------------------------------------------------------------------

fn ray_config(tol: Option<f64>, force_quadrature: bool) -> Result<RayConfig, String> {
    Ok(RayConfig { quad: quad_config(tol)?, force_quadrature, ..RayConfig::default() })
}

fn ray_json(r: &mgf_core::ray::RayReport, samples: &[(f64, LogValue)]) -> Value {
    json!({
        "direction": r.direction,
        "theta_star": theta_json(r.theta_star),
        "bracket": [theta_json(r.bracket.0), theta_json(r.bracket.1)],
        "class": class_token(r.class),
        "boundary_log_g": logval_json(&r.boundary_value),
        "boundary_status": status(&r.boundary_value),
        "oracle_theta_star": r.oracle_theta_star.map(theta_json),
        "oracle_agrees": r.oracle_agrees,
        "samples": samples
            .iter()
            .map(|(theta, v)| json!({ "theta": theta, "log_g": logval_json(v), "status": status(v) }))
            .collect::<Vec<_>>(),
    })
}

/// Sample table along the ray: approach points below θ* for bounded rays,
/// doubling points for entire rays.
fn ray_samples(
    density: &mgf_core::measures::Density,
    r: &mgf_core::ray::RayReport,
    cfg: &QuadConfig,
) -> Vec<(f64, LogValue)> {
    let thetas: Vec<f64> = if r.theta_star.is_finite() {
        (2..=12).map(|j| r.bracket.0 * (1.0 - (2f64).powi(-j))).collect()
    } else {
        (0..=10).map(|j| (2f64).powi(j)).collect()
    };
    thetas
        .into_iter()
        .map(|theta| {
            let u: Vec<f64> = r.direction.iter().map(|d| d * theta).collect();
            (theta, density.log_mgf(&u, cfg).value)
        })
        .collect()
}

fn cmd_ray(a: RayArgs) -> Result<ExitCode, String> {
    let label = density_label(a.label, a.density)?;
    let density = resolve_density(&label).map_err(|e| e.to_string())?;
    let dir = parse_f64_list(&a.dir)?;
    let cfg = ray_config(a.common.tol, a.force_quadrature)?;
    let t0 = Instant::now();
    let r = ray_classify(&density, &dir, &cfg).map_err(|e| e.to_string())?;
    let samples = ray_samples(&density, &r, &cfg.quad);
    let report = Report::new(
        "ray",
        json!({ "density": label, "dir": dir, "force_quadrature": a.force_quadrature }),
        ray_json(&r, &samples),
        fingerprint(&cfg.quad),
        t0.elapsed().as_secs_f64(),
    );
    let rows: Vec<String> = samples
        .iter()
        .map(|(theta, v)| format!("{theta},{},{}", logval_cell(v), status(v)))
        .collect();
    emit(&report, a.common.out, Some(("theta,log_g,status", &rows)));
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// scan
// ---------------------------------------------------------------------------

fn cmd_scan(a: ScanArgs) -> Result<ExitCode, String> {
    let label = density_label(a.label, a.density)?;
    let density = resolve_density(&label).map_err(|e| e.to_string())?;
    if a.workers == 0 {
        return Err("--workers must be at least 1".into());
    }
    let cfg = ray_config(a.common.tol, a.force_quadrature)?;
    let t0 = Instant::now();
    let reports = if a.workers > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(a.workers)
            .build()
            .map_err(|e| format!("cannot build thread pool: {e}"))?;
        pool.install(|| domain_scan_parallel(&density, a.n, &cfg))
    } else {
        domain_scan(&density, a.n, &cfg)
    }
    .map_err(|e| e.to_string())?;

    let results = json!({
        "directions": reports.len(),
        "rays": reports
            .iter()
            .map(|r| json!({
                "direction": r.direction,
                "theta_star": theta_json(r.theta_star),
                "class": class_token(r.class),
                "boundary_log_g": logval_json(&r.boundary_value),
                "boundary_status": status(&r.boundary_value),
                "oracle_agrees": r.oracle_agrees,
            }))
            .collect::<Vec<_>>(),
    });
    let report = Report::new(
        "scan",
        json!({ "density": label, "n": a.n, "workers": a.workers, "force_quadrature": a.force_quadrature }),
        results,
        fingerprint(&cfg.quad),
        t0.elapsed().as_secs_f64(),
    );
    let rows: Vec<String> = reports
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let theta = if r.theta_star.is_finite() {
                format!("{}", r.theta_star)
            } else {
                "unbounded".into()
            };
            format!(
                "{i},{},{},{theta},{},{},{}",
                r.direction[0],
                r.direction.get(1).copied().unwrap_or(0.0),
                class_token(r.class),
                logval_cell(&r.boundary_value),
                status(&r.boundary_value),
            )
        })
        .collect();
    emit(
        &report,
        a.common.out,
        Some(("index,dir_x,dir_y,theta_star,class,log_g,status", &rows)),
    );
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// curve
// ---------------------------------------------------------------------------

/// Resolve a spec into (curve, decreasing s-schedule) for tracing. Item-3
/// specs trace their interleaved union schedule.
fn trace_plan(spec: &str, j0: u32, j1: u32) -> Result<(Curve, Vec<f64>), String> {
    match parse_curve_spec(spec).map_err(|e| e.to_string())? {
        ParsedCurve::Plain(curve) => Ok((curve, geometric_schedule(j0, j1))),
        ParsedCurve::Item3 { targets, beta } => {
            let sched = schedule_item3(&targets, beta, &phase_ks(j0, j1)).map_err(|e| e.to_string())?;
            Ok((sched.curve, sched.schedule_s))
        }
    }
}

fn cmd_curve_trace(a: CurveArgs) -> Result<ExitCode, String> {
    let (j0, j1) = parse_schedule(&a.schedule)?;
    let evaluator = parse_method(&a.evaluator);
    let cfg = quad_config(a.common.tol)?;
    let (curve, schedule_s) = trace_plan(&a.curve, j0, j1)?;
    let t0 = Instant::now();
    let tr = trace(&curve, evaluator, &schedule_s, &cfg).map_err(|e| e.to_string())?;
    let est = trace_limit(&tr, &ExtrapolateConfig::default());

    let results = json!({
        "curve": tr.label,
        "points": tr
            .schedule
            .iter()
            .zip(&tr.values)
            .map(|(&t, v)| json!({ "t": t, "log_g": logval_json(v), "status": status(v) }))
            .collect::<Vec<_>>(),
        "extrapolated_limit": logval_json(&est.limit),
        "limit_status": status(&est.limit),
        "limit_converged": est.converged,
    });
    let report = Report::new(
        "curve trace",
        json!({ "curve": a.curve, "schedule": a.schedule, "evaluator": a.evaluator }),
        results,
        fingerprint(&cfg),
        t0.elapsed().as_secs_f64(),
    );
    let rows: Vec<String> = tr
        .schedule
        .iter()
        .zip(&tr.values)
        .map(|(&t, v)| format!("{t},{},{}", logval_cell(v), status(v)))
        .collect();
    emit(&report, a.common.out, Some(("t,log_g,status", &rows)));
    Ok(ExitCode::SUCCESS)
}

fn cmd_curve_accumulate(a: CurveArgs) -> Result<ExitCode, String> {
    let (j0, j1) = parse_schedule(&a.schedule)?;
    let evaluator = parse_method(&a.evaluator);
    let cfg = quad_config(a.common.tol)?;
    let ks = phase_ks(j0, j1);
    if a.workers == 0 {
        return Err("--workers must be at least 1".into());
    }

    // one (level, s-subsequence) pair per requested accumulation point
    let (curve, plans): (Curve, Vec<(f64, Vec<f64>)>) =
        match parse_curve_spec(&a.curve).map_err(|e| e.to_string())? {
            ParsedCurve::Item3 { targets, beta } => {
                let sched = schedule_item3(&targets, beta, &ks).map_err(|e| e.to_string())?;
                (sched.curve, sched.per_target)
            }
            ParsedCurve::Plain(curve) => {
                let levels = parse_f64_list(
                    a.levels
                        .as_deref()
                        .ok_or("--levels is required when accumulating a plain curve")?,
                )?;
                let plans = levels
                    .iter()
                    .map(|&p| {
                        curve::subsequence_s(&curve, p, &ks).map(|ss| (p, ss)).map_err(|e| e.to_string())
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                (curve, plans)
            }
        };
    for (level, ss) in &plans {
        if ss.len() < 6 {
            return Err(format!(
                "subsequence for level {level} has only {} points; widen --schedule",
                ss.len()
            ));
        }
    }

    let t0 = Instant::now();
    let run_one = |(level, ss): &(f64, Vec<f64>)| -> Result<(f64, _, _), String> {
        let tr = trace(&curve, evaluator, ss, &cfg).map_err(|e| e.to_string())?;
        let est = trace_limit(&tr, &ExtrapolateConfig::default());
        Ok((*level, tr, est))
    };
    let traced: Vec<_> = if a.workers > 1 {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(a.workers)
            .build()
            .map_err(|e| format!("cannot build thread pool: {e}"))?;
        pool.install(|| plans.par_iter().map(run_one).collect::<Result<Vec<_>, _>>())?
    } else {
        plans.iter().map(run_one).collect::<Result<Vec<_>, _>>()?
    };

    let mut detected = Vec::new();
    let mut saturated = false;
    for (level, tr, est) in &traced {
        if est.limit.is_divergent() {
            saturated = true;
            detected.push(json!({
                "level": if level.is_finite() { json!(level) } else { json!("divergent") },
                "limit": "divergent",
                "status": "divergent",
                "points": tr.schedule.len(),
            }));
        } else {
            let log_limit = est.limit.finite_log();
            detected.push(json!({
                "level": if level.is_finite() { json!(level) } else { json!("divergent") },
                "limit": logval_json(&est.limit),
                "linear_limit": log_limit
                    .filter(|x| *x <= LINEAR_OVERFLOW_CAP)
                    .map(|x| json!(x.exp()))
                    .unwrap_or(json!(null)),
                "status": status(&est.limit),
                "residual": est.window,
                "points": tr.schedule.len(),
            }));
        }
    }

    let results = json!({
        "curve": curve.label,
        "detected": detected,
        "saturated_at_infinity": saturated,
    });
    let report = Report::new(
        "curve accumulate",
        json!({
            "curve": a.curve,
            "schedule": a.schedule,
            "evaluator": a.evaluator,
            "levels": a.levels,
            "workers": a.workers,
        }),
        results,
        fingerprint(&cfg),
        t0.elapsed().as_secs_f64(),
    );
    let rows: Vec<String> = traced
        .iter()
        .map(|(level, _, est)| {
            let lv = if level.is_finite() { format!("{level}") } else { "divergent".into() };
            format!("{lv},{},{}", logval_cell(&est.limit), status(&est.limit))
        })
        .collect();
    emit(&report, a.common.out, Some(("level,log_limit,status", &rows)));
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(a: VerifyArgs) -> Result<ExitCode, String> {
    if a.refresh_goldens && !a.i_understand {
        return Err("--refresh-goldens rewrites reference values; pass --i-understand to confirm".into());
    }
    let t0 = Instant::now();
    let mut all_ok = true;
    let mut criteria = Vec::new();

    if !a.goldens_only {
        let ids: Vec<usize> = match &a.only {
            Some(list) => list
                .split(',')
                .map(|s| s.trim().parse::<usize>().map_err(|e| format!("bad criterion id: {e}")))
                .collect::<Result<Vec<_>, _>>()?,
            None => (1..=11).collect(),
        };
        for id in ids {
            let o = verify::run_criterion(id).ok_or(format!("unknown criterion id {id}"))?;
            if a.common.out == OutFormat::Table {
                println!(
                    "criterion {:>2} [{}] {}",
                    o.id,
                    if o.passed { "pass" } else { "FAIL" },
                    o.title
                );
            }
            all_ok &= o.passed;
            criteria.push(json!({
                "id": o.id,
                "title": o.title,
                "passed": o.passed,
                "detail": o.detail,
            }));
        }
    }

    let path = golden::store_path()?;
    let mut store = golden::load(&path)?;
    let mut goldens = Vec::new();
    if a.refresh_goldens {
        let mut refreshed = 0;
        for entry in &mut store.entries {
            if entry.provenance == "oracle-derived" {
                let v = golden::compute_entry(entry)?;
                entry.value = golden::value_string(&v);
                refreshed += 1;
            }
        }
        golden::save(&path, &store)?;
        if a.common.out == OutFormat::Table {
            println!("refreshed {refreshed} oracle-derived golden entries in {}", path.display());
        }
    }
    for entry in &store.entries {
        let check = golden::check_entry(entry)?;
        if a.common.out == OutFormat::Table {
            println!(
                "golden [{}] {} {} — expected {}, computed {}",
                if check.passed { "pass" } else { "FAIL" },
                check.density,
                check.quantity,
                check.expected,
                check.computed
            );
        }
        all_ok &= check.passed;
        goldens.push(json!({
            "density": check.density,
            "quantity": check.quantity,
            "expected": check.expected,
            "computed": check.computed,
            "passed": check.passed,
            "provenance": entry.provenance,
        }));
    }

    let results = json!({
        "criteria": criteria,
        "goldens": goldens,
        "golden_store": path.display().to_string(),
        "passed": all_ok,
    });
    let report = Report::new(
        "verify",
        json!({ "only": a.only, "goldens_only": a.goldens_only, "refresh_goldens": a.refresh_goldens }),
        results,
        fingerprint(&QuadConfig::default()),
        t0.elapsed().as_secs_f64(),
    );
    if a.common.out != OutFormat::Table {
        emit(&report, a.common.out, None);
    } else if all_ok {
        println!("verification passed");
    } else {
        println!("verification FAILED");
    }
    Ok(if all_ok { ExitCode::SUCCESS } else { ExitCode::from(4) })
}
