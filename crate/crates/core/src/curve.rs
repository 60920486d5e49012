//! Crooked curves into the boundary point `(0,1)` of the strip.
//!
//! The module ships two item-(1) families: the verbatim curve
//! `c(t) = (t, √(1 − t/(4h(t))))` driven by the oscillator
//! `h(t) = (sin(1/(1−t)) + 2 − t)/(1−t)` — which stays in the open strip but
//! has no limit at `t = 1` — and a corrected endpoint family
//! `c(t) = (s, √(1 − s²/(4q(t))))`, `s = 1−t`,
//! `q(t) = 1 + (β/2)·log(1/s)·(1 + sin(1/s))`, which genuinely converges to
//! `(0,1)` while `G` oscillates between `eπ` and `∞` along it. Calibrated
//! level subsequences realize any prescribed limit in `(eπ, ∞]` (item 2) and
//! any finite prescribed accumulation set (item 3). A four-dimensional lift
//! appends the isolated boundary point of a second factor, multiplying every
//! value by exactly `eπ`.
//!
//! All curves are parametrized internally by `s = 1 − t`: near `t = 1` the
//! phase `1/(1−t)` is far beyond the resolution of `t` itself in double
//! precision, while `s` keeps full relative accuracy.

use crate::logval::LogValue;
use crate::measures::{bn, bn_log_mgf, bn_log_mgf_strip, mgf_quadrature, product_density, Method};
use crate::quad::{limit_extrapolate, ExtrapolateConfig, LimitEstimate, QuadConfig};
use thiserror::Error;

/// `eπ`, the MGF value at the isolated boundary point.
pub const EPI: f64 = 8.539734222673567;

const PI: f64 = std::f64::consts::PI;

#[derive(Debug, Error)]
pub enum CurveError {
    #[error("curve parameter must lie in [{t0}, 1), got t = {t}")]
    ParameterRange { t: f64, t0: f64 },
    #[error("invalid curve parameter: {0}")]
    BadParameter(String),
    #[error("curve leaves the MGF domain at t = {t}")]
    OutsideDomain { t: f64 },
    #[error("target {target} is not realizable: limits along these curves lie in [eπ, ∞]")]
    UnreachableTarget { target: f64 },
    #[error("unknown curve spec: {0}")]
    UnknownSpec(String),
    #[error("curve has no phase structure for subsequence extraction")]
    NoPhaseStructure,
}

#[derive(Debug, Clone)]
enum CurveKind {
    PaperItem1,
    EndpointItem1 { beta: f64 },
    Item2 { target: f64 },     // finite target > eπ
    Item2Infinity,
    VerticalRay,
    Constant(Vec<f64>),
    Product4d(Box<Curve>),
}

/// A continuous curve `t ∈ [t₀, 1) ↦ V`, addressed internally by `s = 1−t`.
#[derive(Debug, Clone)]
pub struct Curve {
    pub label: String,
    /// The limit `c(1)`, when the curve has one.
    pub declared_endpoint: Option<Vec<f64>>,
    /// First valid parameter.
    pub t0: f64,
    kind: CurveKind,
}

// ---------------------------------------------------------------------------
// the oscillator h
// ---------------------------------------------------------------------------

/// `h(t) = (sin(1/(1−t)) + 2 − t)/(1−t)`; in the phase variable `φ = 1/(1−t)`
/// this is `φ·sin φ + φ + 1`. Lower envelope 1 (at `sin = −1`), upper
/// envelope `(3−t)/(1−t) → ∞`.
pub fn h_oscillator(t: f64) -> f64 {
    assert!((0.0..1.0).contains(&t), "h is defined on [0,1), got {t}");
    h_of_phi(1.0 / (1.0 - t))
}

fn h_of_phi(phi: f64) -> f64 {
    phi * phi.sin() + phi + 1.0
}

fn phi_to_t(phi: f64) -> f64 {
    1.0 - 1.0 / phi
}

/// Phase of the `k`-th lower-envelope point, `sin = −1`.
pub fn low_phase(k: u64) -> f64 {
    1.5 * PI + 2.0 * PI * k as f64
}

/// Phase of the `k`-th upper-envelope point, `sin = +1`.
pub fn high_phase(k: u64) -> f64 {
    2.5 * PI + 2.0 * PI * k as f64
}

/// Solve `h(t) = q` once per oscillation: on the phase bracket
/// `[3π/2 + 2πk, 5π/2 + 2πk]` the map `φ ↦ φ sin φ + φ + 1` increases from 1
/// to `2φ + 1`, so each bracket holds exactly one solution when it reaches
/// `q`. Brackets that stay below `q` are skipped. Returns `t_k ↑ 1`.
pub fn h_level_times(q: f64, ks: &[u64]) -> Vec<f64> {
    h_level_phis(q, ks).into_iter().map(phi_to_t).collect()
}

/// Same level crossings as [`h_level_times`], returned as `s = 1/φ`. Near
/// `t = 1` the phase is far beyond the resolution of `t` in double precision,
/// so quantitative work addresses the crossings through this form.
pub fn h_level_s(q: f64, ks: &[u64]) -> Vec<f64> {
    h_level_phis(q, ks).into_iter().map(|phi| 1.0 / phi).collect()
}

fn h_level_phis(q: f64, ks: &[u64]) -> Vec<f64> {
    assert!(q >= 1.0, "levels below the lower envelope h = 1 are unreachable");
    let mut out = Vec::new();
    for &k in ks {
        let (mut a, mut b) = (low_phase(k), high_phase(k));
        if h_of_phi(b) < q {
            continue; // bracket max below the level; larger k will reach it
        }
        if q == 1.0 {
            out.push(a);
            continue;
        }
        for _ in 0..100 {
            let mid = 0.5 * (a + b);
            if h_of_phi(mid) < q {
                a = mid;
            } else {
                b = mid;
            }
        }
        out.push(0.5 * (a + b));
    }
    out
}

// ---------------------------------------------------------------------------
// saddle calibration (items 2 and 3)
// ---------------------------------------------------------------------------

/// Log of the saddle contribution of the reduced integral at the curve point
/// `u = (s, √(1 − s²/(4q)))`: a three-term Laplace expansion of
/// `∫ (1+x²)^{-1} e^{−ε(x−m)²} dx` around `m = 2q/s`, `ε = s²/(4q)`, times
/// the prefactor `e^{u₂² + q}`. As `s ↓ 0`, `G(u) → eπ + saddle`.
pub fn log_saddle(q: f64, s: f64) -> f64 {
    let eps = s * s / (4.0 * q);
    let m2 = (2.0 * q / s).powi(2);
    let g = 1.0 / (1.0 + m2);
    let g2 = (6.0 * m2 - 2.0) / (1.0 + m2).powi(3);
    let g4 = 24.0 * (5.0 * m2 * m2 - 10.0 * m2 + 1.0) / (1.0 + m2).powi(5);
    let poly = g + g2 / (4.0 * eps) + g4 / (32.0 * eps * eps);
    (1.0 - eps) + q + 0.5 * (PI / eps).ln() + poly.ln()
}

/// Solve `saddle(q, s) = excess` for `q ≥ 1` at fixed `s`. `None` when even
/// `q = 1` overshoots (the curve must then start at a later `t₀`).
fn calibrate_q(s: f64, log_excess: f64) -> Option<f64> {
    if log_saddle(1.0, s) >= log_excess {
        return None;
    }
    let mut hi = 2.0;
    while log_saddle(hi, s) < log_excess {
        hi *= 2.0;
        if hi > 5000.0 {
            return None;
        }
    }
    let mut lo = 1.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if log_saddle(mid, s) < log_excess {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Largest `s` at which the item-2 calibration is feasible for this excess.
fn feasible_s(log_excess: f64) -> f64 {
    if log_saddle(1.0, 1.0) < log_excess {
        return 1.0;
    }
    let (mut lo, mut hi) = (1e-12f64, 1.0f64);
    for _ in 0..100 {
        let mid = (lo * hi).sqrt();
        if log_saddle(1.0, mid) < log_excess {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

// ---------------------------------------------------------------------------
// curve constructors
// ---------------------------------------------------------------------------

/// The verbatim item-(1) curve `c(t) = (t, √(1 − t/(4h(t))))`. It stays in
/// the open strip but oscillates forever: no declared endpoint. Starts at
/// `t₀ = 0.01` to avoid the degenerate boundary value of the printed formula
/// at `t = 0`.
pub fn paper_curve_item1() -> Curve {
    Curve {
        label: "paper-item1".into(),
        declared_endpoint: None,
        t0: 0.01,
        kind: CurveKind::PaperItem1,
    }
}

/// The corrected item-(1) curve ending at `(0,1)`.
pub fn endpoint_curve_item1(beta: f64) -> Result<Curve, CurveError> {
    if !(beta > 1.0) {
        return Err(CurveError::BadParameter(format!(
            "endpoint curve needs beta > 1, got {beta}"
        )));
    }
    Ok(Curve {
        label: format!("endpoint-item1:beta={beta}"),
        declared_endpoint: Some(vec![0.0, 1.0]),
        t0: 0.0,
        kind: CurveKind::EndpointItem1 { beta },
    })
}

/// The item-(2) curve with `lim_{t↑1} G(c(t)) = p`. `p = eπ` degenerates to
/// the vertical ray; `p = ∞` uses `q(t) = 2·log(1/(1−t))`; finite `p > eπ`
/// solves the saddle calibration per point.
pub fn limit_curve_item2(p: f64) -> Result<Curve, CurveError> {
    if p.is_infinite() && p > 0.0 {
        return Ok(Curve {
            label: "item2:p=inf".into(),
            declared_endpoint: Some(vec![0.0, 1.0]),
            // q = 2 log(1/s) reaches the envelope minimum q = 1 at s = e^{-1/2}
            t0: 1.0 - (-0.5f64).exp(),
            kind: CurveKind::Item2Infinity,
        });
    }
    if (p - EPI).abs() <= 1e-12 {
        return Ok(vertical_ray());
    }
    if !(p > EPI) {
        return Err(CurveError::UnreachableTarget { target: p });
    }
    let log_excess = (p - EPI).ln();
    let s_max = feasible_s(log_excess);
    let t0 = if s_max >= 1.0 { 0.0 } else { 1.0 - 0.999 * s_max };
    Ok(Curve {
        label: format!("item2:p={p}"),
        declared_endpoint: Some(vec![0.0, 1.0]),
        t0,
        kind: CurveKind::Item2 { target: p },
    })
}

/// The trivial member of the curve class: `c(t) = (0, t)`.
pub fn vertical_ray() -> Curve {
    Curve {
        label: "vertical-ray".into(),
        declared_endpoint: Some(vec![0.0, 1.0]),
        t0: 0.0,
        kind: CurveKind::VerticalRay,
    }
}

/// The constant curve `c(t) ≡ u`.
pub fn constant_curve(u: Vec<f64>) -> Curve {
    Curve {
        label: format!("constant:u={u:?}"),
        declared_endpoint: Some(u.clone()),
        t0: 0.0,
        kind: CurveKind::Constant(u),
    }
}

/// The §4 lift `t ↦ (base(t), 0, 1)` into the boundary of the product
/// domain: the first pair stays interior, the second sits at the isolated
/// boundary point, and `log G₄ = log G(base) + (1 + log π)` identically.
pub fn boundary_curve_4d(base: Curve) -> Result<Curve, CurveError> {
    if base.dimension() != 2 {
        return Err(CurveError::BadParameter(format!(
            "4-D lift needs a 2-D base curve, got dimension {}",
            base.dimension()
        )));
    }
    Ok(Curve {
        label: format!("bn4d:base={}", base.label),
        declared_endpoint: base
            .declared_endpoint
            .clone()
            .map(|mut e| {
                e.extend_from_slice(&[0.0, 1.0]);
                e
            }),
        t0: base.t0,
        kind: CurveKind::Product4d(Box::new(base)),
    })
}

impl Curve {
    pub fn dimension(&self) -> usize {
        match &self.kind {
            CurveKind::Constant(u) => u.len(),
            CurveKind::Product4d(_) => 4,
            _ => 2,
        }
    }

    /// The curve point at parameter `s = 1 − t`.
    pub fn point_s(&self, s: f64) -> Result<Vec<f64>, CurveError> {
        let t = 1.0 - s;
        if !(s > 0.0) || s > 1.0 - self.t0 {
            return Err(CurveError::ParameterRange { t, t0: self.t0 });
        }
        Ok(match &self.kind {
            CurveKind::PaperItem1 => {
                let h = h_of_phi(1.0 / s);
                vec![t, (1.0 - t / (4.0 * h)).sqrt()]
            }
            CurveKind::EndpointItem1 { beta } => {
                let phi = 1.0 / s;
                let q = 1.0 + 0.5 * beta * phi.ln() * (1.0 + phi.sin());
                strip_point(s, q)
            }
            CurveKind::Item2 { target } => {
                let q = calibrate_q(s, (target - EPI).ln()).ok_or_else(|| {
                    CurveError::BadParameter(format!(
                        "calibration infeasible at t = {t} for target {target}"
                    ))
                })?;
                strip_point(s, q)
            }
            CurveKind::Item2Infinity => strip_point(s, 2.0 * (1.0 / s).ln()),
            CurveKind::VerticalRay => vec![0.0, t],
            CurveKind::Constant(u) => u.clone(),
            CurveKind::Product4d(base) => {
                let mut p = base.point_s(s)?;
                p.extend_from_slice(&[0.0, 1.0]);
                p
            }
        })
    }

    /// The point at parameter `s` in the coordinates `(u₁, ε)`, `ε = 1 − u₂²`,
    /// with `ε` carried exactly. Near the corner `(0,1)` the gap `ε`
    /// underflows inside `u₂` itself (any `ε < 2⁻⁵³` rounds `u₂` to exactly
    /// 1), so [`Curve::point_s`] cannot drive MGF evaluation there; this can.
    /// Only 2-D strip curves have these coordinates.
    pub(crate) fn strip_coords(&self, s: f64) -> Result<(f64, f64), CurveError> {
        let t = 1.0 - s;
        if !(s > 0.0) || s > 1.0 - self.t0 {
            return Err(CurveError::ParameterRange { t, t0: self.t0 });
        }
        match &self.kind {
            CurveKind::PaperItem1 => {
                let h = h_of_phi(1.0 / s);
                Ok((t, t / (4.0 * h)))
            }
            CurveKind::EndpointItem1 { beta } => {
                let phi = 1.0 / s;
                let q = 1.0 + 0.5 * beta * phi.ln() * (1.0 + phi.sin());
                Ok((s, s * s / (4.0 * q)))
            }
            CurveKind::Item2 { target } => {
                let q = calibrate_q(s, (*target - EPI).ln()).ok_or_else(|| {
                    CurveError::BadParameter(format!(
                        "calibration infeasible at t = {t} for target {target}"
                    ))
                })?;
                Ok((s, s * s / (4.0 * q)))
            }
            CurveKind::Item2Infinity => Ok((s, s * s / (8.0 * (1.0 / s).ln()))),
            CurveKind::VerticalRay => Ok((0.0, s * (2.0 - s))),
            CurveKind::Constant(u) if u.len() == 2 => Ok((u[0], 1.0 - u[1] * u[1])),
            _ => Err(CurveError::BadParameter(format!(
                "curve {} is not a 2-D strip curve",
                self.label
            ))),
        }
    }

    /// Same point addressed by `t` (display convenience; loses phase
    /// resolution near `t = 1`, where [`Curve::point_s`] should be used).
    pub fn point(&self, t: f64) -> Result<Vec<f64>, CurveError> {
        self.point_s(1.0 - t)
    }

    /// Distance from the declared endpoint at parameter `s`.
    pub fn endpoint_deviation(&self, s: f64) -> Option<f64> {
        let e = self.declared_endpoint.as_ref()?;
        let p = self.point_s(s).ok()?;
        Some(
            p.iter()
                .zip(e)
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt(),
        )
    }
}

fn strip_point(s: f64, q: f64) -> Vec<f64> {
    vec![s, (1.0 - s * s / (4.0 * q)).sqrt()]
}

// ---------------------------------------------------------------------------
// schedules
// ---------------------------------------------------------------------------

/// Geometric schedule `s_j = 2^{−j}`, `j = j0..=j1` (so `t_j = 1 − 2^{−j}`).
pub fn geometric_schedule(j0: u32, j1: u32) -> Vec<f64> {
    (j0..=j1).map(|j| (2f64).powi(-(j as i32))).collect()
}

/// Geometric phase indices `k_j = 2^j`. Along phase subsequences the log
/// values then move by constant steps when they diverge logarithmically,
/// which is exactly what the extrapolator's divergence rule looks for.
pub fn phase_ks(j0: u32, j1: u32) -> Vec<u64> {
    (j0..=j1).map(|j| 1u64 << j).collect()
}

/// Which subsequence of an oscillating curve to follow, addressed by the
/// target MGF value: `eπ` is the quiet (`sin = −1`) envelope, `∞` the loud
/// (`sin = +1`) envelope, anything between is a calibrated level crossing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PhaseTarget {
    LowEnvelope,
    HighEnvelope,
    Level(f64),
}

impl PhaseTarget {
    pub fn from_value(p: f64) -> Result<Self, CurveError> {
        if p.is_infinite() && p > 0.0 {
            Ok(PhaseTarget::HighEnvelope)
        } else if (p - EPI).abs() <= 1e-9 {
            Ok(PhaseTarget::LowEnvelope)
        } else if p > EPI {
            Ok(PhaseTarget::Level(p))
        } else {
            Err(CurveError::UnreachableTarget { target: p })
        }
    }
}

/// Subsequence parameters (`s` values, decreasing) of the endpoint curve
/// along which `G` approaches the phase target.
///
/// For a finite level `p`, each oscillation bracket is scanned for the
/// crossing of the calibration equation `saddle(q(φ), 1/φ) = p − eπ`; the
/// saddle term spans `(≈0, ∞)` over every bracket once `k` is large enough,
/// so a crossing exists and `G → eπ + (p − eπ) = p` along the solved points.
pub fn endpoint_phase_schedule(
    beta: f64,
    target: PhaseTarget,
    ks: &[u64],
) -> Result<Vec<f64>, CurveError> {
    if !(beta > 1.0) {
        return Err(CurveError::BadParameter(format!("beta must exceed 1, got {beta}")));
    }
    let mut out = Vec::new();
    match target {
        PhaseTarget::LowEnvelope => {
            out.extend(ks.iter().map(|&k| 1.0 / low_phase(k)));
        }
        PhaseTarget::HighEnvelope => {
            out.extend(ks.iter().map(|&k| 1.0 / high_phase(k)));
        }
        PhaseTarget::Level(p) => {
            if !(p > EPI) {
                return Err(CurveError::UnreachableTarget { target: p });
            }
            let log_excess = (p - EPI).ln();
            let saddle_at = |phi: f64| {
                let q = 1.0 + 0.5 * beta * phi.ln() * (1.0 + phi.sin());
                log_saddle(q, 1.0 / phi)
            };
            for &k in ks {
                let (a, b) = (low_phase(k), high_phase(k));
                // scan for the upward crossing (the saddle dips before it
                // climbs, so plain bisection from the endpoints is unsafe)
                let n = 512;
                let step = (b - a) / n as f64;
                let mut bracket = None;
                let mut prev = saddle_at(a);
                for i in 1..=n {
                    let phi = a + step * i as f64;
                    let cur = saddle_at(phi);
                    if prev < log_excess && cur >= log_excess {
                        bracket = Some((phi - step, phi));
                        break;
                    }
                    prev = cur;
                }
                let Some((mut lo, mut hi)) = bracket else {
                    continue; // bracket never reaches the level; larger k will
                };
                for _ in 0..80 {
                    let mid = 0.5 * (lo + hi);
                    if saddle_at(mid) < log_excess {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                out.push(2.0 / (lo + hi));
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// tracing and accumulation
// ---------------------------------------------------------------------------

/// Evaluated curve samples. `schedule` holds `t = 1−s` for reporting;
/// `schedule_s` is the exact parametrization.
#[derive(Debug, Clone)]
pub struct CurveTrace {
    pub label: String,
    pub schedule: Vec<f64>,
    pub schedule_s: Vec<f64>,
    pub values: Vec<LogValue>,
}

/// Evaluate `log G(c(t))` at one parameter, including the domain check.
///
/// 2-D curves are routed through the exact strip coordinates `(u₁, ε)`: the
/// point must lie in `V`, i.e. `ε > 0`, or `ε = 0` with `u₁ = 0` (the
/// isolated boundary point). The 4-D lift evaluates its base the same way and
/// multiplies by the closed-form value at `(0,1)`; the 4-D quadrature path
/// works in plain coordinates and is only meaningful at moderate `s`.
fn eval_curve_point(
    curve: &Curve,
    s: f64,
    evaluator: Method,
    cfg: &QuadConfig,
) -> Result<LogValue, CurveError> {
    match (&curve.kind, evaluator) {
        (CurveKind::Product4d(base), Method::ClosedForm) => {
            let v = eval_curve_point(base, s, evaluator, cfg)?;
            Ok(v.mul(&bn_log_mgf([0.0, 1.0], cfg)))
        }
        (CurveKind::Product4d(base), Method::Quadrature) => {
            let (u1, eps) = base.strip_coords(s)?;
            check_in_v(u1, eps, 1.0 - s)?;
            let u = curve.point_s(s)?;
            Ok(mgf_quadrature(&product_density(&bn(), &bn()), &u, cfg).value)
        }
        (_, Method::ClosedForm) => {
            let (u1, eps) = curve.strip_coords(s)?;
            check_in_v(u1, eps, 1.0 - s)?;
            Ok(bn_log_mgf_strip(u1, eps, cfg))
        }
        (_, Method::Quadrature) => {
            let (u1, eps) = curve.strip_coords(s)?;
            check_in_v(u1, eps, 1.0 - s)?;
            let u = curve.point_s(s)?;
            Ok(mgf_quadrature(&bn(), &u, cfg).value)
        }
    }
}

fn check_in_v(u1: f64, eps: f64, t: f64) -> Result<(), CurveError> {
    if eps > 0.0 || (eps == 0.0 && u1 == 0.0) {
        Ok(())
    } else {
        Err(CurveError::OutsideDomain { t })
    }
}

/// Evaluate `log G(c(t))` over a schedule of `s = 1−t` values (decreasing).
pub fn trace(
    curve: &Curve,
    evaluator: Method,
    schedule_s: &[f64],
    cfg: &QuadConfig,
) -> Result<CurveTrace, CurveError> {
    let mut values = Vec::with_capacity(schedule_s.len());
    for &s in schedule_s {
        values.push(eval_curve_point(curve, s, evaluator, cfg)?);
    }
    Ok(CurveTrace {
        label: curve.label.clone(),
        schedule: schedule_s.iter().map(|&s| 1.0 - s).collect(),
        schedule_s: schedule_s.to_vec(),
        values,
    })
}

/// Extrapolate a trace to its `t ↑ 1` limit.
pub fn trace_limit(trace: &CurveTrace, cfg: &ExtrapolateConfig) -> LimitEstimate {
    let series: Vec<(f64, LogValue)> = trace
        .schedule
        .iter()
        .zip(&trace.values)
        .map(|(&t, v)| (t, v.clone()))
        .collect();
    limit_extrapolate(&series, cfg)
}

/// One detected subsequential limit.
#[derive(Debug, Clone)]
pub struct DetectedLimit {
    /// The requested level (target MGF value, or `h` level for the verbatim
    /// curve).
    pub level: f64,
    pub limit: LogValue,
    /// Subsequence parameters, as `t` values.
    pub subsequence: Vec<f64>,
    /// Extrapolation window: spread of the accelerated tail, log scale.
    pub residual: f64,
}

#[derive(Debug, Clone)]
pub struct AccumulationReport {
    /// Finite detected limits, in the order the levels were given.
    pub detected: Vec<DetectedLimit>,
    /// Set when any requested subsequence diverges (`∞` is an accumulation
    /// point); infinity is never represented as a float in `detected`.
    pub saturated_at_infinity: bool,
}

/// Subsequence parameters (`s` values) of a curve for one level, using the
/// curve's own phase structure.
pub fn subsequence_s(curve: &Curve, level: f64, ks: &[u64]) -> Result<Vec<f64>, CurveError> {
    match &curve.kind {
        CurveKind::EndpointItem1 { beta } => {
            endpoint_phase_schedule(*beta, PhaseTarget::from_value(level)?, ks)
        }
        CurveKind::PaperItem1 => {
            // levels are h-levels here; the subsequence converges to an
            // interior point, not to the boundary
            Ok(h_level_s(level, ks))
        }
        CurveKind::VerticalRay | CurveKind::Constant(_) | CurveKind::Item2 { .. }
        | CurveKind::Item2Infinity => {
            Ok(ks.iter().map(|&k| 1.0 / (4.0 * k as f64)).collect())
        }
        CurveKind::Product4d(base) => subsequence_s(base, level, ks),
    }
}

/// Detect the accumulation points of `G` along the curve at the given levels.
pub fn accumulation_points(
    curve: &Curve,
    levels: &[f64],
    evaluator: Method,
    ks: &[u64],
    cfg: &QuadConfig,
    ex: &ExtrapolateConfig,
) -> Result<AccumulationReport, CurveError> {
    let mut detected = Vec::new();
    let mut saturated = false;
    for &level in levels {
        let ss = subsequence_s(curve, level, ks)?;
        if ss.len() < 6 {
            return Err(CurveError::BadParameter(format!(
                "subsequence for level {level} has only {} usable points",
                ss.len()
            )));
        }
        let tr = trace(curve, evaluator, &ss, cfg)?;
        let est = trace_limit(&tr, ex);
        if est.limit.is_divergent() {
            saturated = true;
        } else {
            detected.push(DetectedLimit {
                level,
                limit: est.limit,
                subsequence: tr.schedule,
                residual: est.window,
            });
        }
    }
    Ok(AccumulationReport { detected, saturated_at_infinity: saturated })
}

/// The item-(3) construction: one increasing schedule whose `G` values
/// accumulate exactly at the given targets.
#[derive(Debug, Clone)]
pub struct Item3Schedule {
    pub curve: Curve,
    /// Diagonal interleave of all subsequences, as decreasing `s` values.
    pub schedule_s: Vec<f64>,
    /// Per-target subsequences (`s` values).
    pub per_target: Vec<(f64, Vec<f64>)>,
}

/// Build the countable-union schedule of Lemma item (3) on the endpoint
/// curve: one phase-solved subsequence per target, interleaved into a single
/// sequence `t_j ↑ 1`.
pub fn schedule_item3(targets: &[f64], beta: f64, ks: &[u64]) -> Result<Item3Schedule, CurveError> {
    if targets.is_empty() {
        return Err(CurveError::BadParameter("need at least one target".into()));
    }
    let curve = endpoint_curve_item1(beta)?;
    let mut per_target = Vec::new();
    for &p in targets {
        PhaseTarget::from_value(p)?; // validate early
        let ss = endpoint_phase_schedule(beta, PhaseTarget::from_value(p)?, ks)?;
        per_target.push((p, ss));
    }
    let mut merged: Vec<f64> = per_target.iter().flat_map(|(_, ss)| ss.iter().copied()).collect();
    merged.sort_by(|a, b| b.partial_cmp(a).unwrap()); // decreasing s = increasing t
    merged.dedup();
    Ok(Item3Schedule { curve, schedule_s: merged, per_target })
}

/// Run the accumulation analysis over an item-(3) schedule.
pub fn item3_report(
    sched: &Item3Schedule,
    evaluator: Method,
    cfg: &QuadConfig,
    ex: &ExtrapolateConfig,
) -> Result<AccumulationReport, CurveError> {
    let mut detected = Vec::new();
    let mut saturated = false;
    for (p, ss) in &sched.per_target {
        if ss.len() < 6 {
            return Err(CurveError::BadParameter(format!(
                "subsequence for target {p} has only {} usable points",
                ss.len()
            )));
        }
        let tr = trace(&sched.curve, evaluator, ss, cfg)?;
        let est = trace_limit(&tr, ex);
        if est.limit.is_divergent() {
            saturated = true;
        } else {
            detected.push(DetectedLimit {
                level: *p,
                limit: est.limit,
                subsequence: tr.schedule,
                residual: est.window,
            });
        }
    }
    Ok(AccumulationReport { detected, saturated_at_infinity: saturated })
}

// ---------------------------------------------------------------------------
// spec parsing (shared with the CLI)
// ---------------------------------------------------------------------------

/// A parsed curve spec: either a plain curve or the item-3 schedule family.
#[derive(Debug, Clone)]
pub enum ParsedCurve {
    Plain(Curve),
    Item3 { targets: Vec<f64>, beta: f64 },
}

/// Parse the curve addressing syntax:
/// `paper-item1`, `endpoint-item1[:beta=B]`, `item2:p=P` (`P` may be `inf`),
/// `item3:targets=a,b,...`, `vertical-ray`, `constant:u=a,b`,
/// `bn4d:base=<spec>`.
pub fn parse_curve_spec(spec: &str) -> Result<ParsedCurve, CurveError> {
    let bad = || CurveError::UnknownSpec(spec.to_string());
    let parse_num = |s: &str| -> Result<f64, CurveError> {
        if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinity") {
            Ok(f64::INFINITY)
        } else {
            s.parse::<f64>().map_err(|_| bad())
        }
    };
    if spec == "paper-item1" {
        return Ok(ParsedCurve::Plain(paper_curve_item1()));
    }
    if spec == "vertical-ray" {
        return Ok(ParsedCurve::Plain(vertical_ray()));
    }
    if spec == "endpoint-item1" {
        return Ok(ParsedCurve::Plain(endpoint_curve_item1(2.0)?));
    }
    if let Some(rest) = spec.strip_prefix("endpoint-item1:beta=") {
        return Ok(ParsedCurve::Plain(endpoint_curve_item1(parse_num(rest)?)?));
    }
    if let Some(rest) = spec.strip_prefix("item2:p=") {
        return Ok(ParsedCurve::Plain(limit_curve_item2(parse_num(rest)?)?));
    }
    if let Some(rest) = spec.strip_prefix("item3:targets=") {
        let targets = rest
            .split(',')
            .map(parse_num)
            .collect::<Result<Vec<f64>, _>>()?;
        if targets.is_empty() {
            return Err(bad());
        }
        return Ok(ParsedCurve::Item3 { targets, beta: 2.0 });
    }
    if let Some(rest) = spec.strip_prefix("constant:u=") {
        let u = rest
            .split(',')
            .map(parse_num)
            .collect::<Result<Vec<f64>, _>>()?;
        return Ok(ParsedCurve::Plain(constant_curve(u)));
    }
    if let Some(rest) = spec.strip_prefix("bn4d:base=") {
        return match parse_curve_spec(rest)? {
            ParsedCurve::Plain(base) => Ok(ParsedCurve::Plain(boundary_curve_4d(base)?)),
            ParsedCurve::Item3 { .. } => Err(bad()),
        };
    }
    Err(bad())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::LOG_EPI;

    #[test]
    fn h_reference_values() {
        assert!((h_oscillator(0.0) - (1f64.sin() + 2.0)).abs() < 1e-12);
        // sin = −1 phases: h = 1 exactly
        for k in [3u64, 17, 200] {
            let t = phi_to_t(low_phase(k));
            assert!((h_oscillator(t) - 1.0).abs() < 1e-9, "k={k}");
        }
        // sin = +1 phases: upper envelope (3−t)/(1−t)
        let t = phi_to_t(high_phase(9));
        assert!((h_oscillator(t) - (3.0 - t) / (1.0 - t)).abs() < 1e-6);
    }

    #[test]
    fn h_level_bisection() {
        let ts = h_level_times(2.0, &[10]);
        assert_eq!(ts.len(), 1);
        let t = ts[0];
        let phi = 1.0 / (1.0 - t);
        assert!(phi > low_phase(10) && phi < high_phase(10));
        assert!((h_oscillator(t) - 2.0).abs() < 1e-9);
    }

    #[test]
    fn h_level_skips_small_brackets() {
        // upper envelope 2φ+1 only reaches 1e6 for φ ≳ 5e5, i.e. k ≳ 8e4
        let ss = h_level_s(1e6, &[1, 2, 100_000]);
        assert_eq!(ss.len(), 1);
        assert!((h_of_phi(1.0 / ss[0]) - 1e6).abs() < 1e-3);
        // addressed by t instead, rounding of 1−s costs phase resolution: the
        // level is only hit to ~1e-3 relative accuracy
        let ts = h_level_times(1e6, &[1, 2, 100_000]);
        assert!((h_oscillator(ts[0]) - 1e6).abs() < 1e3);
    }

    #[test]
    fn paper_curve_stays_in_strip_and_oscillates() {
        let c = paper_curve_item1();
        for &s in &geometric_schedule(4, 30) {
            let u = c.point_s(s).unwrap();
            assert!(u[1] > 0.0 && u[1] < 1.0, "u = {u:?}");
        }
        // sin = −1 phases: c2 = √(1 − t/4)
        let s = 1.0 / low_phase(50);
        let u = c.point_s(s).unwrap();
        let t = 1.0 - s;
        assert!((u[1] - (1.0 - t / 4.0).sqrt()).abs() < 1e-7);
        // the two envelope subsequences stay ≥ 0.1 apart in u₂ forever
        for k in [1u64 << 10, 1 << 20, 1 << 30] {
            let lo = c.point_s(1.0 / low_phase(k)).unwrap()[1];
            let hi = c.point_s(1.0 / high_phase(k)).unwrap()[1];
            assert!(hi - lo >= 0.1, "k={k}: {lo} vs {hi}");
        }
    }

    #[test]
    fn endpoint_curve_contracts_to_corner() {
        let c = endpoint_curve_item1(2.0).unwrap();
        let sched = geometric_schedule(4, 40);
        let devs: Vec<f64> = sched.iter().map(|&s| c.endpoint_deviation(s).unwrap()).collect();
        let last10 = &devs[devs.len() - 10..];
        assert!(last10.iter().all(|&d| d < 1e-3), "{last10:?}");
        assert!(last10.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn endpoint_curve_quiet_phase_limit_is_epi() {
        let c = endpoint_curve_item1(2.0).unwrap();
        let ss = endpoint_phase_schedule(2.0, PhaseTarget::LowEnvelope, &phase_ks(2, 24)).unwrap();
        let tr = trace(&c, Method::ClosedForm, &ss, &QuadConfig::default()).unwrap();
        let est = trace_limit(&tr, &ExtrapolateConfig::default());
        let v = est.limit.log_magnitude();
        assert!((v - LOG_EPI).abs() < 0.01 * LOG_EPI, "{est:?}");
    }

    #[test]
    fn endpoint_curve_loud_phase_diverges() {
        let c = endpoint_curve_item1(2.0).unwrap();
        let ss = endpoint_phase_schedule(2.0, PhaseTarget::HighEnvelope, &phase_ks(2, 24)).unwrap();
        let tr = trace(&c, Method::ClosedForm, &ss, &QuadConfig::default()).unwrap();
        let est = trace_limit(&tr, &ExtrapolateConfig::default());
        assert!(est.limit.is_divergent(), "{est:?}");
    }

    #[test]
    fn endpoint_curve_mid_level_limit() {
        let c = endpoint_curve_item1(2.0).unwrap();
        let target = 30.0;
        let ss =
            endpoint_phase_schedule(2.0, PhaseTarget::Level(target), &phase_ks(2, 24)).unwrap();
        assert!(ss.len() >= 6, "only {} crossings found", ss.len());
        let tr = trace(&c, Method::ClosedForm, &ss, &QuadConfig::default()).unwrap();
        let est = trace_limit(&tr, &ExtrapolateConfig::default());
        let v = est.limit.log_magnitude();
        assert!(
            (v - target.ln()).abs() < 0.05 * target.ln(),
            "target ln {} got {v}",
            target.ln()
        );
        assert!(v > LOG_EPI + 0.2);
    }

    #[test]
    fn item2_curve_reaches_its_target() {
        let c = limit_curve_item2(100.0).unwrap();
        let tr =
            trace(&c, Method::ClosedForm, &geometric_schedule(4, 30), &QuadConfig::default())
                .unwrap();
        let est = trace_limit(&tr, &ExtrapolateConfig::default());
        let v = est.limit.log_magnitude();
        assert!((v - 100f64.ln()).abs() < 0.02 * 100f64.ln(), "{est:?}");
    }

    #[test]
    fn item2_infinity_diverges() {
        let c = limit_curve_item2(f64::INFINITY).unwrap();
        let tr =
            trace(&c, Method::ClosedForm, &geometric_schedule(4, 30), &QuadConfig::default())
                .unwrap();
        let est = trace_limit(&tr, &ExtrapolateConfig::default());
        assert!(est.limit.is_divergent(), "{est:?}");
    }

    #[test]
    fn item2_epi_degenerates_to_vertical_ray() {
        let c = limit_curve_item2(EPI).unwrap();
        assert_eq!(c.label, "vertical-ray");
        assert!(limit_curve_item2(3.0).is_err());
    }

    #[test]
    fn product_curve_shift_is_exact() {
        let base = vertical_ray();
        let lifted = boundary_curve_4d(base.clone()).unwrap();
        let sched = geometric_schedule(4, 12);
        let cfg = QuadConfig::default();
        let base_tr = trace(&base, Method::ClosedForm, &sched, &cfg).unwrap();
        let lift_tr = trace(&lifted, Method::ClosedForm, &sched, &cfg).unwrap();
        for (b, l) in base_tr.values.iter().zip(&lift_tr.values) {
            let shift = l.log_magnitude() - b.log_magnitude();
            assert!((shift - LOG_EPI).abs() < 1e-7, "shift {shift}");
        }
    }

    #[test]
    fn constant_curve_accumulates_at_its_value() {
        let c = constant_curve(vec![0.0, 0.5]);
        let rep = accumulation_points(
            &c,
            &[0.0],
            Method::ClosedForm,
            &phase_ks(2, 10),
            &QuadConfig::default(),
            &ExtrapolateConfig::default(),
        )
        .unwrap();
        assert_eq!(rep.detected.len(), 1);
        assert!(!rep.saturated_at_infinity);
        let expected = bn_log_mgf([0.0, 0.5], &QuadConfig::default()).log_magnitude();
        assert!((rep.detected[0].limit.log_magnitude() - expected).abs() < 1e-6);
    }

    #[test]
    fn paper_curve_level_limit_is_interior_value() {
        let c = paper_curve_item1();
        let q = 2.0;
        let rep = accumulation_points(
            &c,
            &[q],
            Method::ClosedForm,
            &phase_ks(2, 22),
            &QuadConfig::default(),
            &ExtrapolateConfig::default(),
        )
        .unwrap();
        assert_eq!(rep.detected.len(), 1);
        // the subsequence converges to the interior point (1, √(1 − 1/(4q)))
        let expected =
            bn_log_mgf([1.0, (1.0 - 1.0 / (4.0 * q)).sqrt()], &QuadConfig::default())
                .log_magnitude();
        let got = rep.detected[0].limit.log_magnitude();
        assert!((got - expected).abs() < 1e-4, "got {got}, expected {expected}");
    }

    #[test]
    fn parse_specs() {
        assert!(matches!(parse_curve_spec("paper-item1"), Ok(ParsedCurve::Plain(_))));
        assert!(matches!(parse_curve_spec("endpoint-item1:beta=3"), Ok(ParsedCurve::Plain(_))));
        assert!(matches!(parse_curve_spec("item2:p=inf"), Ok(ParsedCurve::Plain(_))));
        match parse_curve_spec("item3:targets=20,200").unwrap() {
            ParsedCurve::Item3 { targets, .. } => assert_eq!(targets, vec![20.0, 200.0]),
            other => panic!("{other:?}"),
        }
        match parse_curve_spec("bn4d:base=endpoint-item1").unwrap() {
            ParsedCurve::Plain(c) => assert_eq!(c.dimension(), 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_curve_spec("helix").is_err());
        assert!(parse_curve_spec("item2:p=1").is_err());
    }
}
