//! Probing the MGF domain along rays from the origin.
//!
//! For a direction `d` on the unit sphere, `θ* = sup{θ ≥ 0 : G(θd) < ∞}` is
//! located by doubling until the quadrature predicate reports divergence and
//! then bisecting. The behavior at the boundary point `θ*d` is then
//! classified the way the dichotomy for one-dimensional restrictions
//! predicts: either `G` blows up along the ray (case 1) or it converges to a
//! finite limit that matches direct evaluation at the boundary (case 2).
//! Anything else is reported as an inconsistency rather than silently
//! resolved.

use crate::logval::LogValue;
use crate::measures::Density;
use crate::quad::{limit_extrapolate, ExtrapolateConfig, QuadConfig};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RayError {
    #[error("direction vector must be nonzero")]
    ZeroDirection,
    #[error("dimension mismatch: density is {expected}-dimensional, direction has {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("total mass is not finite; the origin must lie in the domain")]
    MassDivergent,
    #[error("domain scan is only defined for 1- and 2-dimensional densities, got {0}")]
    ScanDimension(usize),
}

/// Tuning for the ray probes.
#[derive(Debug, Clone)]
pub struct RayConfig {
    pub quad: QuadConfig,
    /// Relative width of the final θ* bracket.
    pub bisect_rel_tol: f64,
    /// Doubling search gives up at `2^max_doubling_exp` (ray declared unbounded).
    pub max_doubling_exp: u32,
    /// Sample indices `j` for the approach `θ_j = θ_lo·(1 − 2^{−j})`.
    pub sample_range: (u32, u32),
    pub extrapolate: ExtrapolateConfig,
    /// Agreement tolerance between the extrapolated limit and direct boundary
    /// evaluation, relative to `max(1, |direct|)` in log scale.
    pub direct_agree_tol: f64,
    /// Agreement tolerance between numerical and oracle θ*, relative to
    /// `max(1, θ*)`.
    pub oracle_agree_tol: f64,
    /// Ignore closed forms and probe by quadrature of the tilted density.
    pub force_quadrature: bool,
}

impl Default for RayConfig {
    fn default() -> Self {
        RayConfig {
            quad: QuadConfig::default(),
            bisect_rel_tol: 1e-9,
            max_doubling_exp: 40,
            sample_range: (2, 24),
            extrapolate: ExtrapolateConfig::default(),
            direct_agree_tol: 1e-4,
            oracle_agree_tol: 1e-6,
            force_quadrature: false,
        }
    }
}

/// Located finiteness threshold along a ray.
#[derive(Debug, Clone)]
pub struct ThetaStar {
    /// Best estimate (the midpoint of the final bracket); `+∞` if unbounded.
    pub theta: f64,
    /// `(lo, hi)`: the predicate holds at `lo` and fails at `hi`.
    pub bracket: (f64, f64),
    pub unbounded: bool,
}

/// The boundary dichotomy along the ray.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RayClass {
    /// `G(θd) → ∞` as `θ ↑ θ*`: the boundary point is outside the domain.
    Case1Blowup,
    /// `G(θd)` converges and agrees with direct evaluation at the boundary.
    Case2FiniteBoundary,
    /// The ray never leaves the domain.
    EntireRay,
    /// The extrapolated limit and the direct boundary value disagree.
    Inconsistent,
}

#[derive(Debug, Clone)]
pub struct RayReport {
    pub direction: Vec<f64>,
    pub theta_star: f64,
    pub bracket: (f64, f64),
    pub class: RayClass,
    /// Limit of `log G` along the ray (`Divergent` for case 1 and unbounded rays).
    pub boundary_value: LogValue,
    /// θ* recomputed from the density's exact domain oracle, when present.
    pub oracle_theta_star: Option<f64>,
    /// Whether numerical and oracle θ* agree within `oracle_agree_tol`.
    pub oracle_agrees: Option<bool>,
}

fn unit_direction(direction: &[f64]) -> Result<Vec<f64>, RayError> {
    let norm = direction.iter().map(|x| x * x).sum::<f64>().sqrt();
    if !(norm > 0.0) || !norm.is_finite() {
        return Err(RayError::ZeroDirection);
    }
    Ok(direction.iter().map(|x| x / norm).collect())
}

fn log_g(density: &Density, u: &[f64], cfg: &QuadConfig, force_quadrature: bool) -> LogValue {
    if force_quadrature {
        crate::measures::mgf_quadrature(density, u, cfg).value
    } else {
        density.log_mgf(u, cfg).value
    }
}

/// Generic doubling-then-bisection threshold search for a predicate that
/// holds at 0 and is (assumed) monotone along the ray.
fn threshold<P: Fn(f64) -> bool>(
    predicate: P,
    max_doubling_exp: u32,
    rel_tol: f64,
) -> ThetaStar {
    let mut lo = 0.0f64;
    let mut hi = None;
    for k in 0..=max_doubling_exp {
        let theta = (2f64).powi(k as i32);
        if predicate(theta) {
            lo = theta;
        } else {
            hi = Some(theta);
            break;
        }
    }
    let Some(mut hi) = hi else {
        let top = (2f64).powi(max_doubling_exp as i32);
        return ThetaStar { theta: f64::INFINITY, bracket: (top, f64::INFINITY), unbounded: true };
    };
    while hi - lo > rel_tol * hi {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // bracket at floating-point resolution
        }
        if predicate(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    ThetaStar { theta: 0.5 * (lo + hi), bracket: (lo, hi), unbounded: false }
}

/// Locate θ* along `direction` by the numerical finiteness predicate.
pub fn theta_star(
    density: &Density,
    direction: &[f64],
    cfg: &RayConfig,
) -> Result<ThetaStar, RayError> {
    if direction.len() != density.dimension {
        return Err(RayError::DimensionMismatch {
            expected: density.dimension,
            got: direction.len(),
        });
    }
    let d = unit_direction(direction)?;
    // Deep tail probes: near θ* the divergent side may drift away from
    // integrability at a rate proportional to the bracket width, which only
    // beats the integrable decay far out on the axis.
    let mut pred_cfg = cfg.quad.clone();
    pred_cfg.tail_probe_doublings = pred_cfg.tail_probe_doublings.max(34);

    let at = |theta: f64| -> Vec<f64> { d.iter().map(|x| x * theta).collect() };
    if log_g(density, &at(0.0), &pred_cfg, cfg.force_quadrature).is_divergent() {
        return Err(RayError::MassDivergent);
    }
    let pred =
        |theta: f64| !log_g(density, &at(theta), &pred_cfg, cfg.force_quadrature).is_divergent();
    Ok(threshold(pred, cfg.max_doubling_exp, cfg.bisect_rel_tol))
}

/// θ* from the exact domain oracle, when the density has one.
pub fn theta_star_oracle(density: &Density, direction: &[f64]) -> Option<ThetaStar> {
    let d = unit_direction(direction).ok()?;
    density.membership(&vec![0.0; density.dimension])?;
    let pred = |theta: f64| {
        let u: Vec<f64> = d.iter().map(|x| x * theta).collect();
        density.membership(&u).map(|m| m.in_v()).unwrap_or(false)
    };
    Some(threshold(pred, 40, 1e-12))
}

/// Locate θ* and classify the boundary behavior along the ray.
pub fn ray_classify(
    density: &Density,
    direction: &[f64],
    cfg: &RayConfig,
) -> Result<RayReport, RayError> {
    let d = unit_direction(direction)?;
    let ts = theta_star(density, &d, cfg)?;
    let oracle = theta_star_oracle(density, &d);
    let (oracle_theta_star, oracle_agrees) = match &oracle {
        Some(o) => {
            let agree = if ts.unbounded || o.unbounded {
                ts.unbounded == o.unbounded
            } else {
                (ts.theta - o.theta).abs() <= cfg.oracle_agree_tol * ts.theta.max(1.0)
            };
            (Some(o.theta), Some(agree))
        }
        None => (None, None),
    };

    if ts.unbounded {
        return Ok(RayReport {
            direction: d,
            theta_star: f64::INFINITY,
            bracket: ts.bracket,
            class: RayClass::EntireRay,
            boundary_value: LogValue::Divergent,
            oracle_theta_star,
            oracle_agrees,
        });
    }

    // Approach along the finite side of the bracket so every sample is
    // strictly inside the domain.
    let theta_lo = ts.bracket.0;
    let at = |theta: f64| -> Vec<f64> { d.iter().map(|x| x * theta).collect() };
    let (j0, j1) = cfg.sample_range;
    let series: Vec<(f64, LogValue)> = (j0..=j1)
        .map(|j| {
            let t = 1.0 - (2f64).powi(-(j as i32));
            (t, log_g(density, &at(theta_lo * t), &cfg.quad, cfg.force_quadrature))
        })
        .collect();
    let est = limit_extrapolate(&series, &cfg.extrapolate);

    let (class, boundary_value) = match est.limit {
        LogValue::Divergent => (RayClass::Case1Blowup, LogValue::Divergent),
        limit => {
            // Case 2 demands agreement with direct evaluation at the
            // boundary; the finite end of the bracket is the boundary point
            // to working precision.
            let direct = log_g(density, &at(theta_lo), &cfg.quad, cfg.force_quadrature);
            match (limit.finite_log(), direct.finite_log()) {
                (Some(l), Some(dv))
                    if (l - dv).abs() <= cfg.direct_agree_tol * dv.abs().max(1.0) =>
                {
                    (RayClass::Case2FiniteBoundary, limit)
                }
                _ => (RayClass::Inconsistent, limit),
            }
        }
    };

    Ok(RayReport {
        direction: d,
        theta_star: ts.theta,
        bracket: ts.bracket,
        class,
        boundary_value,
        oracle_theta_star,
        oracle_agrees,
    })
}

/// The scan directions: `±1` in one dimension, `n` equally spaced unit
/// vectors starting at angle 0 in two dimensions.
pub fn scan_directions(dimension: usize, n: usize) -> Result<Vec<Vec<f64>>, RayError> {
    match dimension {
        1 => Ok(vec![vec![1.0], vec![-1.0]]),
        2 => Ok((0..n)
            .map(|k| {
                let phi = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
                vec![phi.cos(), phi.sin()]
            })
            .collect()),
        d => Err(RayError::ScanDimension(d)),
    }
}

/// Classify every direction of a scan, sequentially.
pub fn domain_scan(
    density: &Density,
    n_directions: usize,
    cfg: &RayConfig,
) -> Result<Vec<RayReport>, RayError> {
    scan_directions(density.dimension, n_directions)?
        .iter()
        .map(|d| ray_classify(density, d, cfg))
        .collect()
}

/// Classify every direction of a scan on a rayon thread pool. Reports come
/// back in direction order, bit-identical to [`domain_scan`].
pub fn domain_scan_parallel(
    density: &Density,
    n_directions: usize,
    cfg: &RayConfig,
) -> Result<Vec<RayReport>, RayError> {
    use rayon::prelude::*;
    scan_directions(density.dimension, n_directions)?
        .par_iter()
        .map(|d| ray_classify(density, d, cfg))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::{bn, damped_cauchy, laplace, normal};

    #[test]
    fn laplace_threshold_and_blowup() {
        let cfg = RayConfig::default();
        let r = ray_classify(&laplace(), &[1.0], &cfg).unwrap();
        assert!((r.theta_star - 1.0).abs() < 1e-8, "{r:?}");
        assert_eq!(r.class, RayClass::Case1Blowup);
        assert_eq!(r.oracle_agrees, Some(true));
    }

    #[test]
    fn laplace_by_quadrature_only() {
        let cfg = RayConfig { force_quadrature: true, ..RayConfig::default() };
        let r = ray_classify(&laplace(), &[-1.0], &cfg).unwrap();
        assert!((r.theta_star - 1.0).abs() < 1e-8, "{r:?}");
        assert_eq!(r.class, RayClass::Case1Blowup);
    }

    #[test]
    fn damped_cauchy_finite_boundary() {
        let cfg = RayConfig::default();
        let r = ray_classify(&damped_cauchy(), &[1.0], &cfg).unwrap();
        assert!((r.theta_star - 1.0).abs() < 1e-8, "{r:?}");
        assert_eq!(r.class, RayClass::Case2FiniteBoundary, "{r:?}");
        let v = r.boundary_value.log_magnitude();
        assert!((v - (-0.466789080704537101)).abs() < 1e-3, "{v}");
    }

    #[test]
    fn normal_ray_is_unbounded() {
        let r = ray_classify(&normal(), &[1.0], &RayConfig::default()).unwrap();
        assert_eq!(r.class, RayClass::EntireRay);
        assert!(r.theta_star.is_infinite());
    }

    #[test]
    fn bn_vertical_ray_hits_the_good_boundary_point() {
        let cfg = RayConfig::default();
        let r = ray_classify(&bn(), &[0.0, 1.0], &cfg).unwrap();
        assert!((r.theta_star - 1.0).abs() < 1e-8, "{r:?}");
        assert_eq!(r.class, RayClass::Case2FiniteBoundary, "{r:?}");
        let v = r.boundary_value.log_magnitude();
        assert!((v - crate::measures::LOG_EPI).abs() < 1e-3, "{v}");
    }

    #[test]
    fn bn_oblique_ray_blows_up() {
        let cfg = RayConfig::default();
        let d = [1.0, 1.0];
        let r = ray_classify(&bn(), &d, &cfg).unwrap();
        // threshold where u2 = θ/√2 reaches 1
        assert!((r.theta_star - std::f64::consts::SQRT_2).abs() < 1e-7, "{r:?}");
        assert_eq!(r.class, RayClass::Case1Blowup, "{r:?}");
    }

    #[test]
    fn scan_directions_shape() {
        let ds = scan_directions(2, 8).unwrap();
        assert_eq!(ds.len(), 8);
        assert!((ds[2][0]).abs() < 1e-12 && (ds[2][1] - 1.0).abs() < 1e-12);
        assert_eq!(scan_directions(1, 10).unwrap().len(), 2);
        assert!(scan_directions(4, 4).is_err());
    }
}
