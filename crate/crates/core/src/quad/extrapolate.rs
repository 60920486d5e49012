//! Aitken Δ² acceleration for sequence limits in log scale.
//!
//! Used to estimate `lim G(c(t))` along a curve from finitely many samples.
//! The input series is `(t_j, log G(c(t_j)))` with `t_j ↑ 1`; the limit is
//! reported in log scale. Divergence is detected three ways: divergent input
//! entries at the tail, values pushing past the log cap while growing, and a
//! monotone tail whose increments refuse to decay (logarithmically divergent
//! sequences never cross any fixed cap, but their increments give them away).

use crate::logval::LogValue;

#[derive(Debug, Clone)]
pub struct ExtrapolateConfig {
    /// Agreement tolerance for the last three accelerated values.
    pub agree_tol: f64,
    /// Log-scale cap: monotone growth beyond this is treated as divergence.
    pub log_cap: f64,
}

impl Default for ExtrapolateConfig {
    fn default() -> Self {
        ExtrapolateConfig { agree_tol: 1e-5, log_cap: 700.0 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LimitEstimate {
    pub limit: LogValue,
    /// Spread of the last three accelerated values (log scale).
    pub window: f64,
    pub converged: bool,
}

fn aitken_sweep(xs: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(xs.len().saturating_sub(2));
    for w in xs.windows(3) {
        let (x0, x1, x2) = (w[0], w[1], w[2]);
        let denom = x2 - 2.0 * x1 + x0;
        let num = x2 - x1;
        if denom.abs() <= 1e-300 + 1e-12 * num.abs() {
            out.push(x2);
        } else {
            out.push(x2 - num * num / denom);
        }
    }
    out
}

/// Whether a monotone increasing tail shows no sign of converging.
fn increments_refuse_to_decay(xs: &[f64]) -> bool {
    if xs.len() < 6 {
        return false;
    }
    let tail = &xs[xs.len() - 6..];
    let incs: Vec<f64> = tail.windows(2).map(|w| w[1] - w[0]).collect();
    if !incs.iter().all(|&d| d > 0.0) {
        return false;
    }
    let first = incs[0];
    let last = incs[incs.len() - 1];
    // geometric convergence would shrink increments by ~(ratio)^5 here
    last > 0.5 * first && last > 1e-8
}

/// Estimate the limit of a series `(t_j, value_j)` with `t_j` strictly
/// increasing toward 1 and values in log scale.
///
/// Requires at least 6 samples. Divergent entries in the tail of the series,
/// growth beyond the log cap, and non-decaying monotone increments all yield
/// a `Divergent` limit.
pub fn limit_extrapolate(series: &[(f64, LogValue)], cfg: &ExtrapolateConfig) -> LimitEstimate {
    assert!(series.len() >= 6, "need at least 6 samples to extrapolate");
    debug_assert!(
        series.windows(2).all(|w| w[0].0 < w[1].0),
        "sample parameters must be strictly increasing"
    );

    if series.iter().rev().take(2).any(|(_, v)| v.is_divergent()) {
        return LimitEstimate { limit: LogValue::Divergent, window: f64::INFINITY, converged: true };
    }
    let xs: Vec<f64> = series
        .iter()
        .filter_map(|(_, v)| v.finite_log())
        .filter(|x| x.is_finite() || *x == f64::NEG_INFINITY)
        .collect();
    if xs.len() < 6 {
        return LimitEstimate { limit: LogValue::Divergent, window: f64::INFINITY, converged: false };
    }

    let last = xs[xs.len() - 1];
    let monotone_tail = xs.windows(2).rev().take(4).all(|w| w[1] > w[0]);
    if last > cfg.log_cap && monotone_tail {
        return LimitEstimate { limit: LogValue::Divergent, window: f64::INFINITY, converged: true };
    }
    if increments_refuse_to_decay(&xs) {
        return LimitEstimate { limit: LogValue::Divergent, window: f64::INFINITY, converged: true };
    }

    let mut acc = xs.clone();
    for _ in 0..3 {
        if acc.len() < 5 {
            break;
        }
        let next = aitken_sweep(&acc);
        if next.iter().any(|x| !x.is_finite()) {
            break;
        }
        acc = next;
    }

    let n = acc.len();
    let tail3 = &acc[n.saturating_sub(3)..];
    let lo = tail3.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = tail3.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let window = hi - lo;
    let limit = *acc.last().unwrap();
    LimitEstimate {
        limit: LogValue::from_log(limit),
        window,
        converged: window <= cfg.agree_tol,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series_of(vals: &[f64]) -> Vec<(f64, LogValue)> {
        vals.iter()
            .enumerate()
            .map(|(j, &v)| (1.0 - (2f64).powi(-(j as i32 + 2)), LogValue::from_log(v)))
            .collect()
    }

    #[test]
    fn constant_sequence() {
        let s = series_of(&[5.0f64.ln(); 10]);
        let e = limit_extrapolate(&s, &ExtrapolateConfig::default());
        assert!(e.converged);
        assert!((e.limit.log_magnitude() - 5.0f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn geometric_convergence() {
        let s: Vec<f64> = (0..14).map(|j| (5.0 + (2f64).powi(-j)).ln()).collect();
        let e = limit_extrapolate(&series_of(&s), &ExtrapolateConfig::default());
        assert!(e.converged, "{e:?}");
        assert!((e.limit.log_magnitude() - 5.0f64.ln()).abs() < 1e-9, "{e:?}");
    }

    #[test]
    fn growth_past_cap_is_divergent() {
        let s: Vec<f64> = (0..12).map(|j| 100.0 * (j as f64 + 1.0)).collect();
        let e = limit_extrapolate(&series_of(&s), &ExtrapolateConfig::default());
        assert!(e.limit.is_divergent());
    }

    #[test]
    fn slow_log_divergence_detected() {
        // constant increments, never crossing the cap
        let s: Vec<f64> = (0..12).map(|j| 2.0 + 0.7 * j as f64).collect();
        let e = limit_extrapolate(&series_of(&s), &ExtrapolateConfig::default());
        assert!(e.limit.is_divergent(), "{e:?}");
    }

    #[test]
    fn divergent_tail_entries() {
        let mut s = series_of(&[1.0; 9]);
        s.push((0.9999, LogValue::Divergent));
        let e = limit_extrapolate(&s, &ExtrapolateConfig::default());
        assert!(e.limit.is_divergent());
    }

    #[test]
    fn monotone_geometric_is_not_flagged_divergent() {
        // increasing, increments decay by 1/sqrt(2): converges
        let r = 0.5f64.sqrt();
        let s: Vec<f64> = (0..20).map(|j| 2.1447 - 1.1 * r.powi(j)).collect();
        let e = limit_extrapolate(&series_of(&s), &ExtrapolateConfig::default());
        assert!(!e.limit.is_divergent());
        assert!((e.limit.log_magnitude() - 2.1447).abs() < 1e-6, "{e:?}");
    }
}
