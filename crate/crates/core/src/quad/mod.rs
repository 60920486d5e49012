//! Deterministic adaptive quadrature over unbounded domains, in log scale.
//!
//! The engine integrates `∫ e^{f(x)} dx` for a log-scale integrand `f`,
//! growing symmetric windows around a center until the tails are accounted
//! for, and refining the subinterval with the largest local error estimate.
//! All accumulation is log-sum-exp in a fixed order, so identical inputs give
//! bit-identical results.

mod extrapolate;
mod line;
mod tail;

pub use extrapolate::{limit_extrapolate, ExtrapolateConfig, LimitEstimate};
pub use line::{integrate_line, integrate_nd, integrate_plane};
pub use tail::{classify_tail, ProbeSchedule, Side, TailClass, TailKind};

use crate::logval::LogValue;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum QuadError {
    #[error("invalid quadrature config: {0}")]
    InvalidConfig(String),
}

/// Tuning knobs for [`integrate_line`] and friends.
#[derive(Debug, Clone)]
pub struct QuadConfig {
    /// Relative tolerance on the integral value.
    pub rel_tol: f64,
    /// Log of the absolute tolerance on the integral value.
    pub abs_tol_log: f64,
    /// Budget of adaptive bisections across the whole line.
    pub max_subdivisions: usize,
    /// Half-width of the first window around the center.
    pub initial_window: f64,
    /// Multiplicative window growth factor.
    pub window_growth: f64,
    /// Maximum number of window enlargements.
    pub max_windows: usize,
    /// Number of seed panels per window segment before adaptivity.
    pub initial_panels: usize,
    /// Explicit integration center (peak location hint). `None` means 0 or,
    /// with `auto_center`, a coarse search for the integrand's maximum.
    pub center: Option<f64>,
    /// Search for the integrand peak before integrating.
    pub auto_center: bool,
    /// Number of probe doublings used for tail classification.
    pub tail_probe_doublings: usize,
    /// Windows may not stop growing before the half-width reaches this value.
    /// Used by callers that know the integrand has mass away from the center.
    pub min_half_width: f64,
    /// Positions beyond this magnitude are never probed. Iterated integration
    /// sets it on its outer lines: an outer sample at position `x` is built
    /// from an inner integral whose terms reach size `x²`, so its log value
    /// carries absolute rounding noise ~`ε·x²` and becomes meaningless once
    /// that passes O(10). Direct (innermost) integrands keep `∞`.
    pub probe_horizon: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            rel_tol: 1e-10,
            abs_tol_log: -690.0,
            max_subdivisions: 2000,
            initial_window: 16.0,
            window_growth: 2.0,
            max_windows: 60,
            initial_panels: 16,
            center: None,
            auto_center: true,
            tail_probe_doublings: 20,
            min_half_width: 0.0,
            probe_horizon: f64::INFINITY,
        }
    }
}

impl QuadConfig {
    /// A cheaper configuration for the lines of nested quadrature, where the
    /// per-line cost multiplies across dimensions.
    pub fn nested() -> Self {
        QuadConfig {
            rel_tol: 1e-8,
            max_subdivisions: 400,
            initial_panels: 6,
            tail_probe_doublings: 8,
            ..QuadConfig::default()
        }
    }

    pub fn validate(&self) -> Result<(), QuadError> {
        if !(self.rel_tol > 0.0) {
            return Err(QuadError::InvalidConfig("rel_tol must be positive".into()));
        }
        if self.max_subdivisions < 1 {
            return Err(QuadError::InvalidConfig("max_subdivisions must be >= 1".into()));
        }
        if !(self.initial_window > 0.0) {
            return Err(QuadError::InvalidConfig("initial_window must be positive".into()));
        }
        if !(self.window_growth > 1.0) {
            return Err(QuadError::InvalidConfig("window_growth must exceed 1".into()));
        }
        if self.initial_panels < 2 {
            return Err(QuadError::InvalidConfig("initial_panels must be >= 2".into()));
        }
        Ok(())
    }
}

/// Outcome of a line or iterated integration.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadResult {
    pub value: LogValue,
    /// Log of the absolute error estimate.
    pub error_estimate_log: f64,
    pub converged: bool,
    pub evaluations: usize,
}

impl QuadResult {
    pub(crate) fn divergent(converged: bool, evaluations: usize) -> Self {
        QuadResult {
            value: LogValue::Divergent,
            error_estimate_log: f64::NEG_INFINITY,
            converged,
            evaluations,
        }
    }
}
