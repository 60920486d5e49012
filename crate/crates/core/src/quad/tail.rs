//! Tail classification on a geometric probe schedule.
//!
//! The integrand's log values are sampled at `start, 2·start, 4·start, …`
//! away from the origin. Looking at per-octave differences separates the
//! three asymptotic regimes without ever leaving log scale:
//! an exponential tail loses a constant amount per unit length, so octave
//! losses double; a power tail `x^{-p}` loses a constant `p·ln 2` per octave;
//! anything gaining per octave cannot be integrable.

/// Which half-line the classification refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailKind {
    /// `e^{-rate·x}` or faster; always integrable.
    ExponentialDecay { rate: f64 },
    /// `x^{-exponent}`; integrable iff `exponent > 1`.
    PowerDecay { exponent: f64 },
    /// The integrand grows along the probe schedule.
    NonIntegrable,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailClass {
    pub kind: TailKind,
    pub side: Side,
    /// Set when the octave fit was clean. An ambiguous fit is reported as a
    /// conservative `PowerDecay` with this flag cleared, never as
    /// `NonIntegrable`.
    pub confident: bool,
}

impl TailClass {
    /// Whether a tail of this class has a finite integral.
    pub fn integrable(&self) -> bool {
        match self.kind {
            TailKind::ExponentialDecay { .. } => true,
            TailKind::PowerDecay { exponent } => exponent > 1.0,
            TailKind::NonIntegrable => false,
        }
    }
}

/// Geometric probe schedule `origin ± start·2^k`, `k = 0..=doublings`.
#[derive(Debug, Clone)]
pub struct ProbeSchedule {
    pub origin: f64,
    pub start: f64,
    pub doublings: usize,
}

impl ProbeSchedule {
    pub fn new(origin: f64, start: f64, doublings: usize) -> Self {
        ProbeSchedule { origin, start, doublings }
    }
}

const LN2: f64 = std::f64::consts::LN_2;

/// Classify one tail of a log-scale integrand.
pub fn classify_tail<F: Fn(f64) -> f64>(f: F, side: Side, schedule: &ProbeSchedule) -> TailClass {
    let sign = match side {
        Side::Right => 1.0,
        Side::Left => -1.0,
    };
    let mut probes: Vec<(f64, f64)> = Vec::with_capacity(schedule.doublings + 1);
    for k in 0..=schedule.doublings {
        let off = schedule.start * (2f64).powi(k as i32);
        let v = f(schedule.origin + sign * off);
        probes.push((off, v));
    }

    // Integrand vanishes identically far out: faster than any exponential.
    if probes.iter().rev().take(3).all(|&(_, v)| v == f64::NEG_INFINITY) {
        return TailClass {
            kind: TailKind::ExponentialDecay { rate: f64::INFINITY },
            side,
            confident: true,
        };
    }

    // Per-octave differences between consecutive finite probes.
    let mut octaves: Vec<(f64, f64)> = Vec::new(); // (offset of the left probe, diff)
    for w in probes.windows(2) {
        let (x0, v0) = w[0];
        let (_, v1) = w[1];
        if v0.is_finite() && v1.is_finite() {
            octaves.push((x0, v1 - v0));
        } else if v0.is_finite() && v1 == f64::NEG_INFINITY {
            // underflowed hard: certainly decaying here
            octaves.push((x0, -800.0));
        }
    }
    if octaves.is_empty() {
        // Nothing usable; be conservative.
        return TailClass {
            kind: TailKind::PowerDecay { exponent: 0.0 },
            side,
            confident: false,
        };
    }

    let tail: Vec<(f64, f64)> = octaves.iter().rev().take(4).rev().copied().collect();
    let diffs: Vec<f64> = tail.iter().map(|&(_, d)| d).collect();
    let all_neg = diffs.iter().all(|&d| d < 0.0);

    if all_neg && diffs.len() >= 2 {
        // Ratios of consecutive octave losses: ~2 for exponential (and ~4 for
        // Gaussian), ~1 for power decay.
        let ratios: Vec<f64> = diffs.windows(2).map(|w| w[1] / w[0]).collect();
        if ratios.iter().all(|&r| r >= 1.6) {
            let (x_last, d_last) = *tail.last().unwrap();
            let rate = -d_last / x_last; // loss over [x, 2x] divided by its length
            return TailClass {
                kind: TailKind::ExponentialDecay { rate },
                side,
                confident: true,
            };
        }
        if ratios.iter().all(|&r| (0.6..=1.4).contains(&r)) {
            let exps: Vec<f64> = diffs.iter().map(|&d| -d / LN2).collect();
            let mean = exps.iter().sum::<f64>() / exps.len() as f64;
            let spread = exps.iter().fold(0.0f64, |m, &e| m.max((e - mean).abs()));
            return TailClass {
                kind: TailKind::PowerDecay { exponent: mean },
                side,
                confident: spread < 0.05 * mean.abs().max(1.0),
            };
        }
    }

    // Clear growth: the last octaves all gain a nontrivial amount.
    if diffs.iter().all(|&d| d > 0.1) {
        return TailClass {
            kind: TailKind::NonIntegrable,
            side,
            confident: true,
        };
    }

    // Ambiguous (oscillatory, flat, or mixed-sign) fit: conservative power
    // estimate, low confidence.
    let smallest = diffs.iter().map(|&d| -d / LN2).fold(f64::INFINITY, f64::min);
    TailClass {
        kind: TailKind::PowerDecay { exponent: smallest },
        side,
        confident: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sched() -> ProbeSchedule {
        ProbeSchedule::new(0.0, 16.0, 20)
    }

    #[test]
    fn gaussian_with_drift_is_exponential() {
        // e^{x - x^2} on the right
        let c = classify_tail(|x| x - x * x, Side::Right, &sched());
        assert!(matches!(c.kind, TailKind::ExponentialDecay { rate } if rate > 0.0));
        assert!(c.confident && c.integrable());
    }

    #[test]
    fn exponential_over_cauchy_grows() {
        // e^{x}/(1+x^2) on the right: outside V whenever the drift wins
        let c = classify_tail(|x| x - (1.0 + x * x).ln(), Side::Right, &sched());
        assert_eq!(c.kind, TailKind::NonIntegrable);
        assert!(c.confident && !c.integrable());
    }

    #[test]
    fn cauchy_is_power_two() {
        let c = classify_tail(|x: f64| -(1.0 + x * x).ln(), Side::Right, &sched());
        match c.kind {
            TailKind::PowerDecay { exponent } => assert!((exponent - 2.0).abs() < 1e-3),
            k => panic!("expected power decay, got {k:?}"),
        }
        assert!(c.integrable());
    }

    #[test]
    fn flat_tail_is_nonintegrable_power() {
        // e^{x}·e^{-|x|} is constant on the right: p ≈ 0, not integrable.
        let c = classify_tail(|_| -std::f64::consts::LN_2, Side::Right, &sched());
        match c.kind {
            TailKind::PowerDecay { exponent } => assert!(exponent.abs() < 1e-12),
            k => panic!("expected power decay, got {k:?}"),
        }
        assert!(!c.integrable());
    }

    #[test]
    fn left_side_of_asymmetric_integrand() {
        // e^{2x} for x<0
        let c = classify_tail(|x| 2.0 * x, Side::Left, &sched());
        assert!(matches!(c.kind, TailKind::ExponentialDecay { .. }));
        assert!(c.integrable());
    }

    #[test]
    fn hard_underflow_counts_as_decay() {
        let c = classify_tail(
            |x: f64| if x.abs() > 100.0 { f64::NEG_INFINITY } else { 0.0 },
            Side::Right,
            &sched(),
        );
        assert!(c.integrable());
    }
}
