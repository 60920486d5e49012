//! Log-scale arithmetic for nonnegative quantities.
//!
//! Every MGF-scale number in this crate is carried as a [`LogValue`]: the
//! natural log of its magnitude plus a tag distinguishing an exact zero and a
//! divergent (infinite) quantity. Values near the strip boundary reach
//! magnitudes like `e^1250`, so linear `f64` arithmetic is not an option.

/// A nonnegative real number stored in natural-log scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LogValue {
    /// log of a strictly positive, finite quantity.
    Finite(f64),
    /// Exactly zero.
    Zero,
    /// The represented quantity is infinite (a divergent integral).
    Divergent,
}

impl LogValue {
    /// Build from a log-magnitude; `-inf` maps to `Zero`, `+inf`/NaN to `Divergent`.
    pub fn from_log(log_magnitude: f64) -> Self {
        if log_magnitude == f64::NEG_INFINITY {
            LogValue::Zero
        } else if log_magnitude.is_finite() {
            LogValue::Finite(log_magnitude)
        } else {
            LogValue::Divergent
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, LogValue::Divergent)
    }

    pub fn is_divergent(&self) -> bool {
        matches!(self, LogValue::Divergent)
    }

    /// The log magnitude, with `Zero` reading as `-inf`. Panics on `Divergent`:
    /// a divergent value carries no magnitude consumers may read.
    pub fn log_magnitude(&self) -> f64 {
        match self {
            LogValue::Finite(l) => *l,
            LogValue::Zero => f64::NEG_INFINITY,
            LogValue::Divergent => panic!("log_magnitude of a divergent value"),
        }
    }

    /// The log magnitude as an `Option`, `None` for `Divergent`.
    pub fn finite_log(&self) -> Option<f64> {
        match self {
            LogValue::Finite(l) => Some(*l),
            LogValue::Zero => Some(f64::NEG_INFINITY),
            LogValue::Divergent => None,
        }
    }

    /// The represented linear-scale quantity. Overflows to `+inf` past ~`e^709`.
    pub fn linear(&self) -> f64 {
        match self {
            LogValue::Finite(l) => l.exp(),
            LogValue::Zero => 0.0,
            LogValue::Divergent => f64::INFINITY,
        }
    }

    /// Sum of the represented quantities.
    pub fn add(&self, other: &LogValue) -> LogValue {
        match (self, other) {
            (LogValue::Divergent, _) | (_, LogValue::Divergent) => LogValue::Divergent,
            (LogValue::Zero, x) | (x, LogValue::Zero) => *x,
            (LogValue::Finite(a), LogValue::Finite(b)) => LogValue::from_log(log_sum_exp(*a, *b)),
        }
    }

    /// Product of the represented quantities.
    pub fn mul(&self, other: &LogValue) -> LogValue {
        match (self, other) {
            (LogValue::Divergent, _) | (_, LogValue::Divergent) => LogValue::Divergent,
            (LogValue::Zero, _) | (_, LogValue::Zero) => LogValue::Zero,
            (LogValue::Finite(a), LogValue::Finite(b)) => LogValue::from_log(a + b),
        }
    }
}

/// `log(e^a + e^b)` without overflow.
pub fn log_sum_exp(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    if a >= b {
        a + (b - a).exp().ln_1p()
    } else {
        b + (a - b).exp().ln_1p()
    }
}

/// `log|e^a - e^b|`; `-inf` when the two agree exactly.
pub fn log_diff_abs(a: f64, b: f64) -> f64 {
    if a == b {
        return f64::NEG_INFINITY;
    }
    let (hi, lo) = if a > b { (a, b) } else { (b, a) };
    if lo == f64::NEG_INFINITY {
        return hi;
    }
    hi + (-(lo - hi).exp()).ln_1p()
}

/// Left-to-right log-sum accumulation over a slice. The order is part of the
/// contract: callers that need bit-identical results across runs must present
/// the terms in a fixed order.
pub fn log_sum_exp_slice(terms: &[f64]) -> f64 {
    let mut acc = f64::NEG_INFINITY;
    for &t in terms {
        acc = log_sum_exp(acc, t);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_and_product() {
        let a = LogValue::from_log(2.0_f64.ln());
        let b = LogValue::from_log(3.0_f64.ln());
        assert!((a.add(&b).log_magnitude() - 5.0_f64.ln()).abs() < 1e-14);
        assert!((a.mul(&b).log_magnitude() - 6.0_f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn zero_and_divergent_absorb() {
        let a = LogValue::from_log(1.0);
        assert_eq!(a.add(&LogValue::Zero), a);
        assert_eq!(a.mul(&LogValue::Zero), LogValue::Zero);
        assert!(a.add(&LogValue::Divergent).is_divergent());
        assert!(a.mul(&LogValue::Divergent).is_divergent());
        assert_eq!(LogValue::from_log(f64::NEG_INFINITY), LogValue::Zero);
    }

    #[test]
    fn log_sum_is_commutative_and_associative_within_tolerance() {
        let xs = [700.0, -700.0, 3.5, 0.0, 120.25, -4.0];
        let fwd = log_sum_exp_slice(&xs);
        let mut rev = xs;
        rev.reverse();
        let bwd = log_sum_exp_slice(&rev);
        assert!((fwd - bwd).abs() < 1e-12);
    }

    #[test]
    fn log_diff() {
        let d = log_diff_abs(5.0_f64.ln(), 3.0_f64.ln());
        assert!((d - 2.0_f64.ln()).abs() < 1e-14);
        assert_eq!(log_diff_abs(1.25, 1.25), f64::NEG_INFINITY);
    }

    #[test]
    #[should_panic]
    fn divergent_magnitude_panics() {
        let _ = LogValue::Divergent.log_magnitude();
    }
}
