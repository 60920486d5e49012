//! Numerical study of moment generating functions near the boundary of
//! their domain of finiteness.
//!
//! The crate provides:
//! - log-scale arithmetic ([`logval`]) and deterministic adaptive quadrature
//!   over unbounded domains ([`quad`]);
//! - a small registry of test measures centered on a bivariate density whose
//!   MGF domain is a strip plus two isolated boundary points ([`measures`]);
//! - boundary probes along rays: locating the finiteness threshold and
//!   classifying the boundary behavior ([`ray`]);
//! - curves approaching the boundary point with prescribed limit behavior,
//!   including curves whose MGF limit is any target in `(eπ, ∞]` ([`curve`]);
//! - the end-to-end verification suite ([`verify`]).

/// Engine version, embedded in CLI reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub mod curve;
pub mod logval;
pub mod measures;
pub mod quad;
pub mod ray;
pub mod verify;
