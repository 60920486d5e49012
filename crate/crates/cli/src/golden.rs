//! The golden-value store: a versioned plain-text (TOML) file of reference
//! MGF values that `mgf verify` checks the engine against.
//!
//! Every entry records its provenance: `paper-sourced` values are exact
//! constants that must never be regenerated, `oracle-derived` values were
//! computed by an independent route and may be refreshed with
//! `--refresh-goldens --i-understand`.

use std::path::{Path, PathBuf};

use mgf_core::logval::LogValue;
use mgf_core::measures::resolve_density;
use mgf_core::quad::QuadConfig;
use serde::{Deserialize, Serialize};

pub const ENV_GOLDEN_PATH: &str = "MGF_GOLDEN_PATH";
pub const STORE_RELATIVE: &str = "goldens/goldens.toml";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GoldenEntry {
    /// Registry label of the density.
    pub density: String,
    /// Quantity selector, currently `log_mgf(u1,u2,...)`.
    pub quantity: String,
    /// Expected log value as a decimal string, or the token `divergent`.
    pub value: String,
    /// Absolute tolerance on the log value.
    pub tolerance: f64,
    /// `paper-sourced` or `oracle-derived`.
    pub provenance: String,
    #[serde(default)]
    pub note: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GoldenStore {
    pub version: u32,
    #[serde(rename = "entry", default)]
    pub entries: Vec<GoldenEntry>,
}

/// Resolve the store path: the `MGF_GOLDEN_PATH` environment variable if
/// set, otherwise `goldens/goldens.toml` searched upward from the current
/// directory (so the command works from anywhere inside the repository).
pub fn store_path() -> Result<PathBuf, String> {
    if let Ok(p) = std::env::var(ENV_GOLDEN_PATH) {
        return Ok(PathBuf::from(p));
    }
    let mut dir = std::env::current_dir().map_err(|e| format!("cannot read current dir: {e}"))?;
    loop {
        let candidate = dir.join(STORE_RELATIVE);
        if candidate.is_file() {
            return Ok(candidate);
        }
        if !dir.pop() {
            return Err(format!(
                "golden store not found: set {ENV_GOLDEN_PATH} or run inside the repository"
            ));
        }
    }
}

pub fn load(path: &Path) -> Result<GoldenStore, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read golden store {}: {e}", path.display()))?;
    toml::from_str(&text).map_err(|e| format!("malformed golden store {}: {e}", path.display()))
}

pub fn save(path: &Path, store: &GoldenStore) -> Result<(), String> {
    let text = toml::to_string_pretty(store)
        .map_err(|e| format!("cannot serialize golden store: {e}"))?;
    std::fs::write(path, text)
        .map_err(|e| format!("cannot write golden store {}: {e}", path.display()))
}

/// Parse `log_mgf(a,b,...)` into the tilt point.
fn parse_quantity(q: &str) -> Result<Vec<f64>, String> {
    let inner = q
        .strip_prefix("log_mgf(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| format!("unsupported golden quantity: {q}"))?;
    inner
        .split(',')
        .map(|s| s.trim().parse::<f64>().map_err(|e| format!("bad coordinate in {q}: {e}")))
        .collect()
}

/// Render a computed value in store syntax.
pub fn value_string(v: &LogValue) -> String {
    match v.finite_log() {
        Some(x) => format!("{x:.15e}"),
        None if v.is_divergent() => "divergent".into(),
        None => "zero".into(),
    }
}

#[derive(Debug)]
pub struct GoldenCheck {
    pub density: String,
    pub quantity: String,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

/// Evaluate one entry with the default engine configuration and compare.
pub fn check_entry(entry: &GoldenEntry) -> Result<GoldenCheck, String> {
    let computed = compute_entry(entry)?;
    let passed = match entry.value.as_str() {
        "divergent" => computed.is_divergent(),
        "zero" => !computed.is_finite() && !computed.is_divergent(),
        expected => {
            let expected: f64 = expected
                .parse()
                .map_err(|e| format!("bad golden value {:?}: {e}", entry.value))?;
            computed
                .finite_log()
                .map(|x| (x - expected).abs() <= entry.tolerance)
                .unwrap_or(false)
        }
    };
    Ok(GoldenCheck {
        density: entry.density.clone(),
        quantity: entry.quantity.clone(),
        expected: entry.value.clone(),
        computed: value_string(&computed),
        passed,
    })
}

/// Evaluate the quantity of one entry.
pub fn compute_entry(entry: &GoldenEntry) -> Result<LogValue, String> {
    let density = resolve_density(&entry.density).map_err(|e| e.to_string())?;
    let u = parse_quantity(&entry.quantity)?;
    if u.len() != density.dimension {
        return Err(format!(
            "golden entry {}:{} has {} coordinates for a {}-dimensional density",
            entry.density,
            entry.quantity,
            u.len(),
            density.dimension
        ));
    }
    Ok(density.log_mgf(&u, &QuadConfig::default()).value)
}
