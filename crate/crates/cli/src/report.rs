//! Report plumbing: every command produces a [`Report`] that serializes to
//! the same schema regardless of output format, with MGF values always in
//! log scale and infinity rendered as the token `divergent`, never `inf`.

use mgf_core::logval::LogValue;
use serde::Serialize;
use serde_json::{json, Value};

/// Output format selector, shared by every subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutFormat {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Serialize)]
pub struct Versions {
    pub engine: String,
    pub cli: String,
    /// Fingerprint of the numerical configuration the command ran with.
    pub config: String,
}

/// The uniform command artifact. `results` must be deterministic for
/// identical inputs; `timings` are excluded from that contract.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub versions: Versions,
    pub timings: Value,
}

impl Report {
    pub fn new(command: &str, inputs: Value, results: Value, fingerprint: String, secs: f64) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            results,
            versions: Versions {
                engine: format!("mgf-core {}", mgf_core::VERSION),
                cli: format!("mgf-cli {}", env!("CARGO_PKG_VERSION")),
                config: fingerprint,
            },
            timings: json!({ "total_s": secs }),
        }
    }
}

/// Status token for a log value: `finite`, `zero`, or `divergent`.
pub fn status(v: &LogValue) -> &'static str {
    if v.is_divergent() {
        "divergent"
    } else if v.is_finite() {
        "finite"
    } else {
        "zero"
    }
}

/// JSON rendering of a log value: a number (the log) when finite, the token
/// strings `"zero"` / `"divergent"` otherwise.
pub fn logval_json(v: &LogValue) -> Value {
    match v.finite_log() {
        Some(x) => json!(x),
        None => json!(status(v)),
    }
}

/// Table/CSV cell for the `log_g` column: the log value when finite, empty
/// otherwise (the status column carries the token).
pub fn logval_cell(v: &LogValue) -> String {
    v.finite_log().map(|x| format!("{x}")).unwrap_or_default()
}

/// Emit a report in the chosen format. CSV output prints only the tabular
/// rows (`header` + `rows`); table and JSON print the full report.
pub fn emit(report: &Report, fmt: OutFormat, csv: Option<(&str, &[String])>) {
    match fmt {
        OutFormat::Json => {
            println!("{}", serde_json::to_string_pretty(report).expect("report serializes"));
        }
        OutFormat::Csv => match csv {
            Some((header, rows)) => {
                println!("{header}");
                for row in rows {
                    println!("{row}");
                }
            }
            None => {
                // commands without a natural table fall back to JSON payload
                println!("{}", serde_json::to_string(&report.results).expect("serializes"));
            }
        },
        OutFormat::Table => {
            println!("command: {}", report.command);
            print_value("inputs", &report.inputs, 0);
            print_value("results", &report.results, 0);
            println!("versions: {} | {} | {}", report.versions.engine, report.versions.cli, report.versions.config);
            print_value("timings", &report.timings, 0);
        }
    }
}

fn print_value(key: &str, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            println!("{pad}{key}:");
            for (k, val) in map {
                print_value(k, val, indent + 1);
            }
        }
        Value::Array(items) => {
            if items.iter().all(|i| !matches!(i, Value::Object(_) | Value::Array(_))) {
                let joined: Vec<String> = items.iter().map(scalar_to_string).collect();
                println!("{pad}{key}: [{}]", joined.join(", "));
            } else {
                println!("{pad}{key}:");
                for (i, item) in items.iter().enumerate() {
                    print_value(&format!("[{i}]"), item, indent + 1);
                }
            }
        }
        other => println!("{pad}{key}: {}", scalar_to_string(other)),
    }
}

fn scalar_to_string(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
