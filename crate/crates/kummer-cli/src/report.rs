//! Deterministic run reports.
//!
//! Every verdict-producing subcommand emits a [`Report`] in one of two
//! renderings: canonical JSON (sorted keys, compact, one trailing newline)
//! or a plain-text listing of the same fields. Two runs on the same input
//! produce byte-identical output except for the `timing_ms` field.

use clap::ValueEnum;
use kummer_core::{StandardCertificate, SymTuple, ZeroSumWitness};
use serde_json::{json, Map, Value};

/// Output rendering selected by `--format`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Canonical JSON: sorted keys, compact separators, trailing newline.
    Json,
    /// Sorted `key: value` lines.
    Text,
}

/// Evidence attached to a negative verdict.
#[derive(Debug, Clone)]
pub enum Witness {
    /// A minimal zero-sum over the input exponent vectors.
    ZeroSum(ZeroSumWitness),
    /// A symmetrization tuple violating a symbolic criterion.
    Tuple(SymTuple),
}

/// The outcome of one subcommand run.
///
/// Optional fields appear in the output only when set, so the key set
/// itself is part of the verdict.
#[derive(Debug, Clone)]
pub struct Report {
    pub p: u32,
    pub command: &'static str,
    pub verdict: String,
    pub witness: Option<Witness>,
    pub certificate: Option<StandardCertificate>,
    pub dimension: Option<usize>,
    pub timing_ms: u128,
}

impl Report {
    /// A report with no witness, certificate, or dimension attached.
    pub fn new(p: u32, command: &'static str, verdict: impl Into<String>) -> Self {
        Report {
            p,
            command,
            verdict: verdict.into(),
            witness: None,
            certificate: None,
            dimension: None,
            timing_ms: 0,
        }
    }

    fn to_value(&self) -> Value {
        let mut map = Map::new();
        map.insert("command".into(), json!(self.command));
        map.insert("p".into(), json!(self.p));
        map.insert("timing_ms".into(), json!(self.timing_ms as u64));
        map.insert("tool_version".into(), json!(env!("CARGO_PKG_VERSION")));
        map.insert("verdict".into(), json!(self.verdict));
        if let Some(witness) = &self.witness {
            map.insert("witness".into(), witness_value(witness));
        }
        if let Some(certificate) = &self.certificate {
            map.insert("certificate".into(), certificate_value(certificate));
        }
        if let Some(dimension) = self.dimension {
            map.insert("dimension".into(), json!(dimension));
        }
        Value::Object(map)
    }

    /// Renders the report in the requested format, ending with a newline.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut out = serde_json::to_string(&self.to_value())
                    .expect("report serialization cannot fail");
                out.push('\n');
                out
            }
            Format::Text => {
                let mut lines: Vec<String> = match &self.to_value() {
                    Value::Object(map) => map
                        .iter()
                        .map(|(key, value)| format!("{key}: {}", text_value(value)))
                        .collect(),
                    _ => unreachable!("report value is always an object"),
                };
                lines.push(String::new());
                lines.join("\n")
            }
        }
    }
}

/// Renders a JSON value on one line for the text format.
fn text_value(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn witness_value(witness: &Witness) -> Value {
    match witness {
        Witness::ZeroSum(zero_sum) => {
            let multiplicities: Vec<Value> = zero_sum
                .multiplicities()
                .iter()
                .map(|(vector, multiplicity)| {
                    json!({
                        "multiplicity": multiplicity,
                        "vector": [vector.a(), vector.b()],
                    })
                })
                .collect();
            json!({
                "kind": "zero_sum",
                "multiplicities": multiplicities,
                "weight": zero_sum.weight(),
            })
        }
        Witness::Tuple(tuple) => json!({
            "counts": tuple.counts(),
            "kind": "sym_tuple",
        }),
    }
}

fn certificate_value(certificate: &StandardCertificate) -> Value {
    json!({
        "k": certificate.k(),
        "u": [certificate.u().a(), certificate.u().b()],
    })
}
