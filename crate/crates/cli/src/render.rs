//! Output assembly: one JSON object per invocation, CSV with a header row,
//! or human-readable text. Big integers render as decimal strings so
//! downstream consumers never overflow.

use arrange_core::exactmath::IntPolynomial;
use num::bigint::BigInt;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Coefficients in ascending power order as decimal strings.
pub fn coeff_strings(poly: &IntPolynomial) -> Vec<String> {
    poly.coeffs().iter().map(|c| c.to_string()).collect()
}

pub fn count_strings(counts: &[BigInt]) -> Vec<String> {
    counts.iter().map(|c| c.to_string()).collect()
}

/// Compact single-object line; key order is canonical (sorted), so equal
/// payloads are byte-identical.
pub fn print_json(value: &Value) {
    println!("{value}");
}

/// `samples` as JSON: `q` as a number, the count as a decimal string.
pub fn sample_values(samples: &[(u64, BigInt)]) -> Vec<Value> {
    samples
        .iter()
        .map(|(q, count)| serde_json::json!({ "q": q, "count": count.to_string() }))
        .collect()
}

pub fn csv_row(fields: &[String]) -> String {
    fields.join(",")
}
