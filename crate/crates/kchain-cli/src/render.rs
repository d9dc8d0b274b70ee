//! Shared output helpers: display rounding, CSV cells, JSON values.

use kchain_core::chain_graphs::ChainSpec;
use kchain_core::exact_linalg::{decimal_string, rational_string};
use kchain_core::Rational;
use serde_json::{json, Value};

/// Two-decimal display string, rounding half up (matches the reference
/// tables: 50/3 renders as 16.67).
pub fn display(r: &Rational) -> String {
    decimal_string(r, 2)
}

/// JSON form of a rational: exact `p/q` string plus its two-decimal
/// display string.
pub fn rational_json(r: &Rational) -> Value {
    json!({ "exact": rational_string(r), "display": display(r) })
}

/// JSON form of a chain spec: `{"n": ..., "deleted": [...]}` with the
/// deletion set sorted.
pub fn spec_json(spec: &ChainSpec) -> Value {
    json!({ "n": spec.n(), "deleted": spec.deleted() })
}

/// Deletion set as a brace-wrapped list for text output: `{}`, `{1,3}`.
pub fn deleted_braces(spec: &ChainSpec) -> String {
    let items: Vec<String> = spec.deleted().iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// Deletion set as a space-joined CSV cell (empty for the full chain).
pub fn deleted_csv(spec: &ChainSpec) -> String {
    let items: Vec<String> = spec.deleted().iter().map(|i| i.to_string()).collect();
    items.join(" ")
}
