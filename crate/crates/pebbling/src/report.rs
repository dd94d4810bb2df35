//! Deterministic machine-readable records of solver invocations.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::graph::Graph;
use crate::io::{export_graph, Format};

/// One computed quantity inside a [`RunReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportResult {
    /// What was computed, for example `"pi"`, `"pi_t"`, or `"pi_star"`.
    pub quantity: String,
    /// The computed value.
    pub value: u64,
    /// The vertex attaining a maximum taken over roots, when applicable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root: Option<usize>,
    /// An extremal configuration backing the value.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<u32>>,
    /// True when the search provably examined every relevant configuration.
    pub exhaustive: bool,
}

/// Record of one command invocation.
///
/// Identical inputs produce byte-identical reports apart from the timing
/// field, which is therefore kept last.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    /// The command and flags, echoed in canonical order.
    pub command: String,
    /// SHA-256 of the canonical JSON serialization of the input graph.
    pub fingerprint: String,
    /// Search budget that was in effect.
    pub budget: u64,
    /// Computed quantities, in a fixed order per command.
    pub results: Vec<ReportResult>,
    /// Wall-clock milliseconds; the only nondeterministic field.
    pub elapsed_ms: u128,
}

/// Hex SHA-256 of the canonical JSON serialization of a graph.
pub fn fingerprint(g: &Graph) -> String {
    let canonical = export_graph(g, Format::Json);
    let digest = Sha256::digest(canonical.as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}
