//! Exact graph pebbling: solvability, pebbling numbers, optimal
//! configurations, and weight-function certificates.
//!
//! A pebbling move removes two pebbles from a vertex and places one on a
//! neighbor. A configuration is t-fold r-solvable when some move sequence
//! puts t pebbles on the root r. The t-fold pebbling number of a graph is
//! the least k such that every configuration of k pebbles is t-fold
//! r-solvable for every root; the optimal pebbling number is the least
//! weight of a single configuration that reaches every root.
//!
//! Everything here is exact: searches are exhaustive (with explicit budgets
//! and honest intervals when they run out), certificate arithmetic is
//! rational, and extremal values come with replayable witnesses.

pub mod census;
pub mod certificate;
pub mod config;
pub mod domination;
pub mod error;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod io;
pub mod polymer;
pub mod report;
pub mod reproduce;
pub mod solver;
pub mod tree;

pub use config::{Configuration, MoveSequence};
pub use error::{Error, Result};
pub use graph::Graph;
pub use solver::InvariantResult;
