//! Graphs 12-representable by words avoiding a pattern.
//!
//! A word `w` over `{1..n}` 12-represents a labeled graph `G` when, for every
//! `i < j`, `ij` is an edge exactly when every copy of `j` comes before every
//! copy of `i` in `w`. This crate decides, for small graphs and a chosen set of
//! forbidden patterns, whether such a word exists, builds one when it does, and
//! otherwise returns a forbidden ordered subgraph as evidence.

pub mod constructors;
pub mod error;
pub mod format;
pub mod geometry;
pub mod graph;
pub mod oracle;
pub mod parallel;
pub mod patterns;
pub mod word;

pub use constructors::{represent, Avoidance, Certificate, Method};
pub use error::{Error, Result, Side};
pub use graph::LabeledGraph;
pub use oracle::{SearchBudget, SearchOutcome};
pub use parallel::Jobs;
pub use patterns::{OrderedPattern, PatternWitness};
pub use word::{Pattern, Word};
