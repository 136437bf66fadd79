//! Finite group engine plus a graph-class recognition suite for the
//! prime-order element graph: the graph on the elements of a finite group
//! in which x and y are adjacent exactly when x*y has prime order.
//!
//! The crate has four layers:
//!
//! * [`group`] — group construction from a small constructor grammar
//!   (`C:12`, `D:8`, `Q:16`, `S:5`, `PSL:2:7`, `SD:7:3:2`, products, ...)
//!   and group-theoretic queries (orders, exponent, closures, Sylow
//!   subgroups).
//! * [`graph`] — the prime-order element graph itself, complements,
//!   induced subgraphs, DOT and JSON export.
//! * [`classes`] — recognizers for perfect, cograph, chordal, interval,
//!   split, threshold and claw-free graphs, each returning a validated
//!   forbidden-subgraph witness on failure, plus brute-force oracles for
//!   cross-validation.
//! * [`verify`] — executable checks for the classification theorems these
//!   graphs satisfy, aggregated into a machine-readable report.

pub mod bitset;
pub mod classes;
pub mod error;
pub mod graph;
pub mod group;
pub mod numutil;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{build_gamma, UGraph};
pub use group::{
    center, has_d4_subgroup, has_z8_subgroup, is_eppo, is_nilpotent, s_product_condition,
    sylow_subgroup, ElementTable, Group, GroupExpr, GroupSpec,
};
