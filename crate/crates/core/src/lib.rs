//! Rainbow paths in edge-colored graphs.
//!
//! An edge-colored graph assigns every edge a color; a path or cycle is
//! *rainbow* when no color repeats along it. Writing `k` for the minimum
//! color degree (the smallest number of distinct colors incident to any
//! vertex), this crate is built around the guarantee that every such graph
//! contains a rainbow path on at least ceil(3k/5) edges.
//!
//! The crate provides:
//!
//! - [`graph`]: the validated [`graph::EdgeColoredGraph`] representation,
//! - [`rainbow`]: rainbow path/cycle witnesses and checkers,
//! - [`bounds`]: the bound arithmetic and per-instance [`bounds::BoundReport`],
//! - [`oracle`]: exact maximum rainbow path search at desk scale,
//! - [`constructive`]: the greedy/rotation/escape machinery that realizes
//!   the guarantee and produces auditable certificates when it stalls,
//! - [`generators`]: seeded random and structured instance families,
//! - [`ecg`] and [`dot`]: text serialization and Graphviz export.
//!
//! Everything is deterministic: the same inputs and seeds produce the same
//! graphs, witnesses, and reports on every run.

pub mod bounds;
pub mod constructive;
pub mod dot;
pub mod ecg;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod rainbow;
pub mod rng;

pub use bounds::{bounds, BoundReport};
pub use graph::{Edge, EdgeColoredGraph, GraphError};
pub use rainbow::{check_rainbow_cycle, check_rainbow_path, RainbowCycle, RainbowPath, RainbowViolation};
