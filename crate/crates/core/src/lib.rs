//! Finite groups, their power graphs, and exact rainbow connection numbers.
//!
//! The crate builds small finite groups from constructor expressions,
//! assembles their power graphs, produces certified rainbow edge colorings
//! through a family of constructive rules, decides rc <= k exactly by
//! backtracking search, and verifies the resulting classification over a
//! catalog of groups.

pub mod arith;
pub mod coloring;
pub mod constructions;
pub mod group;
pub mod power_graph;
pub mod solver;
pub mod verifier;

pub use coloring::{ColoringDocument, EdgeColoring, RainbowCertificate, RainbowCheck};
pub use group::{Group, GroupError, GroupSpec};
pub use power_graph::PowerGraph;
pub use solver::{rc_decide, rc_exact, rc_lower_bound, Budget, RcReport, RcStatus};
pub use verifier::{verify_catalog, Catalog, VerificationReport, Verdict};
