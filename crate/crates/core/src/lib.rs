//! Exact and constructive (≤p)-inversion distances of oriented graphs.

pub mod bits;
pub mod bounds;
pub mod corpus;
pub mod decompose;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod plan;

pub use error::{Error, Result};
pub use graph::{
    apply_plan, disagreement, verify_plan, EdgeMask, InversionPlan, InversionSet, LabelledGraph, Orientation,
    PlanReport, Violation,
};
