//! Multigraph walks and their reconfiguration by shifts.
//!
//! The crate models finite undirected multigraphs with loops and parallel
//! edges, classifies walks into five kinds (walk, trail, path, induced
//! path, isometric path), decides closability and avoidability for each
//! kind, and implements constructive procedures that shift a walk to an
//! avoidable one where such procedures exist. Families of graphs on which
//! no avoidable trail or isometric path of a given length exists are
//! generated and checked exhaustively.

pub mod avoid;
pub mod corpus;
mod error;
pub mod families;
pub mod graph;
pub mod report;
pub mod shift;
pub mod walk;

pub use avoid::{
    extensions, is_avoidable, is_closable, is_simplicial, isometric_cycles, Budget, Extension,
    Mode,
};
pub use error::Error;
pub use graph::{DfsTree, EdgeId, MultiGraph, VertexId};
pub use report::VerificationReport;
pub use shift::{
    check_hr, is_shift_pair, path_shifting_dfs, path_shifting_via_line_graph, refined_shifting,
    shift_reachable, shifting_induced, shifts_of, verify_shift_sequence, walk_shifting,
    ShiftSequence, ShiftStats,
};
pub use walk::{classify, enumerate_walks, CanonicalWalk, Walk, WalkKind};
