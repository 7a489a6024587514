use thiserror::Error;

use crate::graph::{EdgeId, VertexId};
use crate::walk::WalkKind;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("vertex id {0} already in use")]
    DuplicateVertex(VertexId),
    #[error("edge id {0} already in use")]
    DuplicateEdge(EdgeId),
    #[error("edge {edge} is not incident to vertex {vertex}")]
    NotIncident { edge: EdgeId, vertex: VertexId },
    #[error("edge {0} is a loop; loop contraction is undefined")]
    LoopContraction(EdgeId),
    #[error("edge {0} has an endpoint outside the subgraph's vertex set")]
    NotASubgraph(EdgeId),
    #[error("product factors must be simple and loop-free (offending edge {0})")]
    MultigraphFactor(EdgeId),
    #[error("walk step {index}: edge {edge} does not join {from} and {to}")]
    Incidence {
        index: usize,
        edge: EdgeId,
        from: VertexId,
        to: VertexId,
    },
    #[error("walk is not a {0} walk")]
    NotOfKind(WalkKind),
    #[error("walk is not a path")]
    NotAPath,
    #[error("walk is not an induced path")]
    NotInduced,
    #[error("walk too short: need at least {need} vertices, got {got}")]
    TooShort { need: usize, got: usize },
    #[error("walks lie in different connected components")]
    DifferentComponents,
    #[error("{context}: budget of {limit} exhausted")]
    BudgetExceeded { context: String, limit: u64 },
    #[error("{0}")]
    InvalidParameter(String),
}

impl Error {
    pub fn budget(context: impl Into<String>, limit: u64) -> Self {
        Error::BudgetExceeded {
            context: context.into(),
            limit,
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
