use thiserror::Error;

use crate::redblue::{ConditionReport, SolveTrace};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("malformed JSON input: {0}")]
    Json(#[from] serde_json::Error),

    #[error(
        "{what} has size {size}, above the cap of {cap}; \
         use one of the constructive solvers instead of the brute-force oracle"
    )]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("{what}: budget of {budget} exceeded")]
    BudgetExceeded { what: &'static str, budget: u64 },

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("red/blue conditions violated ({} violation(s))", .0.violations.len())]
    ConditionsViolated(Box<ConditionReport>),

    #[error("solver exhausted its budget of {budget} iterations")]
    SolverBudget { budget: u64, trace: Box<SolveTrace> },

    #[error("odd directed cycle {cycle:?} satisfies none of the chord rules")]
    ChordConditionFails { cycle: Vec<usize> },

    #[error("semi-kernel strategy failed on the induced subdigraph {subdigraph:?}: {reason}")]
    StrategyFailed { subdigraph: Vec<usize>, reason: String },

    #[error("internal invariant broken: {0}")]
    Invariant(String),

    #[error("checkpoint: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
