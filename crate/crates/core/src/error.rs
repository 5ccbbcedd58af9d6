use alloc::string::String;
use num_bigint::BigUint;

use crate::graph::Vertex;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range 1..={order}")]
    VertexOutOfRange { vertex: u64, order: u64 },
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(Vertex, Vertex),
    #[error("alpha must be a finite nonzero real: R_alpha is only defined for alpha != 0 (got {0})")]
    InvalidAlpha(f64),
    #[error("exact mode needs a positive integer exponent (got {0})")]
    InvalidExactExponent(f64),
    #[error("vertex {0} is isolated and alpha <= 0, so d(v)^alpha is undefined")]
    IsolatedVertex(Vertex),
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("base graph must have order n >= 2 and at least one edge (got n = {order}, m = {size})")]
    DegenerateBase { order: usize, size: usize },
    #[error("base graph must be connected")]
    Disconnected,
    #[error("t must be at least {min} (got {t})")]
    LevelTooSmall { t: u32, min: u32 },
    #[error("vertex budget exceeded: {required} vertices needed, budget is {budget}; use the closed form instead")]
    BudgetExceeded { required: BigUint, budget: u64 },
    #[error("invalid parameters for {family}: {reason}")]
    FamilyParameter { family: &'static str, reason: String },
    #[error("formula does not apply: {0}")]
    NotApplicable(String),
    #[error("base graph contains a triangle; the bounds need a triangle-free base")]
    HasTriangle,
    #[error("census invariant violated: {0}")]
    CensusInvariant(String),
}
