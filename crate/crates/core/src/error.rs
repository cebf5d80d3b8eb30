use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {n} outside supported range 1..=64")]
    Capacity { n: usize },
    #[error("loop at vertex {0} is not allowed in a simple graph")]
    SelfLoop(usize),
    #[error("vertex {v} out of range for graph of order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("removing every vertex leaves an empty graph")]
    EmptyResult,
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("graph of order {n} exceeds the canonical-form limit of {limit}")]
    CanonTooLarge { n: usize, limit: usize },
    #[error("graph is disconnected; {0} is undefined")]
    Disconnected(&'static str),
    #[error("vertex {0} is isolated; total domination is undefined")]
    IsolatedVertex(usize),
    #[error("{what}: size {actual} exceeds budget {limit}")]
    Budget {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("{family}: {rule}")]
    FamilyParams { family: &'static str, rule: String },
    #[error("family spec `{0}` does not parse (expected family:p1,p2,...)")]
    FamilySyntax(String),
    #[error("vertex set is not independent")]
    NotIndependent,
}
