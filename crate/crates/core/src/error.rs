use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("invalid edge {0}-{1}")]
    InvalidEdge(usize, usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("not connected")]
    NotConnected,
    #[error("oracle scale exceeded: order {order} > {limit}")]
    OracleScaleExceeded { order: usize, limit: usize },
    #[error("not a 3-polytope of radius 1")]
    NotRadiusOnePolytope,
    #[error("vertex {0} is not universal")]
    NotUniversal(usize),
    #[error("lemma precondition: G non-empty")]
    PyramidInput,
    #[error("non-outerplanar block")]
    NonOuterplanarBlock,
    #[error("invalid chord diagram: {0}")]
    InvalidDiagram(String),
    #[error("invalid degree sequence: {0}")]
    InvalidSequence(String),
    #[error("wheel order must be at least 4, got {0}")]
    WheelTooSmall(usize),
    #[error("{family}: parameter condition violated: {condition}")]
    FamilyParameters { family: String, condition: String },
    #[error("construction inconsistency: {0}")]
    Construction(String),
    #[error("graph6 decode error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("corrupt shard {}: {reason}", path.display())]
    CorruptShard { path: PathBuf, reason: String },
    #[error("unsupported shard format version {0}")]
    ShardVersion(u32),
    #[error("incomplete catalog: missing {0}")]
    IncompleteCatalog(String),
    #[error("generator discrepancy: {0}")]
    Discrepancy(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
