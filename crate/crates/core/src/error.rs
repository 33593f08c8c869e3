use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error in entry {entry}: {msg}")]
    Parse { entry: usize, msg: String },
    #[error("vertex {0} has degree {1}, expected 3")]
    NonCubic(u64, usize),
    #[error("adjacency is not symmetric: {0} lists {1} but not conversely")]
    Asymmetric(u64, u64),
    #[error("duplicate entry for vertex {0}")]
    DuplicateVertex(u64),
    #[error("unknown vertex {0}")]
    UnknownVertex(u64),
    #[error("unknown edge index {0}")]
    UnknownEdge(usize),
    #[error("loop at vertex {0}")]
    SelfLoop(u64),
    #[error("parallel edge between {0} and {1}")]
    ParallelEdge(u64, u64),
    #[error("graph has {0} vertices, limit is {1}")]
    TooLarge(usize, usize),
    #[error("invalid graph6 data: {0}")]
    Graph6(String),
    #[error("deleted edge {0} is incident with a deleted vertex")]
    DeletionOverlap(usize),
    #[error("semiedge position {0} out of range")]
    UnknownSemiedge(usize),
    #[error("connector sizes {0} and {1} are incompatible")]
    ConnectorMismatch(usize, usize),
    #[error("multipoles have {0} and {1} semiedges, junction needs equal counts")]
    SemiedgeCountMismatch(usize, usize),
    #[error("invalid permutation: {0}")]
    BadPermutation(String),
    #[error("connector groups do not partition the semiedges: {0}")]
    BadConnectors(String),
    #[error("multipole is not a cubic graph: {0}")]
    NotAGraph(String),
    #[error("invalid multipole text: {0}")]
    MultipoleText(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has a bridge, {0}")]
    Bridged(String),
    #[error("{0} is only supported up to {1} vertices")]
    SizeCap(&'static str, usize),
    #[error("dataset index {0} out of range 1..=31")]
    DatasetIndex(usize),
    #[error("invalid dataset table: {0}")]
    DatasetTable(String),
    #[error("invalid operation: {0}")]
    Invalid(String),
}
