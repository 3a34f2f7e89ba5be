use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("empty edge list")]
    EmptyInput,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} closes a cycle")]
    CycleDetected(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("tree order {order} exceeds the cap of {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("vertex {vertex} out of range for a tree of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("the tree is a path")]
    IsAPath,
    #[error("vertex set does not induce a connected subtree")]
    NotConnected,
    #[error("brute-force enumeration exceeded the cap of {0} subtrees")]
    CapExceeded(u64),
    #[error("polynomial product is not divisible by x")]
    DivisibilityViolated,
    #[error("invalid family parameters: {0}")]
    InvalidSpec(String),
    #[error("infeasible limb profile: {0}")]
    InfeasibleProfile(String),
}
