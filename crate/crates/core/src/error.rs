use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} values, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("variable x{var} out of range for a system on {n} variables")]
    VariableOutOfRange { var: usize, n: usize },

    #[error("variable x{0} appears twice in one equation")]
    DuplicateVariable(usize),

    #[error("equation weight must be at least 1")]
    ZeroWeight,

    #[error("total weight overflows u64")]
    WeightOverflow,

    #[error("{what} of size {size} exceeds the limit of {limit}")]
    Capacity {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("instance outside the supported class: {0}")]
    InstanceClass(String),

    #[error("internal contract violated: {0}")]
    Contract(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("invalid odd set instance: {0}")]
    InvalidOddSet(String),
}
