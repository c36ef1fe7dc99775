use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph needs {needed} vertices but the universe holds at most {max}")]
    Capacity { needed: usize, max: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error: {0}")]
    EdgeList(String),

    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("{what} is limited to n <= {max}, got n = {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("graph is not regular")]
    NotRegular,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("negative activity {0}")]
    NegativeActivity(String),

    #[error("target graphs differ")]
    TargetMismatch,

    #[error("rational parse error: {0}")]
    Rational(String),
}
