use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    InvalidEdge(usize),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },

    #[error("oracle refuses graphs on {n} vertices (limit {limit})")]
    OracleSizeExceeded { n: usize, limit: usize },

    #[error("starting partition rejected: {0}")]
    BadCertificate(String),

    #[error("binomial bound C({r}+{s}-2, {r}-1) overflows")]
    BoundTooLarge { r: u64, s: u64 },

    #[error("subset enumeration needs {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("property spec mismatch: {0}")]
    SpecMismatch(String),

    #[error("remainder vertex {0} is not adjacent to one cluster on each side")]
    UnclassifiedRemainder(usize),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("certificate coverage: {0}")]
    Coverage(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
