use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: i64, strands: usize },

    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),

    #[error("parity violation: n = {n} and J = {j} must have the same parity")]
    Parity { n: u32, j: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("exponent overflow in Laurent arithmetic")]
    ExponentOverflow,

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("band step inapplicable: det L = 0")]
    ZeroDeterminant,

    #[error("band step: i*det L'/det L is not real")]
    NonRealRatio,

    #[error("p = {p} and q = {q} are not coprime")]
    NotCoprime { p: i64, q: i64 },

    #[error("no vertex with id {0}")]
    NoVertex(usize),

    #[error("vertex {0} is not an arrowhead")]
    NotArrowhead(usize),

    #[error("malformed splice diagram: {0}")]
    Diagram(String),

    #[error("EN formula inapplicable: leaf {0} has m = 0; use the multivariable potential")]
    EnInapplicable(usize),

    #[error("inconsistent skein-system data: {0}")]
    Inconsistent(String),

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
