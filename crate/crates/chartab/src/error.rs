use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("bad cyclotomic literal: {0}")]
    Literal(String),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("invalid table: {0}")]
    Invalid(String),
    #[error("orthogonality fails for {kind} {a} and {b}")]
    Orthogonality { kind: &'static str, a: String, b: String },
    #[error("no class labelled {0:?}")]
    NoSuchClass(String),
    #[error("class multiplication coefficient is not a non-negative integer: {0}")]
    DataIntegrity(String),
    #[error("{0}")]
    Precondition(String),
    #[error("class of {size} elements exceeds the bound {bound}")]
    TooLarge { size: usize, bound: usize },
}
