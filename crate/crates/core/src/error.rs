use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent user input (unknown vertex, bad family, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The supplied decomposition does not satisfy the definition it claims.
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    /// A builder parameter is out of range for the given input.
    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("input with {n} vertices exceeds the oracle budget of {cap}")]
    OverBudget { n: usize, cap: usize },

    /// An internal bound or proof obligation failed. Always a bug.
    #[error("certificate `{name}` failed: {detail}")]
    Certificate { name: &'static str, detail: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Certificate { .. } => 2,
            _ => 1,
        }
    }
}
