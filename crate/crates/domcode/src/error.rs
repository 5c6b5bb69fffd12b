use thiserror::Error;

/// Errors produced by graph construction, verification, solving and I/O.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter was outside the operation's domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A closed-form query was outside the range the formula is stated for.
    /// The message names the violated bound.
    #[error("out of domain: {0}")]
    Domain(String),

    /// The requested construction exists but no explicit code is available
    /// for these parameters.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A code was paired with a graph it does not belong to.
    #[error("graph/code mismatch: code is for `{code_graph}`, graph is `{graph}`")]
    Mismatch { code_graph: String, graph: String },

    /// The graph would exceed the fixed bitset capacity.
    #[error("graph too large: {n} vertices exceeds the cap of {cap}")]
    TooLarge { n: usize, cap: usize },

    /// Solver bound hints contradict the search outcome.
    #[error("inconsistent bound hint: {0}")]
    InconsistentHint(String),

    /// Malformed graph spec, predicate spec or input file.
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
