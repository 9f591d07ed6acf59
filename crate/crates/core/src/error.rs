use thiserror::Error;

/// Errors produced by validating constructors, counting operations and
/// enumerators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter lies outside an operation's domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Structurally malformed input: wrong length, out-of-range value,
    /// non-bijective relabeling, broken padding, and the like.
    #[error("malformed input: {0}")]
    Malformed(String),

    /// A semantic automaton invariant is violated (self-loop, transient
    /// cycle, edge into the source).
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),

    /// The automaton is valid but has more than one source.
    #[error("not single-source: {0}")]
    NotSingleSource(String),

    /// The automaton is valid and single-source but not the canonical
    /// representative of its relabeling class.
    #[error("not canonical: {0}")]
    NotCanonical(String),

    /// An enumeration would scan more candidates than the configured budget.
    #[error("enumeration budget exceeded: {candidates} candidates, budget {budget}")]
    BudgetExceeded { candidates: String, budget: u64 },

    /// An internal consistency check failed; this indicates a bug, not bad
    /// input.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
