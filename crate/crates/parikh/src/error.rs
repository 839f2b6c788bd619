use thiserror::Error;

/// Errors produced by mappings, searches and parsers in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("basis dimension must be at least 1")]
    InvalidBasis,
    #[error("letter '{letter}' is not in the explicit alphabet")]
    InvalidLetter { letter: char },
    #[error("alphabet letter '{letter}' appears more than once")]
    DuplicateLetter { letter: char },
    #[error("expected {expected} components, found {found}")]
    ComponentCount { expected: usize, found: usize },
    #[error("count {count} of letter '{letter}' lies outside the basis 0..{basis}")]
    OutOfRangeCount { letter: char, count: usize, basis: usize },
    #[error("component {value} at index {index} lies outside the basis 0..{basis}")]
    OutOfRangeComponent { index: usize, value: usize, basis: usize },
    #[error("bases differ: {left} vs {right}")]
    BasisMismatch { left: usize, right: usize },
    #[error("closed-form attractor is undefined for n={basis}, k={order}")]
    FormulaDomain { basis: usize, order: usize },
    #[error("vector is not a member of a two-cycle")]
    NotInTwoCycle,
    #[error("no preimage: component sum {plain_sum} differs from dimension {basis}")]
    NoPreimage { plain_sum: usize, basis: usize },
    #[error("no attractor of order {order} in basis {basis}")]
    NoAttractor { basis: usize, order: usize },
    #[error("no cycle found within {limit} steps")]
    StepLimitExceeded { limit: usize },
    #[error("backward search exceeded depth cap {cap}")]
    DepthCapExceeded { cap: usize },
    #[error("symbolic vector not representable: {reason}")]
    Unrepresentable { reason: String },
    #[error("cannot parse vector from {input:?}: {reason}")]
    VectorParse { input: String, reason: &'static str },
    #[error("value overflow in {context}")]
    Overflow { context: &'static str },
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
