use thiserror::Error;

/// Failures raised by series arithmetic, array construction and the transforms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown identifier `{name}` at position {position}")]
    UnknownIdentifier { name: String, position: usize },

    #[error("division by a series with zero constant term")]
    ZeroConstantTerm,

    #[error("divisor vanishes to order {order}; numerator cannot absorb x^{valuation}")]
    NonRemovableDivision { valuation: usize, order: usize },

    #[error("square root of a series whose leading term {term} is not a rational square")]
    NonSquareConstant { term: String },

    #[error("composition requires an inner series with zero constant term, found {term}")]
    NonZeroConstant { term: String },

    #[error("normalization violated: {what} is {found}, expected {expected}")]
    Normalization {
        what: String,
        found: String,
        expected: String,
    },

    #[error("index ({n}, {k}) outside the lower triangle of order {order}")]
    IndexOutOfRange { n: usize, k: usize, order: usize },

    #[error("value {value} at index {index} is not an integer")]
    NonIntegral { index: usize, value: String },

    #[error("need at least {needed} terms, got {got}")]
    InsufficientTerms { needed: usize, got: usize },

    #[error("no rational generating function with numerator degree <= {max_num_deg} and denominator degree <= {max_den_deg} reproduces the data")]
    NoFit {
        max_num_deg: usize,
        max_den_deg: usize,
    },

    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
