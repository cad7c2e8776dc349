use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseScalarError {
    #[error("malformed rational {0:?}")]
    Syntax(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        found: usize,
    },
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("images of source and target do not commute ({witnesses} failing pairs)")]
    NonCommutingImages { witnesses: usize },
    #[error("normal form section does not exist: {0}")]
    NormalFormFailure(String),
    #[error("antipode is not invertible")]
    AntipodeNotInvertible,
    #[error("maps are not mutually inverse: {0}")]
    NotMutuallyInverse(String),
    #[error("hypothesis {0} does not hold")]
    InvalidHypothesis(String),
    #[error("postcondition {0} failed")]
    PostconditionFailed(String),
}

impl Error {
    pub fn dims(context: impl Into<String>, expected: usize, found: usize) -> Self {
        Error::DimensionMismatch {
            context: context.into(),
            expected,
            found,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
