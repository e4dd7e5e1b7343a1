use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word has no primitive root")]
    EmptyWord,
    #[error("empty period word")]
    EmptyPeriod,
    #[error("alphabet must be non-empty")]
    EmptyAlphabet,
    #[error("duplicate symbol in alphabet")]
    DuplicateSymbol,
    #[error("period must be positive")]
    ZeroPeriod,
    #[error("words have unequal lengths ({left} and {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator `periodic` requires a period word")]
    MissingPeriod,
    #[error("period set undefined for generator words")]
    NotUltimatelyPeriodic,
    #[error("closed form undefined: periods are not conjugate")]
    NotConjugate,
    #[error("invalid word literal `{literal}`: {reason}")]
    Parse { literal: String, reason: String },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("eventual cycle not found within {0} steps")]
    CycleNotFound(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
