use crate::scalar::{ParseError, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("singular matrix: {0}")]
    SingularMatrix(String),
    #[error("degree {degree} exceeds the word-count cap ({words} words > {cap})")]
    DegreeTooLarge { degree: u32, words: u128, cap: u128 },
    #[error("rewrite system is not confluent: {0}")]
    NotConfluent(String),
    #[error("not an AST matrix: {0}")]
    NotAst(String),
    #[error("entries must be +1 or -1: {0}")]
    NotPlusMinusOne(String),
    #[error("not a normalized 2-cocycle: {0}")]
    NotACocycle(String),
    #[error("congruence witness rejected: {0}")]
    CongruenceWitnessInvalid(String),
    #[error("similarity witness rejected: {0}")]
    SimilarityWitnessInvalid(String),
    #[error("cotensor dimension has not stabilized at degree {0}")]
    NotStabilized(u32),
    #[error("no nonzero certificate for hom-algebra {0}")]
    NotConnected(String),
    #[error("input is not a Yetter-Drinfeld module: {0}")]
    NotYd(String),
    #[error("not a bimodule: {0}")]
    NotABimodule(String),
    #[error("no character available: {0}")]
    NoCharacter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
