use std::fmt;

use crate::coxeter::CoxeterType;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid Coxeter type: {0}")]
    InvalidType(String),
    #[error("unknown token {0:?}")]
    UnknownToken(String),
    #[error("generator {gen} out of range for {ty}")]
    GeneratorOutOfRange { gen: usize, ty: CoxeterType },
    #[error("type mismatch: {0} vs {1}")]
    TypeMismatch(CoxeterType, CoxeterType),
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("word is not reduced")]
    NotReduced,
    #[error("not fully commutative")]
    NotFullyCommutative,
    #[error("affine generator not in support")]
    AffineGeneratorAbsent,
    #[error("element is not full")]
    NotFull,
    #[error("no grammar match for {0}")]
    NoGrammarMatch(String),
    #[error("commutation class exceeds cap {0}")]
    ClassCapExceeded(usize),
    #[error("enumeration exceeds element cap {0}")]
    ElementCapExceeded(usize),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("malformed normal form: {0}")]
    MalformedNormalForm(String),
    #[error("letter outside the admissible sub-alphabet: {0}")]
    Inadmissible(String),
    #[error("embedding table for rank {0} has not been validated")]
    UnvalidatedTable(usize),
    #[error("embedding table line {line}: {msg}")]
    TableParse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Broad category of an error, used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    InvalidInput,
    Precondition,
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            InvalidType(_) | UnknownToken(_) | GeneratorOutOfRange { .. } | TypeMismatch(..)
            | InvalidWindow(_) | OutOfRange(_) | MalformedNormalForm(_) | Inadmissible(_)
            | TableParse { .. } | Json(_) => ErrorKind::InvalidInput,
            NotReduced | NotFullyCommutative | AffineGeneratorAbsent | NotFull
            | UnvalidatedTable(_) => ErrorKind::Precondition,
            NoGrammarMatch(_) | ClassCapExceeded(_) | ElementCapExceeded(_) | Io(_) => {
                ErrorKind::Internal
            }
        }
    }
}

impl fmt::Display for ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ErrorKind::InvalidInput => "invalid input",
            ErrorKind::Precondition => "domain precondition",
            ErrorKind::Internal => "internal",
        };
        f.write_str(s)
    }
}
