use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unexpected symbol {found:?} at position {position}")]
pub struct ParseWordError {
    pub position: usize,
    pub found: char,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TagError {
    #[error("word of length {len} is shorter than the deletion number {needed}")]
    WordTooShort { len: usize, needed: usize },
    #[error("run budget must be at least 1")]
    ZeroBudget,
    #[error("deletion number must be at least 1")]
    ZeroDeletion,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TokenError {
    #[error("word is not a concatenation of 00 and 1101 (stuck at position {position})")]
    NotTokenizable { position: usize },
    #[error("unexpected token {found:?} at position {position}")]
    BadToken { position: usize, found: char },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("word of length {len} is too short (need at least {needed})")]
    WordTooShort { len: usize, needed: usize },
    #[error(transparent)]
    Tag(#[from] TagError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("quadruplet cannot take a step: {0}")]
    InvariantViolated(String),
    #[error("embedded constant {name} has length {found}, expected {expected}")]
    CorruptConstant {
        name: &'static str,
        found: usize,
        expected: usize,
    },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Tag(#[from] TagError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing field {0}")]
    MissingField(String),
    #[error("unsupported certificate version {0}")]
    Version(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockError {
    #[error("unexpected symbol {found:?} at position {position}")]
    BadSymbol { position: usize, found: char },
    #[error("seed {0} is outside {{e,v,vv}}{{0,1}}{{e,w,ww}}")]
    InvalidSeed(String),
    #[error("depth must be at least 1")]
    ZeroDepth,
    #[error("invalid building block: {0}")]
    InvalidBlock(String),
    #[error("no right extension exists for this block")]
    NoExtension,
    #[error("left extension is not defined for building blocks")]
    LeftExtensionUndefined,
}
