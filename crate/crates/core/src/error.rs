use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("permutations have different degrees ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("malformed cycle notation: {0}")]
    Malformed(String),
    #[error("point {0} appears more than once")]
    Repeated(usize),
    #[error("point {point} is outside 1..={n}")]
    OutOfRange { point: usize, n: usize },
    #[error("unsupported degree {0}")]
    BadDegree(usize),
    #[error("generator set is empty")]
    NoGenerators,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unexpected character {ch:?} at offset {offset}")]
    UnexpectedChar { ch: char, offset: usize },
    #[error("unbalanced parentheses")]
    Unbalanced,
    #[error("exponent {0:?} is not a valid number")]
    BadExponent(String),
    #[error("negative repetition count {0}")]
    NegativeCount(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("expected {expected} comma-separated cells, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("bad cell token {0:?}")]
    BadToken(String),
    #[error("piece {0} appears more than once")]
    DuplicatePiece(String),
    #[error("configuration is not reachable from the solved state")]
    Unreachable,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("no setup word found within {0} moves")]
    SetupNotFound(usize),
    #[error("no relabelling maps the physical 3-cycles onto the abstract generators")]
    NoRelabel,
    #[error("residual {0} is missing from the word table")]
    MissingWord(String),
    #[error("internal error: emitted moves {moves} do not reach the target from {start}")]
    VerificationFailed { start: String, moves: String },
    #[error("letters of a dihedral pair must differ")]
    SameLetter,
}
