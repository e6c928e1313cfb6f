use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("duplicate atom `{0}`")]
    DuplicateAtom(String),

    #[error("unknown atom `{0}`")]
    UnknownAtom(String),

    #[error("malformed relation on line {line}: {reason}")]
    MalformedRelation { line: usize, reason: String },

    #[error("complement f_{side}({x},{y}) defined by two relations")]
    ConflictingComplement { side: char, x: String, y: String },

    #[error("generators are not atoms: {0:?}")]
    NonAtomGenerators(Vec<String>),

    #[error("left and right graphs differ; the presentation cannot be of FC type")]
    GraphMismatch,

    #[error("no Garside element of length <= {0} found")]
    SearchExhausted(usize),

    #[error("simple elements of {0} do not form a lattice")]
    NotALattice(String),

    #[error("induced graph on {0} is not complete")]
    IncompleteGraph(String),

    #[error("no admissible FC split of {0}")]
    NoValidSplit(String),

    #[error("{0} does not generate a parabolic submonoid")]
    NotParabolic(String),

    #[error("intersection {0} is not parabolic")]
    IntersectionNotParabolic(String),

    #[error("rewriting closure exceeded {0} words")]
    ClosureBudgetExceeded(usize),

    #[error("`{0}` is not a simple element")]
    NotSimple(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
