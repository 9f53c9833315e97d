use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composition mismatch: {0}")]
    Composition(String),
    #[error("ambient mismatch: {0}")]
    Ambient(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("missing component {kind} at {objs}")]
    MissingComponent { kind: String, objs: String },
    #[error("universe not closed: object of size {size} required by {law} is missing")]
    UniverseNotClosed { size: usize, law: String },
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("not projectors: {0}")]
    NotProjectors(String),
    #[error("projectors do not commute: {0}")]
    NotCommuting(String),
    #[error("bounds exceeded: {0}")]
    BoundsExceeded(String),
    #[error("invalid bicomodule: {0}")]
    InvalidBicomodule(String),
    #[error("base objects differ: {0}")]
    BaseMismatch(String),
    #[error("induced constraint failure: {0}")]
    InducedConstraintFailure(String),
    #[error("factorization failure: {0}")]
    FactorizationFailure(String),
    #[error("not reflexive: missing ({0},{0})")]
    NotReflexive(usize),
    #[error("not transitive: ({0},{1}) and ({1},{2}) present but ({0},{2}) missing")]
    NotTransitive(usize, usize, usize),
    #[error("invalid unit map: {0}")]
    InvalidUnitMap(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("universe mismatch: {0}")]
    UniverseMismatch(String),
    #[error("source is not a monoid: {0}")]
    SourceNotMonoid(String),
    #[error("triple is not in the subgroup H: {0}")]
    NotInSubgroup(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

impl Error {
    /// Exit status for the command line: 1 when a mathematical property of
    /// well-formed input fails, 2 when the input itself is unusable.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotAGroup(_)
            | Error::NotProjectors(_)
            | Error::NotCommuting(_)
            | Error::InvalidBicomodule(_)
            | Error::InducedConstraintFailure(_)
            | Error::FactorizationFailure(_)
            | Error::NotReflexive(_)
            | Error::NotTransitive(..)
            | Error::InvalidUnitMap(_)
            | Error::TheoremViolation(_)
            | Error::SourceNotMonoid(_)
            | Error::NotInSubgroup(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
