use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("substructures belong to different ground objects")]
    GroundMismatch,
    #[error("invalid ground object: {0}")]
    InvalidGround(String),
    #[error("forget mode `{mode}` is not available for {structure}")]
    UnsupportedForgetMode { mode: String, structure: String },
    #[error("not a substructure of the ground: {0}")]
    NotASubobject(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("unknown structuring element `{0}`")]
    UnknownName(String),
    #[error("structuring element `{name}` is not defined for {context}")]
    IncompatibleMode { name: String, context: String },
    #[error("no closed form for {0}")]
    NoClosedForm(String),
    #[error("lattice has no atoms for its carrier: {0}")]
    NoAtoms(String),
    #[error("enumeration exceeds the bound of {bound} subobjects")]
    TooLarge { bound: usize },
    #[error("operation only supported on {0}")]
    UnsupportedStructure(String),
    #[error("unknown proposition `{0}`")]
    UnknownProposition(String),
    #[error("structuring element does not cover the lattice (witness {0})")]
    NotCovered(String),
    #[error("unknown world `{0}`")]
    UnknownWorld(String),
    #[error("unknown axiom schema `{0}`")]
    UnknownSchema(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("line {line}: {reason}")]
    InvalidStep { line: usize, reason: String },
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("{0}")]
    Input(String),
}

impl Error {
    /// True for errors caused by a capability limit of the library rather
    /// than by malformed input.
    pub fn is_capability_limit(&self) -> bool {
        matches!(
            self,
            Error::TooLarge { .. } | Error::NoClosedForm(_) | Error::NoAtoms(_)
        )
    }
}
