use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("size budget exceeded: {0}")]
    Budget(String),
    #[error("ring axiom violated: {0}")]
    RingAxiom(String),
    #[error("module axiom violated: {0}")]
    ModuleAxiom(String),
    #[error("not a submodule: {0}")]
    NotSubmodule(String),
    #[error("operands live over different rings")]
    RingMismatch,
    #[error("operands live over different universes")]
    UniverseMismatch,
    #[error("module not isomorphic to any universe member: {0}")]
    NotInUniverse(String),
    #[error("universe was built without the required closure: {0}")]
    ClosureMissing(String),
    #[error("submodule is not fully invariant: {0}")]
    NotFullyInvariant(String),
    #[error("not a linear filter: {0}")]
    NotLinear(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("enumeration budget of {budget} exceeded, candidate space has {candidates}")]
    EnumerationBudget { budget: usize, candidates: usize },
    #[error("unknown claim id: {0}")]
    UnknownClaim(String),
    #[error("unknown module label: {0}")]
    UnknownModule(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
