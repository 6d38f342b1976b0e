use thiserror::Error;

use crate::fincat::{ArrowId, ObjId, ValidationReport};

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown arrow id {0}")]
    UnknownArrow(ArrowId),

    #[error("unknown object id {0}")]
    UnknownObject(ObjId),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("category has {arrows} arrows, above the budget of {budget}")]
    BudgetExceeded { arrows: usize, budget: usize },

    #[error("structure of {size} elements is above the limit of {limit} for this operation")]
    TooLarge { size: usize, limit: usize },

    #[error("invalid category:\n{0}")]
    InvalidCategory(ValidationReport),

    #[error("mismatched categories: {0}")]
    Mismatch(String),

    #[error("malformed data: {0}")]
    Malformed(String),

    #[error("regular comparison undefined: required (co)limits are absent")]
    ComparisonUndefined,

    #[error("not a refinement: {0}")]
    NotARefinement(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
