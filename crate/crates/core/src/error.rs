use thiserror::Error;

use crate::torus::IntVec2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid JSON: {0}")]
    Json(String),

    #[error("expected an element in the {expected} basis, got {found}")]
    BasisMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("the empty curve has no primitive decomposition")]
    EmptyClass,

    #[error("element is not stable under orientation reversal: coefficient of {key} differs from its mirror")]
    NotSymmetric { key: IntVec2 },

    #[error("crossing count {crossings} exceeds the budget of {budget}")]
    BudgetExceeded { crossings: u64, budget: u32 },

    #[error("parallel classes {u} and {v} have no crossings to arrange")]
    ParallelClasses { u: IntVec2, v: IntVec2 },

    #[error("orientation signs do not match copy count ({signs} signs for {copies} copies)")]
    SignCount { signs: usize, copies: u64 },

    #[error("invalid PD code: {0}")]
    InvalidPd(String),

    #[error("exponent overflow")]
    Overflow,

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
