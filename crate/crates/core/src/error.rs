//! Error type shared by every module of the crate.

use thiserror::Error;

use crate::sring::AxiomViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A group specification string could not be parsed.
    #[error("bad group spec {spec:?}: {reason}")]
    BadGroupSpec { spec: String, reason: String },

    /// A configured resource cap was hit. The computation was abandoned, not truncated.
    #[error("{what} exceeds the configured cap ({actual} > {limit})")]
    CapExceeded {
        what: &'static str,
        limit: u64,
        actual: u64,
    },

    /// A search ran out of its wall-clock budget.
    #[error("time budget of {secs} s exhausted during {what}")]
    TimeBudgetExceeded { what: &'static str, secs: u64 },

    /// A subgroup expected to be normal is not; `g^-1 n g` falls outside it.
    #[error("subgroup is not normal: conjugating element {n} by {g} leaves the subgroup")]
    NotNormal { n: u32, g: u32 },

    /// The input is not a partition of the group.
    #[error("not a partition: {0}")]
    NotAPartition(String),

    /// A partition of the group violates one of the S-ring axioms.
    #[error("S-ring axiom violated: {0}")]
    Axiom(AxiomViolation),

    /// A required subgroup is not a union of basic sets.
    #[error("subgroup of order {order} is not a union of basic sets")]
    NotASubring { order: usize },

    /// A permutation failed a precondition (not an automorphism, not a bijection, ...).
    #[error("bad permutation: {0}")]
    BadPermutation(String),

    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },

    /// A number-theoretic identity that must hold failed. Always a bug.
    #[error("identity check failed for p = {p}: {detail}")]
    IdentityFailed { p: u64, detail: String },
}

impl From<AxiomViolation> for Error {
    fn from(v: AxiomViolation) -> Self {
        Error::Axiom(v)
    }
}
