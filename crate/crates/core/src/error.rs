use thiserror::Error;

use crate::sigma::PlanePoint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {0}; the complement in N would be infinite")]
    NonCoprime(u64),
    #[error("operation undefined for the full semigroup N")]
    FullSemigroup,
    #[error("invalid multiplicity sequence: {0}")]
    InvalidSequence(String),
    #[error("set is not closed under addition")]
    NotClosed,
    #[error("semigroup is not of maximal embedding dimension")]
    NotMaximalEmbeddingDimension,
    #[error("semigroup is not Arf")]
    NotArf,
    #[error("point {0} is not a member")]
    NotMember(PlanePoint),
    #[error("integer {0} is not a member of the semigroup")]
    NotSemigroupMember(i64),
    #[error("the zero element is not allowed here")]
    ZeroElement,
    #[error("ideal is not proper")]
    ImproperIdeal,
    #[error("operator is zero")]
    ZeroOperator,
    #[error("not an oversemigroup of the base semigroup")]
    NotOversemigroup,
    #[error("ideals belong to different semigroups")]
    OwnerMismatch,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
