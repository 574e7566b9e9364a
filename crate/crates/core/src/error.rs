use alloc::string::String;
use num_bigint::BigInt;
use thiserror::Error;

use crate::ExtRational;

/// Domain errors. Each message names the precondition that failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("0/0 is not a fraction")]
    ZeroOverZero,
    #[error("input must be non-negative")]
    NegativeInput,
    #[error("input must be finite, got 1/0")]
    InfinityInput,
    #[error("cannot parse {0:?} as a fraction")]
    Parse(String),
    #[error("p must be at least 2, got {0}")]
    PTooSmall(BigInt),
    #[error("p must be even for L(p,q) to contain a non-orientable surface, got p = {0}")]
    OddP(BigInt),
    #[error("p and q must be coprime, got gcd({p}, {q}) != 1")]
    NotCoprime { p: BigInt, q: BigInt },
    #[error("q must be nonzero mod p, got p = {p}, q = {q}")]
    QZeroModP { p: BigInt, q: BigInt },
    #[error("continued fraction evaluation reached 0/0")]
    IndeterminateForm,
    #[error("0/1 is the root and has no mother")]
    RootHasNoMother,
    #[error("{0} is not a vertex: the numerator must be even")]
    NotAVertex(ExtRational),
    #[error("{0} must be positive")]
    NonPositive(ExtRational),
    #[error("child parameter t must be odd and not -1 (and positive at 0/1), got {0}")]
    BadT(BigInt),
}
