use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not coprime: gcd({0}, {1}) > 1")]
    NotCoprime(i64, i64),
    #[error("pair components must be positive, got ({0}, {1})")]
    NonPositive(i64, i64),
    #[error("empty bracket")]
    EmptyBracket,
    #[error("bracket entry {0} is < 2")]
    EntryTooSmall(i64),
    #[error("invalid fraction {p}/{q}: need P > Q >= 1 with gcd(P,Q) = 1")]
    InvalidFraction { p: i64, q: i64 },
    #[error("invalid pair ({p}, {q}): need 1 <= q < p with gcd(p,q) = 1")]
    InvalidPq { p: i64, q: i64 },
    #[error("{0} is not invertible mod {1}")]
    NotInvertible(i64, i64),
    #[error("degenerate: t = 0")]
    DegenerateSt,
    #[error("inconsistent word counts")]
    InconsistentCounts,
    #[error("weight {0} is not <= -2")]
    NotNormalized(i64),
    #[error("empty weight chain")]
    EmptyChain,
    #[error("torus-knot leg check failed for ({m}, {n})")]
    LegMismatch { m: i64, n: i64 },
    #[error("leg determinant must be -1")]
    BadLegDeterminant,
    #[error("invalid lens space parameters ({p}, {q})")]
    InvalidLens { p: i64, q: i64 },
    #[error("off-diagonal length {off} does not match diagonal length {diag}")]
    BadMatrixShape { diag: usize, off: usize },
    #[error("linking matrix is not symmetric")]
    NotSymmetric,
    #[error("division by zero in bracket evaluation")]
    ZeroDenominator,
    #[error("integer overflow in exact arithmetic")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
