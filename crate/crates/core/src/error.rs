use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("fractional power of q evaluated at a root of even order {order}")]
    FractionalPowerAtEvenOrder { order: u64 },
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
    #[error("invalid link: {0}")]
    InvalidLink(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("state space of dimension {dimension} exceeds the bound {bound}")]
    CapacityExceeded { dimension: u128, bound: u128 },
    #[error("machine integer overflow in {0}")]
    Overflow(&'static str),
    #[error("link is not algebraically split with zero framings")]
    NotAlgebraicallySplit,
    #[error("integrality violated at multi-index {index:?}")]
    IntegralityViolation { index: alloc::vec::Vec<u32> },
    #[error("root of order {order} has gcd {gcd} with b, expected {expected}")]
    BadRootForTransform { order: u64, gcd: u64, expected: u64 },
    #[error("vanishing denominator factor {0}")]
    PoleAtSubstitution(String),
    #[error("manifold is not a rational homology sphere")]
    NotRationalHomologySphere,
    #[error("truncation too shallow: need K >= {required}, have {have}")]
    TruncationTooShallow { required: usize, have: usize },
    #[error("linking matrix is not diagonal with entries +-1")]
    NotDiagonalPM1,
    #[error("basis conversion failed: {0}")]
    BasisConversionFailure(String),
    #[error("division by zero")]
    DivisionByZero,
}
