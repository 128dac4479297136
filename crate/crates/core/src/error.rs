use thiserror::Error;

/// Errors produced by the group, field, quandle and search routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("empty generator list")]
    EmptyGenerators,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{what} requires a transitive group")]
    Intransitive { what: &'static str },

    #[error("{what} requires a doubly transitive group")]
    NotDoublyTransitive { what: &'static str },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("element not in group")]
    NotInGroup,

    #[error("element cap exceeded: {what} needs at least {needed} elements, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("field order {q} exceeds bound {bound}")]
    FieldTooLarge { q: u64, bound: u64 },

    #[error("modulus {0:?} is not a monic irreducible polynomial")]
    ReducibleModulus(Vec<u32>),

    #[error("zero has no multiplicative order or inverse")]
    ZeroElement,

    #[error("singular matrix")]
    SingularMatrix,

    #[error("matrix dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("wrong characteristic: expected {expected}, found {found}")]
    WrongCharacteristic { expected: u64, found: u64 },

    #[error("idempotence fails at x = {x}: x > x = {value}")]
    Idempotence { x: usize, value: usize },

    #[error("row {x} is not a bijection")]
    RowNotBijective { x: usize },

    #[error("left distributivity fails at ({x}, {y}, {z})")]
    Distributivity { x: usize, y: usize, z: usize },

    #[error("partition is not a congruence: {a} ~ {b} but not compatible with {c}")]
    NotACongruence { a: usize, b: usize, c: usize },

    #[error("cyclic type is only defined for at least 3 elements (got {0})")]
    TooSmallForCyclicType(usize),

    #[error("quandle is not of cyclic type")]
    NotCyclicType,

    #[error("excluded parameters: {0}")]
    ExcludedParameters(String),

    #[error("size {n} outside supported range {min}..={max}")]
    OutOfBounds { n: usize, min: usize, max: usize },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
