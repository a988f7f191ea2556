use thiserror::Error;

/// Errors raised by the library. Every public fallible operation returns [`Result`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("entries must be weakly decreasing, got {0:?}")]
    NotDecreasing(String),

    #[error("column vector {c:?} out of range (bound {bound:?})")]
    ColumnsOutOfRange { c: Vec<usize>, bound: Vec<usize> },

    #[error("extended partition has no finite entry")]
    NoFiniteEntry,

    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,

    #[error("operation is undefined for the unit ideal")]
    UnitIdeal,

    #[error("characteristic must be 0 or prime, got {0}")]
    InvalidCharacteristic(u32),

    #[error("results computed over different fields (characteristic {0} and {1})")]
    FieldMismatch(u32, u32),

    #[error("cap value {cap} is below the required bound {required}")]
    CapTooSmall { cap: u32, required: u32 },

    #[error("orbit expansion in {0} variables exceeds the oracle size guard (n <= {max})", max = crate::oracle::MAX_ORBIT_VARIABLES)]
    OracleTooLarge(usize),

    #[error("orbit dimension {total} is not divisible by the orbit size {orbit}")]
    NonIntegralOrbit { total: u64, orbit: u64 },

    #[error("cannot propagate from {from} down to {to} variables")]
    PropagateBackwards { from: usize, to: usize },

    #[error("simplicial complex on {0} vertices is too large")]
    TooManyVertices(usize),

    #[error("face set is not closed under taking subsets")]
    NotDownwardClosed,

    #[error("invalid job: {0}")]
    Job(String),
}

pub type Result<T> = std::result::Result<T, Error>;
