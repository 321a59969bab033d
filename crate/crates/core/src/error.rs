use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: u32, n: u32 },

    #[error("operation requires a complex with at least one vertex, got the {0} complex")]
    DegenerateComplex(&'static str),

    #[error("vector is not a cocycle mod {0}")]
    NotACocycle(u64),

    #[error("degree vector has a positive entry at coordinate {0}")]
    PositiveDegree(usize),

    #[error("invalid generator parameters: {0}")]
    InvalidParameter(String),

    #[error("no valid triangulation of the {m}-fold dunce cap after {attempts} attempts")]
    TriangulationFailed { m: u32, attempts: u32 },
}
