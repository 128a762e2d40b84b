use thiserror::Error;

/// Errors shared by every layer of the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow during {0}")]
    Overflow(&'static str),
    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: i64, modulus: i64 },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("degenerate tetrahedron (coplanar vertices)")]
    Degenerate,
    #[error("matrix is not unimodular (det = {0})")]
    NotUnimodular(i64),
    #[error("T_{{{a},{b},{n}}} is not clean")]
    NotClean { a: i64, b: i64, n: i64 },
    #[error("no face of the tetrahedron is clean")]
    NoCleanFace,
    #[error("barycentric combination is not a lattice point")]
    NotALatticePoint,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(&'static str),
    #[error("clean 1-point tetrahedron outside the eight-class catalog: T_{{{a},{b},{n}}}")]
    CatalogViolation { a: i64, b: i64, n: i64 },
}

impl Error {
    /// Stable machine-readable code, used by the CLI error JSON.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Overflow(_) => "overflow",
            Error::NotInvertible { .. } => "not_invertible",
            Error::ZeroDenominator => "zero_denominator",
            Error::Degenerate => "degenerate",
            Error::NotUnimodular(_) => "not_unimodular",
            Error::NotClean { .. } => "not_clean",
            Error::NoCleanFace => "no_clean_face",
            Error::NotALatticePoint => "not_a_lattice_point",
            Error::InvalidInput(_) => "invalid_input",
            Error::Inconsistency(_) => "internal_inconsistency",
            Error::CatalogViolation { .. } => "catalog_violation",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
