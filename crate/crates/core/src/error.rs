use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyInput,
    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {0}; the monoid is not cofinite in N")]
    NonCofinite(u64),
    #[error("multiplicity must be at least 2 to have Kunz coordinates")]
    MultiplicityOne,
    #[error("multiplicity {0} is below 2")]
    BadMultiplicity(i64),
    #[error("expected {expected} coordinates, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("invalid Kunz coordinates: {0}")]
    InvalidKunz(KunzViolation),
    #[error("Frobenius number {frobenius} is a multiple of the multiplicity {multiplicity}")]
    FrobeniusDivisible { multiplicity: i64, frobenius: i64 },
    #[error("the system already carries a {0} cut")]
    DuplicateCut(&'static str),
    #[error("system has no genus or Frobenius cut; its lattice point set is infinite")]
    Unbounded,
    #[error("{what}: argument {value} outside the domain ({domain})")]
    DomainError {
        what: &'static str,
        value: i64,
        domain: &'static str,
    },
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("cache I/O: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// The first inequality of the Kunz system that a coordinate vector breaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KunzViolation {
    /// `k_i >= 1` fails.
    LowerBound { i: usize, value: i64 },
    /// `k_i + k_j - k_{i+j} >= 0` fails (`i + j < m`).
    Additive { i: usize, j: usize, slack: i64 },
    /// `k_i + k_j - k_{i+j-m} >= -1` fails (`i + j > m`).
    Wrapped { i: usize, j: usize, slack: i64 },
}

impl std::fmt::Display for KunzViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            KunzViolation::LowerBound { i, value } => write!(f, "k_{i} = {value} < 1"),
            KunzViolation::Additive { i, j, slack } => {
                write!(f, "k_{i} + k_{j} - k_{} = {slack} < 0", i + j)
            }
            KunzViolation::Wrapped { i, j, slack } => {
                write!(f, "k_{i} + k_{j} - k_(i+j-m) = {slack} < -1")
            }
        }
    }
}
