use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ambient dimension mismatch: P^{left} vs P^{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("class for P^{ambient} needs {expected} coefficients, got {got}")]
    CoefficientCount {
        ambient: usize,
        expected: usize,
        got: usize,
    },

    #[error("degree must be positive, got {0}")]
    NonPositiveDegree(i64),

    #[error("polynomial rings differ ({left_vars} vars mod {left_prime} vs {right_vars} vars mod {right_prime})")]
    RingMismatch {
        left_vars: usize,
        left_prime: u64,
        right_vars: usize,
        right_prime: u64,
    },

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("polynomial is not homogeneous")]
    Inhomogeneous,

    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,

    #[error("zero ideal does not define a proper subscheme")]
    ZeroIdeal,

    #[error("exponent overflow (degree too large)")]
    ExponentOverflow,

    #[error("too many variables: {0} (at most {max})", max = crate::polyring::MAX_VARS)]
    TooManyVariables(usize),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("inclusion-exclusion over {got} generators exceeds the guard of {max}")]
    TooManyGenerators { got: usize, max: usize },

    #[error("random choices stayed degenerate after {attempts} attempts: {what}")]
    Degenerate { attempts: usize, what: String },

    #[error("containment violated: {0}")]
    Containment(String),

    #[error("hypersurfaces share a common factor")]
    CommonFactor,
}

pub type Result<T> = std::result::Result<T, Error>;
