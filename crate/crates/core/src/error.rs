use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the solver can surface.
///
/// Degeneracy variants (`NotSeparating`, `NotRadical`, `PositiveDimension`,
/// `SharedRoots`, `SingularJacobian`) are recoverable by resampling; the
/// driver in [`crate::homotopy`] retries on them before giving up.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime below 2^62")]
    NotPrime(u64),
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("denominator vanishes modulo the prime")]
    DenominatorVanishes,

    #[error("arity mismatch: expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("operation undefined on the zero polynomial")]
    ZeroInput,
    #[error("initial form needs a nonzero direction")]
    ZeroDirection,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("degree {degree} is not below the characteristic {prime}")]
    DegreeTooLargeForChar { degree: usize, prime: u64 },
    #[error("CRT moduli are not pairwise coprime")]
    ModuliNotCoprime,
    #[error("rational reconstruction failed: {0}")]
    ReconstructionFailed(String),
    #[error("jacobian is not invertible modulo the start parametrization")]
    SingularJacobian,

    #[error("dimension {0} exceeds the supported limit")]
    DimensionTooLarge(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("w is not squarefree")]
    NotSquarefree,
    #[error("degree bound violated: {0}")]
    DegreeBound(String),
    #[error("linear form does not evaluate to y modulo w")]
    LinearFormMismatch,
    #[error("equation {0} does not vanish on the parametrization")]
    ResidualNonzero(usize),
    #[error("parametrizations share roots")]
    SharedRoots,
    #[error("field too large for exhaustive enumeration")]
    FieldTooLarge,

    #[error("resource budget exceeded: {0}")]
    ResourceBudgetExceeded(String),
    #[error("ideal is not zero-dimensional")]
    PositiveDimension,
    #[error("linear form is not separating (minimal polynomial degree {degree} < {dimension})")]
    NotSeparating { degree: usize, dimension: usize },
    #[error("ideal is not radical")]
    NotRadical,

    #[error("shape error: {0}")]
    ShapeError(String),
    #[error("n = q - p + s + 1 violated: {0}")]
    DimensionConstraint(String),
    #[error("bound {0} is not an integer")]
    NonIntegralBound(String),
    #[error("reconstructed coefficient {index} has a pole at t = 1")]
    DenominatorVanishesAtOne { index: usize },

    #[error("{cause} (after {attempts} attempts)")]
    RetriesExhausted { cause: Box<Error>, attempts: usize },
}

impl Error {
    /// True for failures caused by an unlucky random choice.
    pub fn is_degeneracy(&self) -> bool {
        matches!(
            self,
            Error::NotSeparating { .. }
                | Error::NotRadical
                | Error::PositiveDimension
                | Error::SharedRoots
                | Error::SingularJacobian
                | Error::NotSquarefree
        )
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. }
            | Error::DimensionConstraint(_)
            | Error::ArityMismatch { .. }
            | Error::NotPrime(_)
            | Error::ShapeError(_)
            | Error::DimensionMismatch(_) => 2,
            Error::ReconstructionFailed(_) | Error::DenominatorVanishesAtOne { .. } => 4,
            Error::ResourceBudgetExceeded(_)
            | Error::DimensionTooLarge(_)
            | Error::FieldTooLarge => 5,
            Error::RetriesExhausted { cause, .. } => match cause.exit_code() {
                1 => 3,
                c => c,
            },
            e if e.is_degeneracy() => 3,
            _ => 1,
        }
    }

    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::ZeroInverse => "ZeroInverse",
            Error::DenominatorVanishes => "DenominatorVanishes",
            Error::ArityMismatch { .. } => "ArityMismatch",
            Error::ZeroInput => "ZeroInput",
            Error::ZeroDirection => "ZeroDirection",
            Error::ExponentOverflow => "ExponentOverflow",
            Error::Parse { .. } => "ParseError",
            Error::DegreeTooLargeForChar { .. } => "DegreeTooLargeForChar",
            Error::ModuliNotCoprime => "ModuliNotCoprime",
            Error::ReconstructionFailed(_) => "ReconstructionFailed",
            Error::SingularJacobian => "SingularJacobian",
            Error::DimensionTooLarge(_) => "DimensionTooLarge",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NotSquarefree => "NotSquarefree",
            Error::DegreeBound(_) => "DegreeBound",
            Error::LinearFormMismatch => "LinearFormMismatch",
            Error::ResidualNonzero(_) => "ResidualNonzero",
            Error::SharedRoots => "SharedRoots",
            Error::FieldTooLarge => "FieldTooLarge",
            Error::ResourceBudgetExceeded(_) => "ResourceBudgetExceeded",
            Error::PositiveDimension => "PositiveDimension",
            Error::NotSeparating { .. } => "NotSeparating",
            Error::NotRadical => "NotRadical",
            Error::ShapeError(_) => "ShapeError",
            Error::DimensionConstraint(_) => "DimensionConstraint",
            Error::NonIntegralBound(_) => "NonIntegralBound",
            Error::DenominatorVanishesAtOne { .. } => "DenominatorVanishesAtOne",
            Error::RetriesExhausted { .. } => "RetriesExhausted",
        }
    }
}
