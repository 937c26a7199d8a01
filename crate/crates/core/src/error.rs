use thiserror::Error;

/// Errors raised by the exact arithmetic, matrix and solver layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot combine elements of Q(sqrt({left})) and Q(sqrt({right}))")]
    MixedFields { left: u64, right: u64 },
    #[error("square root of a negative quantity")]
    NegativeRadicand,
    #[error("radicand too large for squarefree reduction by trial division")]
    RadicandTooLarge,
    #[error("negative discriminant: roots are complex")]
    NegativeDiscriminant,
    #[error("both substituted roots are negative: no real solutions")]
    NegativeEta,
    #[error("roots are not expressible as one-level radicals over a quadratic field")]
    Unrepresentable,
    #[error("perfect-square completion not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("unsupported equation of degree {degree}: {reason}")]
    UnsupportedDegree { degree: usize, reason: &'static str },
    #[error("segment length must be positive")]
    NonpositiveSegment,
    #[error("exponent {0} out of range 1..=64")]
    ExponentOutOfRange(u32),
    #[error("matrix dimension {0} out of range 1..=12")]
    DimensionOutOfRange(usize),
    #[error("expected {expected} entries for a square matrix, found {found}")]
    NonSquare { expected: usize, found: usize },
}

/// Coarse classification used to pick process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The input is well formed but has no answer in the supported domain.
    Domain,
    /// The input falls outside what the library handles at all.
    Scope,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::RadicandTooLarge
            | Error::Unrepresentable
            | Error::NotApplicable(_)
            | Error::UnsupportedDegree { .. }
            | Error::ExponentOutOfRange(_)
            | Error::DimensionOutOfRange(_) => ErrorKind::Scope,
            _ => ErrorKind::Domain,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
