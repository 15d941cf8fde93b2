use thiserror::Error;

/// Errors raised by the invariant calculators.
///
/// Variants split into two families: precondition violations (bad input
/// shape) and mathematical refusals, where the input is well formed but the
/// requested quantity is undefined or not established for it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("empty input sequence")]
    EmptyInput,

    #[error("dimension below 3 not modeled")]
    DimensionTooLow,

    #[error("unsupported: period lattice requires pairwise coprime exponents")]
    PeriodLatticeNotCoprime,

    #[error("closed form proved only for pairwise coprime exponents")]
    ClosedFormNotCoprime,

    #[error("mean Euler characteristic undefined: μ_P = 0")]
    MecUndefined,

    #[error("index sign undefined: μ_P = 0")]
    IndexSignUndefined,

    #[error("oracle too large: principal period {period} exceeds cap {cap}")]
    OracleTooLarge { period: String, cap: u64 },

    #[error("degree data required")]
    DegreeDataRequired,

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True when the input was well formed but the quantity is refused.
    pub fn is_refusal(&self) -> bool {
        matches!(
            self,
            Error::DimensionTooLow
                | Error::PeriodLatticeNotCoprime
                | Error::ClosedFormNotCoprime
                | Error::MecUndefined
                | Error::IndexSignUndefined
                | Error::OracleTooLarge { .. }
                | Error::DegreeDataRequired
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
