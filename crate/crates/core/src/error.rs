use thiserror::Error;

/// Errors raised by the tansum computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A brute-force enumeration would exceed the configured budget.
    #[error("enumeration of {requested} candidates exceeds budget of {budget}; {hint}")]
    Budget {
        requested: u128,
        budget: u64,
        hint: &'static str,
    },

    /// An internal identity failed to hold. This always indicates a bug or a
    /// false mathematical claim, never bad input.
    #[error("invariant violation: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn require_odd(n: u64, min: u64) -> Result<()> {
    if n.is_multiple_of(2) || n < min {
        return Err(Error::Domain(format!(
            "n must be odd and at least {min}, got {n}"
        )));
    }
    Ok(())
}
