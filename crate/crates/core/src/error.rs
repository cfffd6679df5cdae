use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported field size {0}: q must be one of 2, 3, 5")]
    UnsupportedField(u32),

    #[error("enumeration budget exceeded in {what}: {size} > {limit}")]
    Budget { what: &'static str, size: u128, limit: u64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("not a projective representation: {0}")]
    NotProjective(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A counting identity that must hold produced an inconsistent value.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Upper bound on the size of any single exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(1 << 20)
    }
}

impl Budget {
    pub fn check(self, what: &'static str, size: u128) -> Result<()> {
        if size > self.0 as u128 {
            Err(Error::Budget { what, size, limit: self.0 })
        } else {
            Ok(())
        }
    }

    /// `q^exp` checked against the budget.
    pub fn check_pow(self, what: &'static str, q: u8, exp: usize) -> Result<u64> {
        let size = (q as u128).checked_pow(exp as u32).unwrap_or(u128::MAX);
        self.check(what, size)?;
        Ok(size as u64)
    }
}
