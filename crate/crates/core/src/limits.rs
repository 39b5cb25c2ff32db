//! Size bounds for the enumeration-based routines.

use crate::error::{Error, Result};

/// Environment variable overriding [`Limits::max_enum`].
pub const MAX_ENUM_ENV: &str = "HYPERIRR_MAX_ENUM";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `q^m` for which polynomials or field elements are enumerated.
    pub max_enum: u64,
    /// Largest composed degree `m*t` handed to the factorization routines.
    pub max_composed_degree: u64,
    /// Largest matrix dimension for the block-matrix checks.
    pub max_matrix_dim: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_enum: 10_000,
            max_composed_degree: 40,
            max_matrix_dim: 24,
        }
    }
}

impl Limits {
    /// Defaults, with `max_enum` taken from `HYPERIRR_MAX_ENUM` when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(MAX_ENUM_ENV) {
            limits.max_enum = raw.trim().parse().map_err(|_| {
                Error::InvalidArgument(format!("{MAX_ENUM_ENV}={raw:?} is not a positive integer"))
            })?;
        }
        Ok(limits)
    }

    pub(crate) fn check_enum(&self, what: &'static str, value: u128) -> Result<()> {
        if value > self.max_enum as u128 {
            return Err(Error::SizeExceeded {
                what,
                value: value.to_string(),
                bound: self.max_enum.to_string(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_degree(&self, value: u64) -> Result<()> {
        if value > self.max_composed_degree {
            return Err(Error::SizeExceeded {
                what: "composed degree m*t",
                value: value.to_string(),
                bound: self.max_composed_degree.to_string(),
            });
        }
        Ok(())
    }
}
