use crate::error::{Error, Result};

/// Environment variable that overrides every default search budget.
pub const BUDGET_ENV: &str = "QUIVERFIN_BUDGET";

/// Limits on the exhaustive searches. Exceeding one yields
/// [`Error::BudgetExceeded`], never a guessed answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// States visited by the Euclidean subgraph search.
    pub search_states: u64,
    /// Vectors evaluated by the subroot enumeration.
    pub subroot_vectors: u64,
    /// Points of a representation space swept by the orbit counter.
    pub orbit_points: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { search_states: 10_000_000, subroot_vectors: 100_000_000, orbit_points: 1_000_000 }
    }
}

impl Budget {
    pub fn uniform(limit: u64) -> Self {
        Budget { search_states: limit, subroot_vectors: limit, orbit_points: limit }
    }

    /// Defaults, or a uniform budget taken from `QUIVERFIN_BUDGET` when it is set
    /// to a positive integer.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(raw) => raw
                .trim()
                .parse::<u64>()
                .ok()
                .filter(|&v| v > 0)
                .map(Budget::uniform)
                .ok_or_else(|| Error::Precondition(format!("{BUDGET_ENV} must be a positive integer, got `{raw}`"))),
            Err(_) => Ok(Budget::default()),
        }
    }
}

/// Counts work units against one budget.
#[derive(Debug)]
pub(crate) struct Meter {
    what: &'static str,
    used: u64,
    limit: u64,
}

impl Meter {
    pub(crate) fn new(what: &'static str, limit: u64) -> Self {
        Meter { what, used: 0, limit }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::BudgetExceeded { what: self.what, budget: self.limit });
        }
        Ok(())
    }

    #[cfg(test)]
    pub(crate) fn used(&self) -> u64 {
        self.used
    }
}
