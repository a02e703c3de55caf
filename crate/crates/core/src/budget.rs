//! Cooperative limits for long-running builds and reductions.

use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum BudgetExceeded {
    #[error("time limit exceeded")]
    Timeout,
    #[error("complex would have {count} simplices, above the limit of {limit}")]
    TooLarge { count: u128, limit: usize },
}

/// Wall-clock deadline and simplex-count cap; the default is unlimited.
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    deadline: Option<Instant>,
    max_simplices: Option<usize>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_timeout(mut self, limit: Duration) -> Self {
        self.deadline = Some(Instant::now() + limit);
        self
    }

    pub fn with_max_simplices(mut self, limit: usize) -> Self {
        self.max_simplices = Some(limit);
        self
    }

    pub fn check_time(&self) -> Result<(), BudgetExceeded> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(BudgetExceeded::Timeout),
            _ => Ok(()),
        }
    }

    pub fn check_size(&self, count: u128) -> Result<(), BudgetExceeded> {
        match self.max_simplices {
            Some(limit) if count > limit as u128 => Err(BudgetExceeded::TooLarge { count, limit }),
            _ => Ok(()),
        }
    }
}
