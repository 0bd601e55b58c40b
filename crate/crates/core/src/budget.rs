//! Resource budgets for the Groebner engine.
//!
//! Desk-scale inputs are the design target; rather than hang on an
//! accidentally hard basis computation, every potentially expensive loop
//! checks a budget and fails loudly with a [`LimitError`].

use std::time::{Duration, Instant};

use thiserror::Error;

/// Hard limits for a single basis computation.
#[derive(Debug, Clone)]
pub struct Budget {
    /// Maximum number of elements the working basis may reach.
    pub max_basis: usize,
    /// Maximum total degree of any polynomial entering the basis.
    pub max_degree: u32,
    /// Maximum number of reduction steps across the whole computation.
    pub max_reductions: u64,
    /// Optional wall-clock limit.
    pub timeout: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_basis: 4000,
            max_degree: 64,
            max_reductions: 40_000_000,
            timeout: None,
        }
    }
}

impl Budget {
    pub fn with_timeout_ms(mut self, millis: u64) -> Self {
        self.timeout = Some(Duration::from_millis(millis));
        self
    }

    /// Start a metered run against this budget.
    pub fn start(&self) -> Meter<'_> {
        Meter {
            budget: self,
            started: Instant::now(),
            reductions: 0,
        }
    }
}

/// Running counters checked against a [`Budget`].
pub struct Meter<'a> {
    budget: &'a Budget,
    started: Instant,
    reductions: u64,
}

impl Meter<'_> {
    pub fn check_basis_size(&self, size: usize) -> Result<(), LimitError> {
        if size > self.budget.max_basis {
            return Err(LimitError::BasisSize(self.budget.max_basis));
        }
        Ok(())
    }

    pub fn check_degree(&self, degree: u32) -> Result<(), LimitError> {
        if degree > self.budget.max_degree {
            return Err(LimitError::Degree(self.budget.max_degree));
        }
        Ok(())
    }

    /// Count one reduction step; also polls the wall clock occasionally.
    pub fn tick_reduction(&mut self) -> Result<(), LimitError> {
        self.reductions += 1;
        if self.reductions > self.budget.max_reductions {
            return Err(LimitError::Reductions(self.budget.max_reductions));
        }
        if self.reductions % 1024 == 0 {
            if let Some(limit) = self.budget.timeout {
                if self.started.elapsed() > limit {
                    return Err(LimitError::Timeout(limit));
                }
            }
        }
        Ok(())
    }
}

/// A budget was exceeded. Never a wrong answer: the computation is abandoned.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LimitError {
    #[error("basis size limit exceeded ({0} elements)")]
    BasisSize(usize),
    #[error("degree limit exceeded (max {0})")]
    Degree(u32),
    #[error("reduction step limit exceeded ({0})")]
    Reductions(u64),
    #[error("wall-clock limit exceeded ({0:?})")]
    Timeout(Duration),
}
