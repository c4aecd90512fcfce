use std::cell::Cell;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Wall-clock limit for the exponential searches (exact chromatic index,
/// constrained colouring search).
///
/// Polling the clock is rate limited: after the first call, `tick` only
/// reads it once every `POLL_INTERVAL` calls.
#[derive(Debug, Clone)]
pub struct Budget {
    deadline: Option<Instant>,
    ticks: Cell<u32>,
}

const POLL_INTERVAL: u32 = 1 << 10;

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            deadline: None,
            ticks: Cell::new(0),
        }
    }

    pub fn new(limit: Duration) -> Self {
        Budget {
            deadline: Some(Instant::now() + limit),
            ticks: Cell::new(0),
        }
    }

    pub fn from_millis(ms: u64) -> Self {
        Self::new(Duration::from_millis(ms))
    }

    pub fn is_unlimited(&self) -> bool {
        self.deadline.is_none()
    }

    /// Cheap periodic check used inside search loops.
    pub fn tick(&self, during: &'static str) -> Result<()> {
        let Some(deadline) = self.deadline else {
            return Ok(());
        };
        let t = self.ticks.get().wrapping_add(1);
        self.ticks.set(t);
        if (t == 1 || t.is_multiple_of(POLL_INTERVAL)) && Instant::now() >= deadline {
            return Err(Error::BudgetExceeded(during));
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::unlimited()
    }
}
