//! Exact independence and domination numbers by branch and bound.

mod domination;
mod independence;

pub use domination::{domination_number, DominationResult};
pub use independence::{independence_lower_bound, independence_number, IndependenceResult};

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

/// Search limits. Exhausting either one yields an inexact result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_nodes: 100_000_000,
            max_time: Duration::from_secs(300),
        }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Self {
            max_nodes,
            ..Self::default()
        }
    }
}

/// Shared node counter and deadline for one search, safe across workers.
pub(crate) struct Meter {
    nodes: AtomicU64,
    exhausted: AtomicBool,
    max_nodes: u64,
    deadline: Instant,
    start: Instant,
}

impl Meter {
    pub(crate) fn new(budget: Budget) -> Self {
        let start = Instant::now();
        Self {
            nodes: AtomicU64::new(0),
            exhausted: AtomicBool::new(false),
            max_nodes: budget.max_nodes,
            deadline: start + budget.max_time,
            start,
        }
    }

    /// Counts one node; returns `false` once the budget is spent.
    #[inline]
    pub(crate) fn tick(&self) -> bool {
        if self.exhausted.load(Ordering::Relaxed) {
            return false;
        }
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.max_nodes || (n.is_multiple_of(4096) && Instant::now() >= self.deadline) {
            self.exhausted.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.exhausted.load(Ordering::Relaxed)
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    pub(crate) fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }
}
