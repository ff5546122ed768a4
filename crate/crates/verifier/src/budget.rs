use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use crate::problem::Budget;

/// Node and wall-clock limits shared by every worker of one search.
pub(crate) struct Meter {
    used: AtomicU64,
    limit: u64,
    deadline: Instant,
    stopped: AtomicBool,
}

impl Meter {
    pub fn new(b: &Budget) -> Self {
        Meter {
            used: AtomicU64::new(0),
            limit: b.nodes,
            deadline: Instant::now() + b.wall,
            stopped: AtomicBool::new(false),
        }
    }

    /// Charges one node; `false` once either limit is exhausted.
    #[inline]
    pub fn tick(&self) -> bool {
        if self.stopped.load(Ordering::Relaxed) {
            return false;
        }
        let u = self.used.fetch_add(1, Ordering::Relaxed);
        if u >= self.limit || (u.is_multiple_of(1024) && Instant::now() >= self.deadline) {
            self.stopped.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    pub fn exhausted(&self) -> bool {
        self.stopped.load(Ordering::Relaxed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::time::Duration;

    #[test]
    fn node_limit_trips() {
        let m = Meter::new(&Budget {
            nodes: 3,
            wall: Duration::from_secs(60),
        });
        assert!(m.tick() && m.tick() && m.tick());
        assert!(!m.tick());
        assert!(m.exhausted());
    }
}
