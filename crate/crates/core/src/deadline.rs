use std::time::{Duration, Instant};

/// Optional wall-clock cutoff shared by every long-running routine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Deadline(Option<Instant>);

impl Deadline {
    pub const NONE: Deadline = Deadline(None);

    pub fn at(instant: Instant) -> Self {
        Deadline(Some(instant))
    }

    pub fn after(budget: Duration) -> Self {
        Deadline(Instant::now().checked_add(budget))
    }

    #[inline]
    pub fn expired(&self) -> bool {
        matches!(self.0, Some(t) if Instant::now() >= t)
    }
}

/// Checks a deadline only every `STRIDE` ticks so tight loops stay cheap.
#[derive(Debug)]
pub(crate) struct Ticker {
    deadline: Deadline,
    ticks: usize,
    expired: bool,
}

impl Ticker {
    pub const STRIDE: usize = 4096;

    pub fn new(deadline: Deadline) -> Self {
        Ticker {
            deadline,
            ticks: 0,
            expired: deadline.expired(),
        }
    }

    /// Returns true once the deadline has passed.
    #[inline]
    pub fn tick(&mut self) -> bool {
        self.ticks += 1;
        if !self.expired && self.ticks.is_multiple_of(Self::STRIDE) {
            self.expired = self.deadline.expired();
        }
        self.expired
    }

    #[inline]
    pub fn expired(&self) -> bool {
        self.expired
    }

    /// Consults the clock immediately.
    pub fn poll(&mut self) -> bool {
        if !self.expired {
            self.expired = self.deadline.expired();
        }
        self.expired
    }
}
