//! Small atomic helpers shared by the parallel phases.

use std::sync::atomic::{AtomicU32, AtomicU64, Ordering};

/// An `f64` stored as its bit pattern in an `AtomicU64`.
#[derive(Debug, Default)]
#[repr(transparent)]
pub struct AtomicF64(AtomicU64);

impl AtomicF64 {
    pub fn new(value: f64) -> Self {
        AtomicF64(AtomicU64::new(value.to_bits()))
    }

    #[inline]
    pub fn load(&self) -> f64 {
        f64::from_bits(self.0.load(Ordering::Relaxed))
    }

    #[inline]
    pub fn store(&self, value: f64) {
        self.0.store(value.to_bits(), Ordering::Relaxed)
    }

    /// Atomically adds `delta` (CAS loop) and returns the previous value.
    #[inline]
    pub fn fetch_add(&self, delta: f64) -> f64 {
        let mut current = self.0.load(Ordering::Relaxed);
        loop {
            let next = (f64::from_bits(current) + delta).to_bits();
            match self
                .0
                .compare_exchange_weak(current, next, Ordering::AcqRel, Ordering::Relaxed)
            {
                Ok(previous) => return f64::from_bits(previous),
                Err(observed) => current = observed,
            }
        }
    }

    pub fn into_inner(self) -> f64 {
        f64::from_bits(self.0.into_inner())
    }
}

pub(crate) fn atomic_labels(labels: impl IntoIterator<Item = u32>) -> Vec<AtomicU32> {
    labels.into_iter().map(AtomicU32::new).collect()
}

pub(crate) fn unwrap_labels(labels: Vec<AtomicU32>) -> Vec<u32> {
    labels.into_iter().map(AtomicU32::into_inner).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fetch_add_accumulates() {
        let x = AtomicF64::new(1.5);
        assert_eq!(x.fetch_add(2.0), 1.5);
        assert_eq!(x.load(), 3.5);
        x.store(-1.0);
        assert_eq!(x.into_inner(), -1.0);
    }

    #[test]
    fn concurrent_adds_are_not_lost() {
        let x = AtomicF64::new(0.0);
        std::thread::scope(|s| {
            for _ in 0..4 {
                s.spawn(|| {
                    for _ in 0..1000 {
                        x.fetch_add(0.25);
                    }
                });
            }
        });
        assert_eq!(x.load(), 1000.0);
    }
}
