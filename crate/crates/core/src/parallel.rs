use std::sync::{Mutex, MutexGuard};

use crate::error::Result;

/// Builds a dedicated pool with exactly `workers` threads.
pub fn worker_pool(workers: usize) -> Result<rayon::ThreadPool> {
    Ok(rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .thread_name(|i| format!("splitpass-{i}"))
        .build()?)
}

/// Hardware parallelism, falling back to one worker.
pub fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// One value per pool worker, looked up by the current rayon thread index.
pub(crate) struct WorkerLocal<T> {
    slots: Vec<Mutex<T>>,
}

impl<T> WorkerLocal<T> {
    /// Sized for the pool the caller is running in.
    pub fn new(init: impl Fn() -> T) -> Self {
        let workers = rayon::current_num_threads().max(1);
        WorkerLocal {
            slots: (0..workers).map(|_| Mutex::new(init())).collect(),
        }
    }

    pub fn get(&self) -> MutexGuard<'_, T> {
        let index = rayon::current_thread_index().unwrap_or(0) % self.slots.len();
        self.slots[index].lock().unwrap_or_else(|e| e.into_inner())
    }
}

/// Splits `buf` into the consecutive sub-slices `offsets[k]..offsets[k + 1]`.
pub(crate) fn split_by_offsets_mut<'a, T>(
    mut buf: &'a mut [T],
    offsets: &[usize],
) -> Vec<&'a mut [T]> {
    let mut parts = Vec::with_capacity(offsets.len().saturating_sub(1));
    for w in offsets.windows(2) {
        let (head, tail) = std::mem::take(&mut buf).split_at_mut(w[1] - w[0]);
        parts.push(head);
        buf = tail;
    }
    parts
}

/// In-place exclusive prefix sum; returns the grand total.
pub(crate) fn exclusive_scan(values: &mut [usize]) -> usize {
    let mut running = 0;
    for v in values {
        let next = running + *v;
        *v = running;
        running = next;
    }
    running
}
