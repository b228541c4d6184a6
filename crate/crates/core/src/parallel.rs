//! Chunked work distribution over an index space.
//!
//! Callers split `[0, total)` into contiguous chunks, map each chunk to a
//! partial result on a worker pool, and merge the parts *in chunk order*, so
//! the combined result is identical for every worker count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

/// Split `[0, total)` into at most `parts` contiguous non-empty ranges.
pub fn split_range(total: u64, parts: usize) -> Vec<(u64, u64)> {
    if total == 0 {
        return vec![(0, 0)];
    }
    let parts = (parts.max(1) as u64).min(total);
    let base = total / parts;
    let extra = total % parts;
    let mut out = Vec::with_capacity(parts as usize);
    let mut lo = 0;
    for i in 0..parts {
        let len = base + if i < extra { 1 } else { 0 };
        out.push((lo, lo + len));
        lo += len;
    }
    out
}

/// Run `work` over chunks of `[0, total)` on `jobs` threads and return the
/// per-chunk results in chunk order.
pub fn run_chunked<T, W>(total: u64, jobs: usize, work: W) -> Vec<T>
where
    T: Send,
    W: Fn(u64, u64) -> T + Sync,
{
    let jobs = jobs.max(1);
    let bounds = split_range(total, jobs * 4);
    if jobs == 1 || bounds.len() == 1 {
        return bounds.into_iter().map(|(a, b)| work(a, b)).collect();
    }
    let slots: Vec<Mutex<Option<T>>> = bounds.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    thread::scope(|scope| {
        for _ in 0..jobs.min(bounds.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= bounds.len() {
                    break;
                }
                let (a, b) = bounds[i];
                let value = work(a, b);
                *slots[i].lock().expect("result slot") = Some(value);
            });
        }
    });
    slots
        .into_iter()
        .map(|m| m.into_inner().expect("worker finished").expect("chunk filled"))
        .collect()
}
