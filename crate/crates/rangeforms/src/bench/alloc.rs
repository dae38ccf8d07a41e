//! Optional counting global allocator for best-effort peak-memory figures.
//!
//! The grid driver reports `peak_alloc_bytes` per form run. Counting only
//! happens when the *binary* installs [`CountingAlloc`] as its global
//! allocator (the bundled CLI does; plain library users and the unit-test
//! harness do not):
//!
//! ```ignore
//! #[global_allocator]
//! static ALLOC: rangeforms::bench::alloc::CountingAlloc = CountingAlloc;
//! ```
//!
//! When the allocator is not installed, [`measure_peak`] detects that and
//! reports `0`, which downstream consumers must read as "unavailable" —
//! nothing gates on these numbers. The counters are process-wide atomics
//! updated with relaxed ordering; figures are best-effort by design.

use std::alloc::{GlobalAlloc, Layout, System};
use std::sync::atomic::{AtomicUsize, Ordering::Relaxed};

/// Net bytes currently allocated (allocations minus deallocations).
static CURRENT: AtomicUsize = AtomicUsize::new(0);
/// High-water mark of [`CURRENT`] since the last [`reset_peak`].
static PEAK: AtomicUsize = AtomicUsize::new(0);
/// Monotone total of all bytes ever allocated; used to probe whether the
/// counting allocator is installed at all.
static TOTAL: AtomicUsize = AtomicUsize::new(0);

/// A [`System`]-backed allocator that tracks current/peak usage.
pub struct CountingAlloc;

// SAFETY: defers all allocation to `System` and only adds atomic counter
// updates; sizes mirror the layouts passed by the caller.
unsafe impl GlobalAlloc for CountingAlloc {
    unsafe fn alloc(&self, layout: Layout) -> *mut u8 {
        let p = unsafe { System.alloc(layout) };
        if !p.is_null() {
            record_alloc(layout.size());
        }
        p
    }

    unsafe fn alloc_zeroed(&self, layout: Layout) -> *mut u8 {
        let p = unsafe { System.alloc_zeroed(layout) };
        if !p.is_null() {
            record_alloc(layout.size());
        }
        p
    }

    unsafe fn realloc(&self, ptr: *mut u8, layout: Layout, new_size: usize) -> *mut u8 {
        let p = unsafe { System.realloc(ptr, layout, new_size) };
        if !p.is_null() {
            record_dealloc(layout.size());
            record_alloc(new_size);
        }
        p
    }

    unsafe fn dealloc(&self, ptr: *mut u8, layout: Layout) {
        unsafe { System.dealloc(ptr, layout) };
        record_dealloc(layout.size());
    }
}

fn record_alloc(n: usize) {
    TOTAL.fetch_add(n, Relaxed);
    let now = CURRENT.fetch_add(n, Relaxed) + n;
    PEAK.fetch_max(now, Relaxed);
}

fn record_dealloc(n: usize) {
    CURRENT.fetch_sub(n, Relaxed);
}

/// Net bytes currently allocated, or 0 if counting is not installed.
pub fn current_bytes() -> usize {
    CURRENT.load(Relaxed)
}

/// High-water mark since the last [`reset_peak`].
pub fn peak_bytes() -> usize {
    PEAK.load(Relaxed)
}

/// Restarts peak tracking from the current level.
pub fn reset_peak() {
    PEAK.store(CURRENT.load(Relaxed), Relaxed);
}

/// Whether the counting allocator is actually installed in this process.
///
/// Probes by making a small heap allocation and checking that the monotone
/// byte total moved.
pub fn counting_active() -> bool {
    let before = TOTAL.load(Relaxed);
    let probe: Vec<u8> = Vec::with_capacity(64);
    std::hint::black_box(&probe);
    drop(probe);
    TOTAL.load(Relaxed) != before
}

/// Runs `body` and returns its result together with the peak growth in net
/// allocated bytes during the call (0 when counting is unavailable).
pub fn measure_peak<T>(body: impl FnOnce() -> T) -> (T, usize) {
    if !counting_active() {
        return (body(), 0);
    }
    let start = current_bytes();
    reset_peak();
    let out = body();
    (out, peak_bytes().saturating_sub(start))
}
