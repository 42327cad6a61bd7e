//! Multithreaded census driver.
//!
//! The enumeration range `0 .. 2^(n+1)` is split into contiguous chunks,
//! one partial histogram is computed per chunk, and the partials are merged
//! in chunk order. Merging is pointwise addition, so the result is
//! identical to the sequential scan regardless of the chunking.

use std::thread;

use symsens_core::distribution::{census_range, census_size};
use symsens_core::{Error, SensitivityHistogram};

/// Census over all `2^(n+1)` compact tables using the available cores.
pub fn parallel_census(n: usize, cap: usize) -> Result<SensitivityHistogram, Error> {
    let end = census_size(n, cap)?;
    let threads = thread::available_parallelism()
        .map(|p| p.get() as u64)
        .unwrap_or(1)
        .min(end.div_ceil(MIN_CHUNK));
    if threads <= 1 {
        return census_range(n, 0, end);
    }
    let chunk = end.div_ceil(threads);
    let partials: Vec<Result<SensitivityHistogram, Error>> = thread::scope(|scope| {
        let mut handles = Vec::new();
        let mut start = 0;
        while start < end {
            let stop = (start + chunk).min(end);
            handles.push(scope.spawn(move || census_range(n, start, stop)));
            start = stop;
        }
        handles
            .into_iter()
            .map(|h| h.join().expect("census worker panicked"))
            .collect()
    });
    let mut iter = partials.into_iter();
    let mut merged = iter.next().expect("at least one chunk")?;
    for partial in iter {
        merged.merge(&partial?)?;
    }
    Ok(merged)
}

/// Below this many tables the spawn overhead is not worth it.
const MIN_CHUNK: u64 = 1 << 12;
