//! Parallel/sequential execution helpers.
//!
//! With the `parallel` feature (default) the sweeps run on rayon; without it
//! they fall back to plain iterators. Every reduction is a `min` over a
//! totally ordered key, so the result is identical under both schedules.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `0..n`, preserving index order in the output.
pub(crate) fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Minimum of `f(item)` over `items`, skipping `None` results.
pub(crate) fn min_over<T, K, F>(items: &[T], f: F) -> Option<K>
where
    T: Sync,
    K: Ord + Send,
    F: Fn(&T) -> Option<K> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().filter_map(f).min()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().filter_map(f).min()
    }
}

/// All unordered pairs `(u, v)` with `u < v < n`.
pub(crate) fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}
