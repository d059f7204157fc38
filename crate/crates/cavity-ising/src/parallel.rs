//! Data-parallel helpers with a sequential fallback.
//!
//! With the default `parallel` feature the grid sweeps fan out over a rayon
//! pool and large per-mode reductions are chunked; without it everything
//! runs on plain iterators with identical results. The `_seq` variants stay
//! available under either configuration so the benchmarks can compare both
//! paths in one build.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Mode sums shorter than this stay sequential; rayon overhead dominates
/// below it.
pub const PAR_SUM_THRESHOLD: usize = 8192;

/// Sum `f` over `items`, in parallel chunks when the slice is long enough.
pub fn sum_over<T: Sync>(items: &[T], f: impl Fn(&T) -> f64 + Sync) -> f64 {
    #[cfg(feature = "parallel")]
    {
        if items.len() >= PAR_SUM_THRESHOLD {
            return items
                .par_chunks(2048)
                .map(|chunk| chunk.iter().map(&f).sum::<f64>())
                .sum();
        }
    }
    sum_over_seq(items, f)
}

/// Sequential reference path of [`sum_over`].
pub fn sum_over_seq<T>(items: &[T], f: impl Fn(&T) -> f64) -> f64 {
    items.iter().map(f).sum()
}

/// Map `f` over `items`, preserving order; parallel when the feature is on.
pub fn map_collect<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync) -> Vec<U> {
    #[cfg(feature = "parallel")]
    {
        return items.par_iter().map(f).collect();
    }
    #[cfg(not(feature = "parallel"))]
    map_collect_seq(items, f)
}

/// Sequential reference path of [`map_collect`].
pub fn map_collect_seq<T, U>(items: &[T], f: impl Fn(&T) -> U) -> Vec<U> {
    items.iter().map(f).collect()
}
