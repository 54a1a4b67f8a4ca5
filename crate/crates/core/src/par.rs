//! Execution strategy for the exhaustive kernels.
//!
//! Every parallel kernel is a map followed by an exact, order-independent
//! reduction, so the sequential and parallel paths return identical values.

/// How a kernel distributes its outer loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    Sequential,
    /// Uses the rayon pool when the `parallel` feature is enabled, and the
    /// sequential path otherwise.
    #[default]
    Parallel,
}

impl Strategy {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Strategy::Parallel
    }
}

/// Maps `f` over `items` and folds the results with `reduce`.
pub fn map_reduce<T, R, M, F, I>(strategy: Strategy, items: &[T], map: M, identity: I, reduce: F) -> R
where
    T: Sync,
    R: Send,
    M: Fn(&T) -> R + Sync + Send,
    I: Fn() -> R + Sync + Send,
    F: Fn(R, R) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(map).reduce(identity, reduce);
    }
    let _ = strategy;
    items.iter().map(map).fold(identity(), reduce)
}

/// Maps `f` over `items`, preserving input order in the output.
pub fn map_collect<T, R, M>(strategy: Strategy, items: &[T], map: M) -> Vec<R>
where
    T: Sync,
    R: Send,
    M: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(map).collect();
    }
    let _ = strategy;
    items.iter().map(map).collect()
}

/// Folds an index range into per-worker accumulators, then merges them.
pub fn range_fold<R, G, F, I>(strategy: Strategy, range: std::ops::Range<u64>, identity: I, fold: G, reduce: F) -> R
where
    R: Send,
    G: Fn(R, u64) -> R + Sync + Send,
    I: Fn() -> R + Sync + Send,
    F: Fn(R, R) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        use rayon::prelude::*;
        return range.into_par_iter().fold(&identity, &fold).reduce(&identity, &reduce);
    }
    let _ = (strategy, &reduce);
    range.fold(identity(), fold)
}
