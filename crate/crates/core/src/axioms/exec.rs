//! Deterministic execution of indexed searches, parallel or sequential.
//!
//! A search is expressed as a function over an index range. The parallel
//! path uses `find_first`, which returns the match with the lowest index,
//! so both paths report the same element: the first one in enumeration
//! order. Instance counts are plain associative sums.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum ExecMode {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl ExecMode {
    pub(crate) fn default_mode() -> ExecMode {
        #[cfg(feature = "parallel")]
        {
            ExecMode::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        {
            ExecMode::Sequential
        }
    }
}

/// Applies `f` over `0..len` and returns the result with the lowest index
/// for which `f` is `Some`.
pub(crate) fn find_first<T, F>(mode: ExecMode, len: u64, f: F) -> Option<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    match mode {
        ExecMode::Sequential => (0..len).find_map(f),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => (0..len).into_par_iter().filter_map(f).find_first(|_| true),
    }
}

/// Sums `f` over `0..len`.
pub(crate) fn sum_over<F>(mode: ExecMode, len: u64, f: F) -> u64
where
    F: Fn(u64) -> u64 + Sync + Send,
{
    match mode {
        ExecMode::Sequential => (0..len).map(f).sum(),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => (0..len).into_par_iter().map(f).sum(),
    }
}
