//! Data-parallel helpers. With the `parallel` feature off every entry point
//! runs sequentially and [`Execution::Parallel`] degrades to a plain loop.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// Maximum of `f` over `lo..=hi`, 0 for an empty range.
pub(crate) fn max_over<F>(exec: Execution, lo: u32, hi: u32, f: F) -> u32
where
    F: Fn(u32) -> u32 + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (lo..=hi).into_par_iter().map(f).max().unwrap_or(0)
        }
        _ => (lo..=hi).map(f).max().unwrap_or(0),
    }
}

/// `f` applied to every item of `0..n`, results concatenated in index order.
pub(crate) fn flat_map_indexed<T, F>(exec: Execution, n: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Vec<T> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().flat_map_iter(f).collect()
        }
        _ => (0..n).flat_map(f).collect(),
    }
}
