//! Data-parallel helpers. With the `parallel` feature (default) these
//! fan work out over rayon; without it they run sequentially. Every
//! caller merges results in branch order, so output never depends on the
//! thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Applies `f` to each index and concatenates the results in index order.
pub(crate) fn flat_map_indexed<U: Send>(
    count: usize,
    f: impl Fn(usize) -> Vec<U> + Sync + Send,
) -> Vec<U> {
    #[cfg(feature = "parallel")]
    {
        (0..count).into_par_iter().flat_map_iter(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..count).flat_map(f).collect()
    }
}

/// Maps `f` over the slice, preserving order.
pub(crate) fn map_slice<T: Sync, U: Send>(
    items: &[T],
    f: impl Fn(&T) -> U + Sync + Send,
) -> Vec<U> {
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Keeps the `f`-images that are `Some`, in input order.
pub(crate) fn filter_map_indexed<U: Send>(
    count: usize,
    f: impl Fn(usize) -> Option<U> + Sync + Send,
) -> Vec<U> {
    #[cfg(feature = "parallel")]
    {
        (0..count).into_par_iter().filter_map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..count).filter_map(f).collect()
    }
}
