//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) these fan out over rayon's pool;
//! without it they degrade to plain iterators, bit-for-bit identical results.

/// Map a batch of independent work items.
pub(crate) fn map_collect<T, U>(items: Vec<T>, f: impl Fn(T) -> U + Sync + Send) -> Vec<U>
where
    T: Send,
    U: Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        return items.into_par_iter().map(f).collect();
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).collect()
    }
}

/// Apply `f` to each `width`-sized row of a flat buffer.
/// Small batches stay sequential; parallelism only pays off on bulk rows.
pub(crate) fn chunks_for_each<T: Send>(data: &mut [T], width: usize, f: &(impl Fn(&mut [T]) + Sync)) {
    if width == 0 || data.is_empty() {
        return;
    }
    #[cfg(feature = "parallel")]
    {
        if data.len() / width >= 64 {
            use rayon::prelude::*;
            data.par_chunks_exact_mut(width).for_each(f);
            return;
        }
    }
    for c in data.chunks_exact_mut(width) {
        f(c);
    }
}
