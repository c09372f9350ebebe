//! Data-parallel helpers. With the `parallel` feature the maps run on the
//! rayon pool; without it, or with `threads == 1`, they run in order on the
//! calling thread. Output order always matches input order.

/// Maps `f` over `items`, preserving order.
///
/// `threads` of 0 means "use the global pool", 1 forces sequential
/// execution, anything larger builds a dedicated pool of that size.
pub fn map<T, U, F>(items: &[T], threads: usize, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        if threads != 1 {
            if threads == 0 {
                return items.par_iter().map(&f).collect();
            }
            if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
                return pool.install(|| items.par_iter().map(&f).collect());
            }
        }
    }
    let _ = threads;
    items.iter().map(f).collect()
}

/// Whether [`map`] can run in parallel in this build.
pub const fn parallel_enabled() -> bool {
    cfg!(feature = "parallel")
}
