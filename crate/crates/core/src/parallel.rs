//! Data-parallel helpers. With the `parallel` feature the work runs on a
//! rayon pool; without it, or with `jobs == 1`, everything runs in order on
//! the calling thread. Results are always returned in input order.

/// Number of workers used when the caller asks for `0` jobs.
pub fn default_jobs() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

pub fn is_parallel_build() -> bool {
    cfg!(feature = "parallel")
}

/// Maps `f` over `items` with up to `jobs` workers (`0` = all cores).
pub fn map<T, R, F>(items: &[T], jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if jobs != 1 && items.len() > 1 {
            use rayon::prelude::*;
            return with_pool(jobs, || items.par_iter().map(&f).collect());
        }
    }
    let _ = jobs;
    items.iter().map(f).collect()
}

/// Runs `op` inside a pool of `jobs` threads (`0` = the global pool).
#[cfg(feature = "parallel")]
pub(crate) fn with_pool<R: Send>(jobs: usize, op: impl FnOnce() -> R + Send) -> R {
    if jobs == 0 {
        return op();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(op),
        Err(_) => op(),
    }
}
