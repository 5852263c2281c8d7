//! Worker-count control for the parallel kernels.

/// Runs `f` on a dedicated pool of `workers` threads. Census and batch
/// routines called inside `f` use that pool.
pub fn with_workers<R, F>(workers: usize, f: F) -> R
where
    F: FnOnce() -> R + Send,
    R: Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool construction");
    pool.install(f)
}
