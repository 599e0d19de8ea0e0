//! Data-parallel helpers. With the `parallel` feature these run on a rayon
//! pool; without it they are plain sequential loops with the same results.

/// Order-preserving map.
#[cfg(feature = "parallel")]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// Runs `op` with at most `jobs` worker threads. `jobs == 1` (or a build
/// without the `parallel` feature) runs everything sequentially.
#[cfg(feature = "parallel")]
pub fn with_jobs<R, F>(jobs: usize, op: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    let jobs = jobs.max(1);
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(op),
        Err(_) => op(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_jobs<R, F>(_jobs: usize, op: F) -> R
where
    F: FnOnce() -> R,
{
    op()
}

/// Number of workers used when the caller does not choose.
pub fn default_jobs() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_keeps_order() {
        let v: Vec<u32> = (0..100).collect();
        let out = with_jobs(4, || map(&v, |x| x * 2));
        assert_eq!(out, (0..100).map(|x| x * 2).collect::<Vec<_>>());
    }
}
