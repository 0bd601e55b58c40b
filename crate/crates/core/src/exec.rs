//! Execution-mode switch between the rayon data-parallel path and the plain
//! sequential fallback.
//!
//! With the `parallel` feature enabled (the default) [`ExecMode::Parallel`]
//! fans work out over a rayon pool; [`ExecMode::Sequential`] always runs the
//! plain iterator path. Without the feature both modes are sequential, so the
//! crate builds with no rayon dependency at all. Output order is the input
//! order in every mode, which keeps reports deterministic.

/// How independent work items are scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    /// Rayon work-stealing with an optional thread cap (`None` = rayon default).
    Parallel { jobs: Option<usize> },
}

impl ExecMode {
    pub fn parallel() -> Self {
        ExecMode::Parallel { jobs: None }
    }

    /// Resolve a `--jobs` style knob: 0 or 1 means sequential.
    pub fn from_jobs(jobs: usize) -> Self {
        if jobs <= 1 {
            ExecMode::Sequential
        } else {
            ExecMode::Parallel { jobs: Some(jobs) }
        }
    }
}

/// Map `f` over `items`, preserving input order in the output.
pub fn map_collect<T, U, F>(mode: ExecMode, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    match mode {
        ExecMode::Sequential => items.into_iter().map(f).collect(),
        ExecMode::Parallel { jobs } => parallel_map(items, f, jobs),
    }
}

#[cfg(feature = "parallel")]
fn parallel_map<T, U, F>(items: Vec<T>, f: F, jobs: Option<usize>) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    match jobs {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .expect("thread pool construction");
            pool.install(|| items.into_par_iter().map(f).collect())
        }
        None => items.into_par_iter().map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, U, F>(items: Vec<T>, f: F, _jobs: Option<usize>) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved_in_both_modes() {
        let input: Vec<u64> = (0..200).collect();
        let seq = map_collect(ExecMode::Sequential, input.clone(), |x| x * x);
        let par = map_collect(ExecMode::parallel(), input, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[7], 49);
    }

    #[test]
    fn jobs_knob_selects_mode() {
        assert_eq!(ExecMode::from_jobs(1), ExecMode::Sequential);
        assert_eq!(ExecMode::from_jobs(4), ExecMode::Parallel { jobs: Some(4) });
    }
}
