//! Execution strategy for the data-parallel sweeps.
//!
//! With the `parallel` feature (default) work is split over a rayon pool;
//! without it, or with [`Execution::Sequential`], everything runs on the
//! calling thread. Both paths fold and merge in the same way, so results are
//! identical up to the order in which a failing item is discovered.

use std::ops::Range;

use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Rayon's global pool, one worker per available core.
    #[default]
    Parallel,
    ParallelWith { workers: usize },
}

impl Execution {
    pub fn from_workers(workers: Option<usize>) -> Self {
        match workers {
            Some(1) => Execution::Sequential,
            Some(w) => Execution::ParallelWith { workers: w },
            None => Execution::Parallel,
        }
    }
}

/// Folds `fold` over every index of `range` into per-worker accumulators and
/// combines them with `merge`. The first error stops all workers.
pub fn try_fold_range<A, F, M>(exec: Execution, range: Range<u64>, identity: impl Fn() -> A + Sync + Send, fold: F, merge: M) -> Result<A>
where
    A: Send,
    F: Fn(&mut A, u64) -> Result<()> + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    match exec {
        Execution::Sequential => sequential(range, identity, fold),
        #[cfg(feature = "parallel")]
        Execution::Parallel => parallel(range, identity, fold, merge),
        #[cfg(feature = "parallel")]
        Execution::ParallelWith { workers } => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers.max(1))
                .build()
                .map_err(|e| crate::Error::Input(format!("cannot start {workers} workers: {e}")))?;
            pool.install(|| parallel(range, identity, fold, merge))
        }
        #[cfg(not(feature = "parallel"))]
        _ => {
            let _ = merge;
            sequential(range, identity, fold)
        }
    }
}

fn sequential<A, F>(range: Range<u64>, identity: impl Fn() -> A, fold: F) -> Result<A>
where
    F: Fn(&mut A, u64) -> Result<()>,
{
    let mut acc = identity();
    for i in range {
        fold(&mut acc, i)?;
    }
    Ok(acc)
}

#[cfg(feature = "parallel")]
fn parallel<A, F, M>(range: Range<u64>, identity: impl Fn() -> A + Sync + Send, fold: F, merge: M) -> Result<A>
where
    A: Send,
    F: Fn(&mut A, u64) -> Result<()> + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    use rayon::prelude::*;
    range
        .into_par_iter()
        .try_fold(&identity, |mut acc, i| fold(&mut acc, i).map(|()| acc))
        .try_reduce(&identity, |a, b| Ok(merge(a, b)))
}

/// Order-preserving map over a slice.
pub fn map_slice<T, U, F>(exec: Execution, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel | Execution::ParallelWith { .. } => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}
