//! Data-parallel execution switch.
//!
//! With the `parallel` feature (on by default) the row loops of matrix
//! products and closure updates, and the sample loop of interval exactness
//! checks, run on the rayon pool. Without it every path is sequential.
//! Results are identical either way: each output cell is accumulated in a
//! fixed order by a single task.

/// How a kernel distributes its outer loop.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Execution {
    /// Parallel when the `parallel` feature is on, the pool has more than one
    /// thread and the work is large enough.
    #[default]
    Auto,
    Sequential,
    /// Parallel whenever the `parallel` feature is on.
    Parallel,
}

/// Below this many inner products per kernel call, `Auto` stays sequential.
pub(crate) const AUTO_THRESHOLD: usize = 1 << 15;

impl Execution {
    pub(crate) fn is_parallel(self, work: usize) -> bool {
        cfg!(feature = "parallel")
            && match self {
                Execution::Auto => work >= AUTO_THRESHOLD && pool_threads() > 1,
                Execution::Sequential => false,
                Execution::Parallel => true,
            }
    }
}

#[cfg(feature = "parallel")]
fn pool_threads() -> usize {
    rayon::current_num_threads()
}

#[cfg(not(feature = "parallel"))]
fn pool_threads() -> usize {
    1
}

/// Applies `f(row_index, row)` to every `width`-long row of `data`.
pub(crate) fn for_each_row<E, F>(data: &mut [E], width: usize, parallel: bool, f: F)
where
    E: Send,
    F: Fn(usize, &mut [E]) + Sync + Send,
{
    if width == 0 {
        return;
    }
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        data.par_chunks_mut(width)
            .enumerate()
            .for_each(|(i, row)| f(i, row));
        return;
    }
    let _ = parallel;
    for (i, row) in data.chunks_mut(width).enumerate() {
        f(i, row);
    }
}

/// Maps `f` over `0..n`, preserving index order in the result.
pub(crate) fn map_indices<T, F>(n: usize, parallel: bool, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = parallel;
    (0..n).map(f).collect()
}
