//! Data-parallel helpers. With the `parallel` feature (on by default) work is
//! spread over the rayon pool; without it, or when [`Execution::Sequential`]
//! is requested, the same closures run on the calling thread. Results never
//! depend on the execution mode.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Execution {
    #[default]
    Parallel,
    Sequential,
}

impl Execution {
    /// The mode actually used: `Parallel` degrades to `Sequential` when the
    /// crate is built without the `parallel` feature.
    pub fn effective(self) -> Execution {
        if cfg!(feature = "parallel") {
            self
        } else {
            Execution::Sequential
        }
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec.effective() {
        #[cfg(feature = "parallel")]
        Execution::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}

/// Maps every index of `range` and folds the results with `reduce`, which
/// must be associative and commutative for the outcome to be independent of
/// scheduling.
pub fn map_reduce<R, I, M, F>(exec: Execution, range: Range<usize>, identity: I, map: M, reduce: F) -> R
where
    R: Send,
    I: Fn() -> R + Sync + Send,
    M: Fn(usize) -> R + Sync + Send,
    F: Fn(R, R) -> R + Sync + Send,
{
    match exec.effective() {
        #[cfg(feature = "parallel")]
        Execution::Parallel => range.into_par_iter().map(map).reduce(identity, reduce),
        _ => range.map(map).fold(identity(), reduce),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let items: Vec<u64> = (0..1000).collect();
        let a = map(Execution::Parallel, &items, |x| x * x);
        let b = map(Execution::Sequential, &items, |x| x * x);
        assert_eq!(a, b);
        let sum = |exec| map_reduce(exec, 0..1000, || 0u64, |i| i as u64, |a, b| a + b);
        assert_eq!(sum(Execution::Parallel), 499_500);
        assert_eq!(sum(Execution::Sequential), 499_500);
    }
}
