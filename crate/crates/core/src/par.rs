//! Execution strategy for the data-parallel loops (Weyl orbits,
//! symmetrization, per-embedding characters).
//!
//! With the `parallel` feature disabled every strategy runs sequentially.

/// How a data-parallel loop is executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    Sequential,
    #[default]
    Parallel,
}

impl Strategy {
    /// True if this strategy will actually use worker threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Strategy::Parallel
    }
}

pub(crate) fn map<T, U, F>(items: &[T], strategy: Strategy, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = strategy;
    items.iter().map(f).collect()
}

pub(crate) fn any<T, F>(items: &[T], strategy: Strategy, f: F) -> bool
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().any(f);
    }
    let _ = strategy;
    items.iter().any(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let xs: Vec<u64> = (0..1000).collect();
        let seq = map(&xs, Strategy::Sequential, |x| x * x);
        let par = map(&xs, Strategy::Parallel, |x| x * x);
        assert_eq!(seq, par);
        assert!(any(&xs, Strategy::Parallel, |&x| x == 999));
        assert!(!any(&xs, Strategy::Sequential, |&x| x > 999));
    }
}
