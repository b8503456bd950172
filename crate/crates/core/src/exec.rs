//! Pluggable execution of independent work items.

use alloc::vec::Vec;

/// Runs `f` over every item and returns the results in input order.
pub trait Executor: Sync {
    fn run<T, R, F>(&self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send;
}

/// In-thread executor.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn run<T, R, F>(&self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        items.into_iter().map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn sequential_preserves_order() {
        assert_eq!(Sequential.run(vec![3, 1, 2], |x| x * 10), vec![30, 10, 20]);
    }
}
