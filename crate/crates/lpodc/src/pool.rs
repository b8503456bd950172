//! Thread-pool backed [`Executor`].

use lpodc_core::Executor;
use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};

/// Runs work in the calling thread, or on a dedicated rayon pool when more
/// than one worker is requested. Results keep the input order either way.
pub enum Pool {
    Inline,
    Threads(ThreadPool),
}

impl Pool {
    pub fn new(workers: usize) -> Self {
        if workers <= 1 {
            return Pool::Inline;
        }
        match ThreadPoolBuilder::new().num_threads(workers).build() {
            Ok(p) => Pool::Threads(p),
            Err(_) => Pool::Inline,
        }
    }
}

impl Executor for Pool {
    fn run<T, R, F>(&self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        match self {
            Pool::Inline => items.into_iter().map(f).collect(),
            Pool::Threads(pool) => pool.install(|| items.into_par_iter().map(f).collect()),
        }
    }
}
