//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) work is spread over a rayon pool;
//! without it, or with [`Jobs::sequential`], everything runs on the calling
//! thread. Both paths return results in input order, so answers do not depend
//! on the thread count.

/// Requested degree of parallelism. `0` means "all available cores".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Jobs(pub usize);

impl Jobs {
    pub const ALL: Jobs = Jobs(0);

    pub fn sequential() -> Self {
        Jobs(1)
    }

    /// `REPWORDS_JOBS` when set and valid, otherwise `fallback`.
    pub fn from_env_or(fallback: Jobs) -> Self {
        std::env::var("REPWORDS_JOBS")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Jobs)
            .unwrap_or(fallback)
    }

    pub fn is_sequential(self) -> bool {
        self.0 == 1 || !cfg!(feature = "parallel")
    }

    /// Maps `f` over `items`, preserving order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if !self.is_sequential() {
            use rayon::prelude::*;
            return self.install(|| items.par_iter().map(&f).collect());
        }
        items.iter().map(f).collect()
    }

    /// First item (in input order) for which `f` returns `Some`.
    pub fn find_map_first<T, R, F>(self, items: &[T], f: F) -> Option<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if !self.is_sequential() {
            use rayon::prelude::*;
            return self.install(|| items.par_iter().find_map_first(&f));
        }
        items.iter().find_map(f)
    }

    #[cfg(feature = "parallel")]
    fn install<R: Send>(self, op: impl FnOnce() -> R + Send) -> R {
        if self.0 == 0 {
            return op();
        }
        match rayon::ThreadPoolBuilder::new().num_threads(self.0).build() {
            Ok(pool) => pool.install(op),
            Err(_) => op(),
        }
    }
}
