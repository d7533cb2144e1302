//! Order-preserving data-parallel map. With the `parallel` feature off every
//! mode runs sequentially.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parallelism {
    /// The global pool, sized to the machine.
    #[default]
    Auto,
    Sequential,
    /// A dedicated pool with this many threads; `0` means `Auto`.
    Threads(usize),
}

impl Parallelism {
    /// `0` selects `Auto`, `1` selects `Sequential`.
    pub fn from_threads(k: usize) -> Self {
        match k {
            0 => Parallelism::Auto,
            1 => Parallelism::Sequential,
            k => Parallelism::Threads(k),
        }
    }
}

/// Maps `f` over `items`, returning results in input order.
#[cfg(feature = "parallel")]
pub fn ordered_map<T, R, F>(items: &[T], mode: Parallelism, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    match mode {
        Parallelism::Sequential => items.iter().map(f).collect(),
        Parallelism::Auto | Parallelism::Threads(0) => items.par_iter().map(f).collect(),
        Parallelism::Threads(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
            Err(_) => items.par_iter().map(f).collect(),
        },
    }
}

/// Maps `f` over `items`, returning results in input order.
#[cfg(not(feature = "parallel"))]
pub fn ordered_map<T, R, F>(items: &[T], _mode: Parallelism, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_kept_in_every_mode() {
        let v: Vec<u64> = (0..1000).collect();
        let want: Vec<u64> = v.iter().map(|x| x * x).collect();
        for mode in [Parallelism::Auto, Parallelism::Sequential, Parallelism::Threads(3)] {
            assert_eq!(ordered_map(&v, mode, |x| x * x), want);
        }
    }
}
