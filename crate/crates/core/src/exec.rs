//! Data-parallel fan-out with a sequential fallback.
//!
//! Independent work units (corpus entries, μ samples, candidate arcs,
//! randomized sweeps) go through these helpers. With the `parallel` feature
//! (default) `ExecMode::Parallel` fans out on the rayon pool; without it
//! both modes run sequentially, so downstream results are identical either
//! way: every random draw happens before the fan-out and results are joined
//! in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        ExecMode::Parallel
    }
}

/// Maps `f` over `items`, preserving input order.
pub fn map_items<T, U, F>(mode: ExecMode, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    #[cfg(feature = "parallel")]
    if mode == ExecMode::Parallel {
        return items.par_iter().map(&f).collect();
    }
    let _ = mode;
    items.iter().map(&f).collect()
}

/// First `Some` result in input order.
pub fn find_first_map<T, U, F>(mode: ExecMode, items: &[T], f: F) -> Option<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Option<U> + Sync,
{
    #[cfg(feature = "parallel")]
    if mode == ExecMode::Parallel {
        return items.par_iter().filter_map(&f).find_first(|_| true);
    }
    let _ = mode;
    items.iter().find_map(&f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let items: Vec<u64> = (0..64).collect();
        let f = |x: &u64| x * x + 1;
        assert_eq!(
            map_items(ExecMode::Sequential, &items, f),
            map_items(ExecMode::Parallel, &items, f)
        );
    }

    #[test]
    fn find_first_is_by_index() {
        let items: Vec<u64> = (0..256).collect();
        let pick = |x: &u64| (*x % 7 == 3).then_some(*x);
        assert_eq!(find_first_map(ExecMode::Parallel, &items, pick), Some(3));
        assert_eq!(find_first_map(ExecMode::Sequential, &items, pick), Some(3));
    }
}
