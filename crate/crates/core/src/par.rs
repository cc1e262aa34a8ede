//! Data-parallel helpers with a sequential fallback.
//!
//! Everything in this crate is a pure function of immutable values, so the
//! heavy inner loops (group closure frontiers, the thirteen `ν`-instances of
//! each form identity, polynomial substitution caches) parallelize with
//! rayon without changing any result. Building with
//! `--no-default-features` removes the rayon dependency entirely; the same
//! entry points then run sequentially.

/// Execution strategy for the data-parallel kernels. `Parallel` is only
/// honoured when the `parallel` feature is compiled in; it degrades to
/// sequential execution otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    Parallel,
}

impl Mode {
    /// The default mode for the current build: parallel when available.
    pub fn auto() -> Mode {
        if cfg!(feature = "parallel") {
            Mode::Parallel
        } else {
            Mode::Sequential
        }
    }
}

/// Map `f` over `items`, preserving order. The parallel path produces the
/// same vector as the sequential one; only wall-clock time differs.
pub fn map_vec<T, U, F>(mode: Mode, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if mode == Mode::Parallel {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
    }
    let _ = mode;
    items.iter().map(f).collect()
}

/// Map `f` over an index range, preserving order.
pub fn map_range<U, F>(mode: Mode, range: std::ops::Range<usize>, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if mode == Mode::Parallel {
            use rayon::prelude::*;
            return range.into_par_iter().map(f).collect();
        }
    }
    let _ = mode;
    range.map(f).collect()
}

/// First index in `0..n` satisfying `pred`, if any. The parallel path uses
/// `find_first`, which returns the same index the sequential scan would.
pub fn find_index<F>(mode: Mode, n: usize, pred: F) -> Option<usize>
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if mode == Mode::Parallel {
            use rayon::prelude::*;
            return (0..n).into_par_iter().find_first(|&i| pred(i));
        }
    }
    let _ = mode;
    (0..n).find(|&i| pred(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_matches_sequential() {
        let data: Vec<u64> = (0..500).collect();
        let seq = map_vec(Mode::Sequential, &data, |x| x * x + 1);
        let par = map_vec(Mode::auto(), &data, |x| x * x + 1);
        assert_eq!(seq, par);
        assert_eq!(
            find_index(Mode::auto(), 500, |i| data[i] > 123),
            Some(124)
        );
    }
}
