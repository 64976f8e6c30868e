//! Data-parallel helpers with a sequential fallback.
//!
//! Batch work (direction samples, greedy restarts, random Morse runs) goes
//! through [`Execution::map_indexed`]. Results are always returned in index
//! order, so output never depends on the thread schedule. Without the
//! `parallel` feature both variants run sequentially.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Evaluates `f(0..n)` and collects the results in index order.
    pub fn map_indexed<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            Execution::Sequential => (0..n).map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                (0..n).into_par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            Execution::Parallel => (0..n).map(f).collect(),
        }
    }

    /// Smallest index whose result is `Some`, with that result. Every index
    /// below the answer is evaluated, so the answer is schedule independent.
    pub fn find_first<T, F>(self, n: usize, f: F) -> Option<(usize, T)>
    where
        T: Send,
        F: Fn(usize) -> Option<T> + Sync + Send,
    {
        match self {
            Execution::Sequential => (0..n).find_map(|i| f(i).map(|t| (i, t))),
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                (0..n).into_par_iter().find_map_first(|i| f(i).map(|t| (i, t)))
            }
            #[cfg(not(feature = "parallel"))]
            Execution::Parallel => (0..n).find_map(|i| f(i).map(|t| (i, t))),
        }
    }
}

/// Mixes a base seed with a worker index (splitmix64 finalizer).
pub fn derive_seed(base: u64, index: u64) -> u64 {
    let mut z = base ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree() {
        let seq = Execution::Sequential.map_indexed(100, |i| i * i);
        let par = Execution::Parallel.map_indexed(100, |i| i * i);
        assert_eq!(seq, par);
        let hit = |i: usize| (i % 7 == 6).then_some(i);
        assert_eq!(Execution::Parallel.find_first(50, hit), Some((6, 6)));
        assert_eq!(Execution::Sequential.find_first(50, hit), Some((6, 6)));
    }

    #[test]
    fn derived_seeds_differ() {
        assert_ne!(derive_seed(0, 0), derive_seed(0, 1));
        assert_eq!(derive_seed(5, 3), derive_seed(5, 3));
    }
}
