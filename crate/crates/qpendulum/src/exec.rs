//! Data-parallel execution helpers.
//!
//! With the default `parallel` feature the indexed maps fan out over rayon's
//! pool; without it they degrade to plain sequential loops. Callers are
//! written so results are bit-identical either way (work is split into fixed
//! batches keyed by index, never by worker count).

/// Maps `f` over `0..n`, collecting results in index order.
#[cfg(feature = "parallel")]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

/// Maps `f` over `0..n`, collecting results in index order.
#[cfg(not(feature = "parallel"))]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

/// Sequential reference version of [`map_indexed`], always single-threaded.
///
/// Kept unconditionally so tests can assert that the parallel path produces
/// bit-identical output and benchmarks can compare the two.
pub fn map_indexed_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_matches_sequential_order() {
        let par = map_indexed(1000, |i| i * i);
        let seq = map_indexed_seq(1000, |i| i * i);
        assert_eq!(par, seq);
    }
}
