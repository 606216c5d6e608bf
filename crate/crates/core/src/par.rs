//! Execution strategy for the data-parallel kernels.
//!
//! Every hot loop in the crate (enumeration, oracle sums, sampling,
//! verification sweeps) goes through [`Exec`]. With the `parallel` feature
//! the work runs on the rayon pool; without it, or when
//! [`Exec::Sequential`] is requested, the same closures run in order on the
//! calling thread. Results are always collected in input order, so output
//! never depends on the strategy.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// `f` applied to every item, results in input order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    /// `f(i)` for `i in 0..len`, results in index order.
    pub fn map_range<R, F>(self, len: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => (0..len).into_par_iter().map(f).collect(),
            _ => (0..len).map(f).collect(),
        }
    }

    /// Chunked fold over a slice followed by an order-independent merge.
    pub fn fold_chunks<T, A, F, M>(self, items: &[T], chunk: usize, init: A, f: F, merge: M) -> A
    where
        T: Sync,
        A: Send + Clone + Sync,
        F: Fn(&mut A, &T) + Sync + Send,
        M: Fn(A, A) -> A + Sync + Send,
    {
        let chunk = chunk.max(1);
        let run = |c: &[T]| {
            let mut acc = init.clone();
            for t in c {
                f(&mut acc, t);
            }
            acc
        };
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items
                .par_chunks(chunk)
                .map(run)
                .reduce(|| init.clone(), &merge),
            _ => items.chunks(chunk).map(run).fold(init.clone(), &merge),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let v: Vec<u64> = (0..10_000).collect();
        for exec in [Exec::Sequential, Exec::Parallel] {
            assert_eq!(exec.map(&v, |x| x * 2)[9_999], 19_998);
            assert_eq!(exec.map_range(5, |i| i * i), vec![0, 1, 4, 9, 16]);
            let s = exec.fold_chunks(&v, 64, 0u64, |a, x| *a += x, |a, b| a + b);
            assert_eq!(s, 49_995_000);
        }
    }
}
