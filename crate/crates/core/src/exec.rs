//! Execution strategy: rayon work-stealing when the `parallel` feature is
//! enabled, plain iteration otherwise. Results are always returned in input
//! order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Rayon,
}

/// Row-parallel elimination only pays off above this many entries.
pub const PAR_ELIMINATION_THRESHOLD: usize = 64 * 64;

pub fn map<T, R, F>(strategy: Strategy, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Send + Sync,
{
    match strategy {
        Strategy::Sequential => items.into_iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Strategy::Rayon => items.into_par_iter().map(f).collect(),
    }
}

/// Apply `f(row_index, row)` to every `width`-sized chunk of `data`.
pub fn for_each_row<T, F>(strategy: Strategy, data: &mut [T], width: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Send + Sync,
{
    if width == 0 {
        return;
    }
    match strategy {
        Strategy::Sequential => data.chunks_mut(width).enumerate().for_each(|(i, r)| f(i, r)),
        #[cfg(feature = "parallel")]
        Strategy::Rayon => {
            if data.len() < PAR_ELIMINATION_THRESHOLD {
                data.chunks_mut(width).enumerate().for_each(|(i, r)| f(i, r))
            } else {
                data.par_chunks_mut(width).enumerate().for_each(|(i, r)| f(i, r))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let out = map(Strategy::default(), (0..100).collect(), |x: i32| x * 2);
        assert_eq!(out, (0..100).map(|x| x * 2).collect::<Vec<_>>());
        let seq = map(Strategy::Sequential, (0..100).collect(), |x: i32| x * 2);
        assert_eq!(out, seq);
    }
}
