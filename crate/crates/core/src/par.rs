//! Order-preserving map over a slice: rayon when the
//! `parallel` feature is on, a plain iterator otherwise.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub(crate) fn map_slice<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    let out = items.par_iter().map(f).collect();

    #[cfg(not(feature = "parallel"))]
    let out = items.iter().map(f).collect();

    out
}
