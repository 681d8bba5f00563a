//! Batch analysis over many `(graph, set)` instances and a seeded random
//! corpus of small connected graphs.
//!
//! [`analyze_many`] fans out over instances with rayon when the `parallel`
//! feature is enabled; [`analyze_many_sequential`] is always sequential. Both
//! return results in input order.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::{analyze, Analysis};
use crate::config::Config;
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::par;

#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: Graph,
    pub set: VertexSet,
}

pub fn analyze_many(instances: &[Instance], cfg: &Config) -> Vec<Result<Analysis>> {
    par::map_slice(instances, |inst| analyze(&inst.graph, &inst.set, cfg))
}

pub fn analyze_many_sequential(instances: &[Instance], cfg: &Config) -> Vec<Result<Analysis>> {
    instances
        .iter()
        .map(|inst| analyze(&inst.graph, &inst.set, cfg))
        .collect()
}

/// Random connected graph: a random recursive tree plus each remaining pair
/// independently with probability `extra`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, extra: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            let in_tree = edges.iter().any(|&(a, b)| (a, b) == (u, v));
            if !in_tree && rng.gen_bool(extra) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("tree plus edges is connected and simple")
}

/// A random nonempty vertex set; small sets are favoured.
pub fn random_set<R: Rng>(rng: &mut R, n: usize) -> VertexSet {
    let size = if rng.gen_bool(0.5) {
        rng.gen_range(1..=2.min(n))
    } else {
        rng.gen_range(1..=n)
    };
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.shuffle(rng);
    VertexSet::new(vertices.into_iter().take(size), n).expect("nonempty in range")
}

/// `count` instances with `3 ≤ n ≤ max_n`, fully determined by `seed`.
pub fn random_corpus(seed: u64, count: usize, max_n: usize) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_n = max_n.max(3);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(3..=max_n);
            let extra = rng.gen_range(0.0..0.6);
            let graph = random_connected_graph(&mut rng, n, extra);
            let set = random_set(&mut rng, n);
            Instance { graph, set }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_reproducible() {
        let a = random_corpus(7, 20, 12);
        let b = random_corpus(7, 20, 12);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.graph, y.graph);
            assert_eq!(x.set, y.set);
        }
        assert!(a.iter().all(|i| i.graph.n() >= 3 && i.graph.n() <= 12));
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let corpus = random_corpus(3, 16, 10);
        let cfg = Config::default();
        let par = analyze_many(&corpus, &cfg);
        let seq = analyze_many_sequential(&corpus, &cfg);
        for (p, s) in par.iter().zip(&seq) {
            let (p, s) = (p.as_ref().unwrap(), s.as_ref().unwrap());
            assert_eq!(p.report.overall, s.report.overall);
            assert_eq!(p.local.mult(), s.local.mult());
        }
    }
}
