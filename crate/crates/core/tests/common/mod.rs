#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twinreduce_core::Graph;
use twinreduce_testkit::random_graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random graphs with a mix of densities, so that twins are common.
pub fn random_graphs(count: usize, n_range: std::ops::RangeInclusive<usize>, seed: u64) -> Vec<Graph> {
    let mut rng = rng(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(n_range.clone());
            let p = [0.15, 0.5, 0.85][i % 3];
            random_graph(n, p, &mut rng)
        })
        .collect()
}

pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
}

pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.n();
    Graph::from_edges(
        a.n() + b.n(),
        a.edges().chain(b.edges().map(|(u, v)| (u + shift, v + shift))),
    )
    .unwrap()
}

/// Grows `g` by `extra` vertices, each an open or closed twin of a random
/// existing vertex, so that reductions have real work to do.
pub fn with_twins(g: &Graph, extra: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = g.clone();
    for _ in 0..extra {
        let n = g.n();
        let v = rng.gen_range(0..n);
        let closed = rng.gen_bool(0.5);
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        edges.extend(g.neighbors(v).map(|u| (u, n)));
        if closed {
            edges.push((v, n));
        }
        g = Graph::from_edges(n + 1, edges).unwrap();
    }
    g
}

/// Random graphs with planted twins, `base` vertices before planting.
pub fn twinned_graphs(count: usize, base: std::ops::RangeInclusive<usize>, extra: usize, seed: u64) -> Vec<Graph> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(base.clone());
            let g = random_graph(n, 0.5, &mut rng);
            let k = rng.gen_range(0..=extra);
            with_twins(&g, k, &mut rng)
        })
        .collect()
}
