//! Brute-force oracles for twinreduce.
//!
//! Everything here works from definitions: enumerate, filter, fold. None of
//! it calls into the twin-reduction code, so the rest of the workspace can be
//! tested against it. All of it is exponential and size-guarded.

use rand::Rng;
use twinreduce_core::{Error, Graph, Partition};

pub const MAX_PARTITION_POINTS: usize = 8;
pub const MAX_CATALOG_VERTICES: usize = 6;
pub const MAX_SIBLING_VERTICES: usize = 7;

fn guard(n: usize, limit: usize) -> Result<(), Error> {
    if n > limit {
        Err(Error::SizeGuard { n, limit })
    } else {
        Ok(())
    }
}

/// Bell numbers via the Bell triangle.
pub fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        row = next;
    }
    row[0]
}

/// Every set partition of `0..n`, once each, as restricted-growth strings:
/// `a[0] = 0` and `a[i] <= 1 + max(a[..i])`.
pub fn all_partitions(n: usize) -> Result<impl Iterator<Item = Partition>, Error> {
    guard(n, MAX_PARTITION_POINTS)?;
    let mut next = Some(vec![0usize; n]);
    Ok(std::iter::from_fn(move || {
        let current = next.take()?;
        next = successor(&current);
        Some(Partition::from_labels(&current))
    }))
}

fn successor(rgs: &[usize]) -> Option<Vec<usize>> {
    let mut out = rgs.to_vec();
    for i in (1..out.len()).rev() {
        let ceiling = out[..i].iter().max().unwrap() + 1;
        if out[i] < ceiling {
            out[i] += 1;
            out[i + 1..].iter_mut().for_each(|x| *x = 0);
            return Some(out);
        }
    }
    None
}

/// All `2^(n(n-1)/2)` labelled graphs on `0..n`. Bit `k` of the index
/// switches on the `k`-th pair in the order (0,1), (0,2), (1,2), (0,3), ...
pub struct GraphCatalog {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
}

impl GraphCatalog {
    pub fn new(n: usize) -> Result<Self, Error> {
        guard(n, MAX_CATALOG_VERTICES)?;
        let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        Ok(GraphCatalog { n, pairs, next: 0 })
    }

    pub fn len(&self) -> u64 {
        1 << self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn graph(&self, index: u64) -> Graph {
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| index >> k & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(self.n, edges).expect("pairs are in range")
    }
}

impl Iterator for GraphCatalog {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.len() {
            return None;
        }
        let g = self.graph(self.next);
        self.next += 1;
        Some(g)
    }
}

/// All graphs on at most `max_n` vertices (including the 1-vertex graph).
pub fn catalog_up_to(max_n: usize) -> Result<impl Iterator<Item = Graph>, Error> {
    guard(max_n, MAX_CATALOG_VERTICES)?;
    Ok((1..=max_n).flat_map(|n| GraphCatalog::new(n).expect("guarded")))
}

/// The sibling partitions of `g`, in enumeration order.
pub fn all_sibling_partitions(g: &Graph) -> Result<Vec<Partition>, Error> {
    guard(g.n(), MAX_SIBLING_VERTICES)?;
    let mut out = Vec::new();
    for p in all_partitions(g.n())? {
        if is_sibling_by_definition(g, &p) {
            out.push(p);
        }
    }
    Ok(out)
}

/// Join of every sibling partition. Panics if the fold is not itself a
/// sibling partition or some sibling partition is not finer than it.
pub fn brute_maximal_sibling(g: &Graph) -> Result<Partition, Error> {
    let siblings = all_sibling_partitions(g)?;
    let mut acc = Partition::singletons(g.n())?;
    for p in &siblings {
        acc = union_find_join(&acc, p);
    }
    assert!(
        is_sibling_by_definition(g, &acc),
        "join of sibling partitions is not sibling"
    );
    assert!(siblings.iter().all(|p| p.is_finer(&acc).unwrap()));
    Ok(acc)
}

/// Sibling test straight from the two rules, with the P4 rule checked over
/// every 4-subset of every part.
pub fn is_sibling_by_definition(g: &Graph, p: &Partition) -> bool {
    let parts_ok = p
        .parts()
        .iter()
        .all(|part| !has_induced_p4_brute(&g.induced_subgraph(part).unwrap()));
    let label = p.labels();
    let between_ok = p.parts().iter().all(|part| {
        (0..g.n()).filter(|&u| label[u] != label[part[0]]).all(|u| {
            let hits = part.iter().filter(|&&v| g.has_edge(u, v)).count();
            hits == 0 || hits == part.len()
        })
    });
    parts_ok && between_ok
}

/// True iff some 4 vertices induce a path: 3 edges with degrees 1, 1, 2, 2.
pub fn has_induced_p4_brute(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let quad = [a, b, c, d];
                    let mut degrees: Vec<usize> = quad
                        .iter()
                        .map(|&x| quad.iter().filter(|&&y| y != x && g.has_edge(x, y)).count())
                        .collect();
                    degrees.sort_unstable();
                    if degrees == [1, 1, 2, 2] {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Join by union-find, independent of the graph-components route.
pub fn union_find_join(p: &Partition, q: &Partition) -> Partition {
    assert_eq!(p.n(), q.n());
    let mut parent: Vec<usize> = (0..p.n()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut x = x;
        while parent[x] != root {
            let next = parent[x];
            parent[x] = root;
            x = next;
        }
        root
    }
    for part in p.parts().iter().chain(q.parts()) {
        for &v in &part[1..] {
            let (a, b) = (find(&mut parent, part[0]), find(&mut parent, v));
            parent[a.max(b)] = a.min(b);
        }
    }
    let labels: Vec<usize> = (0..p.n()).map(|v| find(&mut parent, v)).collect();
    Partition::from_labels(&labels)
}

/// Shortest cycle by trying each length from 3 upwards with a depth-first
/// search for a simple cycle through its smallest vertex.
pub fn brute_girth(g: &Graph) -> Option<usize> {
    fn extend(g: &Graph, start: usize, path: &mut Vec<usize>, len: usize) -> bool {
        let last = *path.last().unwrap();
        if path.len() == len {
            return g.has_edge(last, start);
        }
        let next: Vec<usize> = g.neighbors(last).filter(|&w| w > start && !path.contains(&w)).collect();
        for w in next {
            path.push(w);
            if extend(g, start, path, len) {
                return true;
            }
            path.pop();
        }
        false
    }
    (3..=g.n()).find(|&len| (0..g.n()).any(|s| extend(g, s, &mut vec![s], len)))
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Applies the vertex map `perm` (vertex `v` becomes `perm[v]`).
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut perm: Vec<usize> = (0..g.n()).collect();
    loop {
        if g.edges().all(|(u, v)| h.has_edge(perm[u], perm[v])) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

/// Brute-force automorphism count over all `n!` permutations.
pub fn brute_automorphism_count(g: &Graph) -> u64 {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    let mut count = 0;
    loop {
        if g.edges().all(|(u, v)| g.has_edge(perm[u], perm[v])) {
            count += 1;
        }
        if !next_permutation(&mut perm) {
            return count;
        }
    }
}

/// Lexicographic successor; false after the last permutation.
pub fn next_permutation(a: &mut [usize]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}
