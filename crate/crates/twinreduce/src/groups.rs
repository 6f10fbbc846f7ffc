//! Group-graph construction with optional block parallelism, and the
//! structural summary used for reduced group graphs.

use std::collections::BTreeMap;

use rayon::prelude::*;
use twinreduce_core::{graph_difference, is_edge_subset, Girth, Graph, GroupElements};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Power,
    Enhanced,
    Commuting,
    /// Enhanced power graph minus power graph.
    Difference,
}

const ROW_BLOCK: usize = 64;

/// Commuting graph with rows split into blocks across `jobs` threads. Edge
/// blocks are merged in row order, so the result does not depend on `jobs`.
pub fn commuting_graph(group: &GroupElements, jobs: usize) -> Graph {
    if jobs <= 1 {
        return group.commuting_graph();
    }
    let n = group.order();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let blocks: Vec<Vec<(usize, usize)>> = pool.install(|| {
        (0..n.div_ceil(ROW_BLOCK))
            .into_par_iter()
            .map(|b| group.commuting_edges(b * ROW_BLOCK..((b + 1) * ROW_BLOCK).min(n)))
            .collect()
    });
    Graph::from_edges(n, blocks.into_iter().flatten()).expect("indices are in range")
}

pub fn build_group_graph(group: &GroupElements, kind: GraphKind, jobs: usize) -> Result<Graph, twinreduce_core::Error> {
    Ok(match kind {
        GraphKind::Power => group.power_graph(),
        GraphKind::Enhanced => group.enhanced_power_graph(),
        GraphKind::Commuting => commuting_graph(group, jobs),
        GraphKind::Difference => {
            let power = group.power_graph();
            let enhanced = group.enhanced_power_graph();
            debug_assert!(is_edge_subset(&power, &enhanced)?);
            graph_difference(&enhanced, &power)?
        }
    })
}

/// The graph with its isolated vertices removed, and the kept vertices.
pub fn drop_isolated(g: &Graph) -> (Graph, Vec<usize>) {
    let keep: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    (g.induced_subgraph(&keep).expect("in range"), keep)
}

/// Shape of the largest connected component of a graph.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ComponentSummary {
    pub vertices: usize,
    pub edges: usize,
    pub bipartite: bool,
    /// Sizes of the two colour classes, when bipartite.
    pub class_sizes: Option<[usize; 2]>,
    /// Distinct degrees within each colour class, when bipartite.
    pub class_degrees: Option<[Vec<usize>; 2]>,
    pub degrees: Vec<usize>,
    pub semiregular: bool,
    /// `None` for a forest.
    pub girth: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    /// `component size -> number of components`.
    pub component_census: BTreeMap<usize, usize>,
    pub largest: ComponentSummary,
}

pub fn summarize(g: &Graph) -> GraphSummary {
    let components = g.connected_components();
    let mut component_census = BTreeMap::new();
    for part in components.parts() {
        *component_census.entry(part.len()).or_insert(0) += 1;
    }
    let largest_vertices = components
        .parts()
        .iter()
        .max_by_key(|p| (p.len(), std::cmp::Reverse(p[0])));
    let largest = g
        .induced_subgraph(largest_vertices.map(Vec::as_slice).unwrap_or(&[]))
        .expect("in range");
    GraphSummary {
        vertices: g.n(),
        edges: g.edge_count(),
        component_census,
        largest: summarize_component(&largest),
    }
}

fn summarize_component(g: &Graph) -> ComponentSummary {
    let colouring = g.bipartition();
    let (class_sizes, class_degrees) = match &colouring {
        Some(colour) => {
            let mut sizes = [0, 0];
            let mut degrees = [Vec::new(), Vec::new()];
            for (v, &side) in colour.iter().enumerate() {
                let c = side as usize;
                sizes[c] += 1;
                degrees[c].push(g.degree(v));
            }
            for d in degrees.iter_mut() {
                d.sort_unstable();
                d.dedup();
            }
            (Some(sizes), Some(degrees))
        }
        None => (None, None),
    };
    let semiregular = class_degrees.as_ref().is_some_and(|d| d.iter().all(|c| c.len() <= 1));
    ComponentSummary {
        vertices: g.n(),
        edges: g.edge_count(),
        bipartite: colouring.is_some(),
        class_sizes,
        class_degrees,
        degrees: g.degree_profile().distinct(),
        semiregular,
        girth: match g.girth() {
            Girth::Finite(k) => Some(k),
            Girth::Infinite => None,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_generators;
    use twinreduce_core::{enumerate_group, DEFAULT_GROUP_CAP};

    #[test]
    fn parallel_commuting_graph_matches_sequential() {
        let gens = parse_generators("(0 1 2 3 4)\n(0 1)").unwrap();
        let s5 = enumerate_group(&gens, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(s5.order(), 120);
        let sequential = s5.commuting_graph();
        for jobs in [2, 3, 8] {
            assert_eq!(commuting_graph(&s5, jobs), sequential);
        }
    }

    #[test]
    fn summary_of_cycle_plus_isolated() {
        let mut g = Graph::empty(9);
        for i in 0..6 {
            g.add_edge(i, (i + 1) % 6).unwrap();
        }
        g.add_edge(6, 7).unwrap();
        let s = summarize(&g);
        assert_eq!(s.component_census, BTreeMap::from([(1, 1), (2, 1), (6, 1)]));
        assert_eq!(s.largest.vertices, 6);
        assert_eq!(s.largest.class_sizes, Some([3, 3]));
        assert!(s.largest.semiregular);
        assert_eq!(s.largest.girth, Some(6));
        let (stripped, kept) = drop_isolated(&g);
        assert_eq!(stripped.n(), 8);
        assert_eq!(kept, (0..8).collect::<Vec<_>>());
    }
}
