mod common;

use common::{disjoint_union, random_graphs, star, twinned_graphs};
use twinreduce_core::{
    are_isomorphic, complete_twin_reduction, is_cograph, is_twin_free, maximal_sibling_partition, replay_trace,
    staged_reduction, twin_classes, twin_kind, Graph, MergePolicy, Partition, TwinKind,
};
use twinreduce_testkit::{brute_maximal_sibling, catalog_up_to};

fn twin_relation_is_transitive(g: &Graph) {
    let n = g.n();
    for kind in [TwinKind::Open, TwinKind::Closed] {
        let same = |u: usize, v: usize| u != v && twin_kind(g, u, v).unwrap() == kind;
        for a in 0..n {
            for b in 0..n {
                if !same(a, b) {
                    continue;
                }
                for c in 0..n {
                    if c != a && same(b, c) {
                        assert!(same(a, c), "{kind} twins not transitive in {g:?}: {a} {b} {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn twin_relations_are_transitive() {
    for g in catalog_up_to(6).unwrap() {
        twin_relation_is_transitive(&g);
    }
    for g in twinned_graphs(500, 8..=12, 6, 11) {
        twin_relation_is_transitive(&g);
    }
}

#[test]
fn twin_classes_match_pairwise_kinds() {
    for g in catalog_up_to(5).unwrap().chain(twinned_graphs(100, 6..=10, 5, 12)) {
        for kind in [TwinKind::Open, TwinKind::Closed] {
            let classes = twin_classes(&g, Some(kind));
            let labels = classes.labels();
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    assert_eq!(labels[u] == labels[v], twin_kind(&g, u, v).unwrap() == kind);
                }
            }
        }
    }
}

/// Open twins of a graph are closed twins of its complement and vice versa.
#[test]
fn complement_swaps_twin_kinds() {
    for g in catalog_up_to(6).unwrap() {
        let h = g.complement();
        assert_eq!(
            twin_classes(&g, Some(TwinKind::Open)),
            twin_classes(&h, Some(TwinKind::Closed))
        );
        assert_eq!(
            twin_classes(&g, Some(TwinKind::Closed)),
            twin_classes(&h, Some(TwinKind::Open))
        );
        assert_eq!(maximal_sibling_partition(&g), maximal_sibling_partition(&h));
    }
}

#[test]
fn maximal_partition_matches_brute_force() {
    for g in catalog_up_to(5).unwrap() {
        assert_eq!(
            maximal_sibling_partition(&g),
            brute_maximal_sibling(&g).unwrap(),
            "{g:?}"
        );
    }
}

fn check_reduction(g: &Graph) {
    let det = complete_twin_reduction(g, MergePolicy::Deterministic);
    assert!(is_twin_free(&det.graph), "{g:?}");
    assert!(det.partition.is_sibling(g).unwrap());
    assert_eq!(det.partition.quotient(g).unwrap(), det.graph);
    assert_eq!(det.trace.steps.len(), g.n() - det.graph.n());
    let history = replay_trace(g, &det.trace).unwrap();
    for p in &history {
        assert!(p.is_sibling(g).unwrap());
    }
    assert_eq!(history.last().unwrap(), &det.partition);
    for seed in 0..5 {
        let other = complete_twin_reduction(g, MergePolicy::Randomized(seed));
        assert_eq!(other.partition, det.partition);
        assert_eq!(other.graph.n(), det.graph.n());
        if g.n() <= 12 {
            assert!(are_isomorphic(&other.graph, &det.graph).unwrap());
        }
        replay_trace(g, &other.trace).unwrap();
    }
}

#[test]
fn reduction_is_unique_on_small_graphs() {
    for g in catalog_up_to(5).unwrap() {
        check_reduction(&g);
    }
}

#[test]
fn reduction_is_unique_on_random_graphs() {
    for g in twinned_graphs(300, 3..=7, 5, 13) {
        check_reduction(&g);
    }
    for g in random_graphs(100, 5..=30, 14) {
        check_reduction(&g);
    }
}

#[test]
fn staged_reduction_reaches_the_maximal_partition() {
    let check = |g: &Graph| {
        let report = staged_reduction(g);
        assert_eq!(report.partition, maximal_sibling_partition(g), "{g:?}");
        assert!(is_twin_free(&report.graph));
        let mut prev = Partition::singletons(g.n()).unwrap();
        for (i, stage) in report.stages.iter().enumerate() {
            let expected = if i % 2 == 0 { TwinKind::Open } else { TwinKind::Closed };
            assert_eq!(stage.kind, expected);
            assert!(prev.is_finer(&stage.partition).unwrap());
            assert!(stage.partition.is_sibling(g).unwrap());
            assert_eq!(stage.class_sizes.iter().sum::<usize>(), prev.len());
            assert_eq!(prev.len() - stage.partition.len(), stage.merges);
            prev = stage.partition.clone();
        }
        if let Some(last) = report.stages.last() {
            assert!(last.merges > 0);
        }
    };
    for g in catalog_up_to(6).unwrap() {
        check(&g);
    }
    for g in twinned_graphs(300, 4..=8, 6, 15) {
        check(&g);
    }
}

#[test]
fn cographs_reduce_to_one_vertex() {
    for g in catalog_up_to(6).unwrap() {
        let single = maximal_sibling_partition(&g).len() == 1;
        assert_eq!(single, is_cograph(&g), "{g:?}");
    }
}

#[test]
fn pendant_duplicates_on_a_pentagon() {
    // C5 with two pendant leaves on vertex 0: the leaves are open twins and
    // nothing else merges.
    let c5 = Graph::cycle(5);
    let mut edges: Vec<_> = c5.edges().collect();
    edges.extend([(0, 5), (0, 6)]);
    let g = Graph::from_edges(7, edges).unwrap();
    let red = complete_twin_reduction(&g, MergePolicy::Deterministic);
    assert_eq!(red.graph.n(), 6);
    assert_eq!(red.trace.steps.len(), 1);
    assert_eq!(red.trace.steps[0].kind, TwinKind::Open);
    assert_eq!((red.trace.steps[0].part_a, red.trace.steps[0].part_b), (5, 6));
}

#[test]
fn star_trace_is_fixed() {
    let red = complete_twin_reduction(&star(4), MergePolicy::Deterministic);
    let steps: Vec<_> = red.trace.steps.iter().map(|s| (s.part_a, s.part_b, s.kind)).collect();
    assert_eq!(
        steps,
        [
            (1, 2, TwinKind::Open),
            (1, 3, TwinKind::Open),
            (1, 4, TwinKind::Open),
            (0, 1, TwinKind::Closed)
        ]
    );
    assert_eq!(red.graph.n(), 1);
}

#[test]
fn twin_free_components_are_kept() {
    let c5 = Graph::cycle(5);
    let g = disjoint_union(&c5, &c5);
    assert!(is_twin_free(&g));
    assert_eq!(complete_twin_reduction(&g, MergePolicy::Deterministic).graph, g);
}

#[test]
fn isolated_vertices_collapse_together() {
    let g = disjoint_union(&Graph::cycle(5), &Graph::empty(3));
    let red = complete_twin_reduction(&g, MergePolicy::Deterministic);
    assert_eq!(red.graph.n(), 6);
    assert_eq!(red.partition.parts().last().unwrap(), &vec![5, 6, 7]);
}
