mod common;

use common::{disjoint_union, random_graphs, twinned_graphs};
use num_bigint::BigUint;
use twinreduce_core::{
    automorphism_count, is_cograph, is_twin_free, kernel_order, normal_series_report, verify_theorem3, Graph, TwinKind,
};
use twinreduce_testkit::catalog_up_to;

fn divides(a: u64, b: &BigUint) -> bool {
    (b % BigUint::from(a)) == BigUint::from(0u32)
}

fn check(g: &Graph) {
    let c = verify_theorem3(g).unwrap();
    assert!(c.passed(), "{g:?}: {c:?}");
    assert_eq!(c.aut_order, automorphism_count(g).unwrap());
    assert_eq!(c.aut_order % c.kernel_order, 0);
    assert_eq!(c.first_stage_actual % c.first_stage_expected, 0);
    assert_eq!(c.kernel_order % c.first_stage_actual, 0);

    let report = normal_series_report(g);
    assert!(
        divides(c.kernel_order, &report.n_order),
        "{g:?}: {c:?} {}",
        report.n_order
    );
    if is_twin_free(g) {
        assert_eq!(c.kernel_order, 1);
        assert!(report.stages.is_empty());
    }
    if is_cograph(g) {
        assert_eq!(c.kernel_order, c.aut_order);
    }
    if let Some(first) = report.stages.first() {
        assert_eq!(first.kind, TwinKind::Open);
        assert_eq!(first.factor_order, BigUint::from(c.first_stage_expected));
    }
}

#[test]
fn kernel_checks_hold_on_all_small_graphs() {
    for g in catalog_up_to(5).unwrap() {
        check(&g);
    }
}

#[test]
fn kernel_checks_hold_on_random_graphs() {
    for g in random_graphs(150, 6..=7, 31) {
        check(&g);
    }
    for g in twinned_graphs(150, 3..=5, 4, 32) {
        check(&g);
    }
}

#[test]
fn series_bounds_the_kernel_of_clique_unions() {
    let union_of = |sizes: &[usize]| {
        sizes
            .iter()
            .fold(Graph::empty(0), |acc, &k| disjoint_union(&acc, &Graph::complete(k)))
    };
    // Equal cliques: the closed stage and the open stage on the quotient
    // account for every automorphism.
    let g = union_of(&[3, 3]);
    assert_eq!(normal_series_report(&g).n_order, BigUint::from(72u32));
    assert_eq!(kernel_order(&g).unwrap(), 72);

    // Unequal cliques cannot be swapped, so the series only bounds |N|.
    let g = union_of(&[3, 2, 2, 1]);
    let report = normal_series_report(&g);
    assert_eq!(report.n_order, BigUint::from(576u32));
    assert_eq!(kernel_order(&g).unwrap(), 48);
    assert_eq!(automorphism_count(&g).unwrap(), 48);
}

#[test]
fn pentagon_has_trivial_kernel() {
    let c = verify_theorem3(&Graph::cycle(5)).unwrap();
    assert_eq!((c.aut_order, c.kernel_order, c.reduced_aut_order), (10, 1, 10));
}

#[test]
fn size_guard_is_enforced() {
    assert!(verify_theorem3(&Graph::empty(11)).is_err());
    assert!(kernel_order(&Graph::empty(13)).is_err());
}
