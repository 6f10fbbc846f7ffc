//! Automorphism-group structure from staged twin reduction.
//!
//! The kernel `N` is the group of automorphisms fixing every part of the
//! maximal sibling partition. Since that partition is unique it is invariant
//! under all automorphisms, so `N` is normal and `Aut(g)/N` acts faithfully
//! on the twin-free quotient. The staged open/closed classes give the
//! combinatorial side: a product of factorials bounding the stage factors.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::graph::Graph;
use crate::iso::{automorphism_count, automorphisms, guard, ORACLE_MAX_VERTICES};
use crate::partition::Partition;
use crate::twins::{maximal_sibling_partition, staged_reduction, twin_classes, TwinKind};
use crate::Result;

pub const THEOREM3_MAX_VERTICES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesStage {
    pub kind: TwinKind,
    /// Class sizes, descending.
    pub class_sizes: Vec<usize>,
    pub merges: usize,
    /// Product of `size!` over the classes.
    pub factor_order: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalSeriesReport {
    pub stages: Vec<SeriesStage>,
    /// Product of all stage factor orders.
    pub n_order: BigUint,
    pub reduced: Graph,
    pub partition: Partition,
}

fn factorial(k: usize) -> BigUint {
    (2..=k as u64).fold(BigUint::from(1u32), |acc, i| acc * i)
}

pub fn normal_series_report(g: &Graph) -> NormalSeriesReport {
    let staged = staged_reduction(g);
    let stages: Vec<SeriesStage> = staged
        .stages
        .into_iter()
        .map(|stage| SeriesStage {
            factor_order: stage.class_sizes.iter().map(|&k| factorial(k)).product(),
            kind: stage.kind,
            class_sizes: stage.class_sizes,
            merges: stage.merges,
        })
        .collect();
    NormalSeriesReport {
        n_order: stages.iter().map(|s| s.factor_order.clone()).product(),
        stages,
        reduced: staged.graph,
        partition: staged.partition,
    }
}

fn preserves_parts(perm: &[usize], label: &[usize]) -> bool {
    perm.iter().enumerate().all(|(v, &w)| label[v] == label[w])
}

/// `|N|`: automorphisms mapping every part of the maximal sibling partition
/// to itself.
pub fn kernel_order(g: &Graph) -> Result<u64> {
    guard(g.n(), ORACLE_MAX_VERTICES)?;
    let label = maximal_sibling_partition(g).labels();
    Ok(automorphisms(g)?.iter().filter(|p| preserves_parts(p, &label)).count() as u64)
}

/// Outcome of the brute-force checks on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem3Check {
    pub aut_order: u64,
    pub kernel_order: u64,
    pub reduced_aut_order: u64,
    /// `(x, y)` such that `x * y` or `y^-1 * x * y` escapes `N`, with `x` in `N`.
    pub normality_witness: Option<(Vec<usize>, Vec<usize>)>,
    /// `|Aut(g)| / |N|` divides `|Aut(reduced)|`.
    pub quotient_divides: bool,
    /// `prod (open class size)!`.
    pub first_stage_expected: u64,
    /// Automorphisms fixing every open twin class setwise.
    pub first_stage_actual: u64,
}

impl Theorem3Check {
    pub fn kernel_is_normal(&self) -> bool {
        self.normality_witness.is_none()
    }

    pub fn first_stage_matches(&self) -> bool {
        self.first_stage_expected == self.first_stage_actual
    }

    pub fn passed(&self) -> bool {
        self.kernel_is_normal() && self.quotient_divides && self.first_stage_matches()
    }
}

fn encode(perm: &[usize]) -> u64 {
    perm.iter().rev().fold(0, |acc, &x| acc << 4 | x as u64)
}

fn compose(first: &[usize], second: &[usize]) -> Vec<usize> {
    first.iter().map(|&x| second[x]).collect()
}

fn invert(perm: &[usize]) -> Vec<usize> {
    let mut out = alloc::vec![0; perm.len()];
    for (i, &x) in perm.iter().enumerate() {
        out[x] = i;
    }
    out
}

pub fn verify_theorem3(g: &Graph) -> Result<Theorem3Check> {
    guard(g.n(), THEOREM3_MAX_VERTICES)?;
    let auts = automorphisms(g)?;
    let maximal = maximal_sibling_partition(g);
    let label = maximal.labels();
    let kernel: Vec<&Vec<usize>> = auts.iter().filter(|p| preserves_parts(p, &label)).collect();
    let members: BTreeSet<u64> = kernel.iter().map(|p| encode(p)).collect();

    let mut normality_witness = None;
    'closure: for x in &kernel {
        for y in &kernel {
            if !members.contains(&encode(&compose(x, y))) {
                normality_witness = Some((x.to_vec(), y.to_vec()));
                break 'closure;
            }
        }
    }
    if normality_witness.is_none() {
        'normal: for y in &auts {
            let y_inv = invert(y);
            for x in &kernel {
                if !members.contains(&encode(&compose(&compose(&y_inv, x), y))) {
                    normality_witness = Some((x.to_vec(), y.clone()));
                    break 'normal;
                }
            }
        }
    }

    let aut_order = auts.len() as u64;
    let kernel_order = kernel.len() as u64;
    let reduced = maximal.quotient(g)?;
    let reduced_aut_order = automorphism_count(&reduced)?;
    let quotient_divides =
        aut_order.is_multiple_of(kernel_order) && reduced_aut_order.is_multiple_of(aut_order / kernel_order);

    let open = twin_classes(g, Some(TwinKind::Open));
    let first_stage_expected = open.sizes().iter().map(|&k| (1..=k as u64).product::<u64>()).product();
    let open_label = open.labels();
    let first_stage_actual = auts.iter().filter(|p| preserves_parts(p, &open_label)).count() as u64;

    Ok(Theorem3Check {
        aut_order,
        kernel_order,
        reduced_aut_order,
        normality_witness,
        quotient_divides,
        first_stage_expected,
        first_stage_actual,
    })
}
