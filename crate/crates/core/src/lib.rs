//! Twin reduction on finite simple graphs.
//!
//! Vertices are always `0..n`. A [`Partition`] of the vertex set can be
//! quotiented into a smaller graph when it is a sibling partition (every part
//! induces a cograph, and any two parts are joined completely or not at all).
//! Complete twin reduction computes the coarsest such partition; this crate
//! also carries the cograph machinery (P4 search, cotrees), the staged
//! open/closed reduction with its automorphism-group report, and power-type
//! graphs of permutation groups.
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the
//! command-line tool live in the `twinreduce` crate.

#![no_std]

extern crate alloc;

pub mod aut;
pub mod cograph;
mod error;
pub mod graph;
pub mod group;
pub mod iso;
pub mod partition;
pub mod twins;

pub use aut::{kernel_order, normal_series_report, verify_theorem3, NormalSeriesReport, SeriesStage, Theorem3Check};
pub use cograph::{build_cotree, cotree_to_graph, find_induced_p4, is_cograph, Cotree, CotreeError};
pub use error::Error;
pub use graph::{DegreeProfile, Girth, Graph};
pub use group::{enumerate_group, graph_difference, is_edge_subset, GroupElements, Permutation, DEFAULT_GROUP_CAP};
pub use iso::{are_isomorphic, automorphism_count, automorphisms, ORACLE_MAX_VERTICES};
pub use partition::{Partition, SiblingViolation};
pub use twins::{
    complete_twin_reduction, is_twin_free, maximal_sibling_partition, replay_trace, staged_reduction, twin_classes,
    twin_kind, MergePolicy, MergeStep, Reduction, ReductionTrace, Stage, StageReport, TwinKind,
};

pub type Result<T, E = Error> = core::result::Result<T, E>;
