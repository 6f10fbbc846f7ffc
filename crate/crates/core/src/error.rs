use thiserror::Error;

use crate::partition::SiblingViolation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("ground sets differ: {left} vs {right} points")]
    GroundSetMismatch { left: usize, right: usize },
    #[error("partition of an empty ground set")]
    EmptyGroundSet,
    #[error("invalid partition: {0}")]
    InvalidPartition(&'static str),
    #[error("graph has {n} vertices, oracle limit is {limit}")]
    SizeGuard { n: usize, limit: usize },
    #[error("partition is not a sibling partition: {0}")]
    NotSibling(SiblingViolation),
    #[error("vertex counts differ: {left} vs {right}")]
    VertexCountMismatch { left: usize, right: usize },
    #[error("malformed cotree: {0}")]
    MalformedCotree(&'static str),
    #[error("no generators given")]
    NoGenerators,
    #[error("permutation is not a bijection of 0..{0}")]
    NotBijective(usize),
    #[error("generators act on different degrees: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("group closure exceeded the cap of {0} elements")]
    CapExceeded(usize),
    #[error("trace step {step}: {reason}")]
    InvalidTrace { step: usize, reason: &'static str },
}
