//! Set partitions of the vertex set: refinement order, join, the sibling
//! predicate and quotient graphs.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cograph::{build_cotree, CotreeError};
use crate::graph::Graph;
use crate::{Error, Result};

/// A partition of `0..n` in canonical form: each part ascending, parts
/// ordered by their minimum. Equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    n: usize,
    parts: Vec<Vec<usize>>,
}

/// Why a partition fails to be a sibling partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SiblingViolation {
    /// The part contains the induced path `a - b - c - d`.
    P4InsidePart { path: [usize; 4] },
    /// `outside ~ adjacent` and `outside` is not adjacent to `nonadjacent`,
    /// with `adjacent` and `nonadjacent` in one part not containing `outside`.
    MixedEdges {
        outside: usize,
        adjacent: usize,
        nonadjacent: usize,
    },
}

impl fmt::Display for SiblingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SiblingViolation::P4InsidePart { path: [a, b, c, d] } => {
                write!(f, "induced P4 {a} {b} {c} {d} inside a part")
            }
            SiblingViolation::MixedEdges {
                outside,
                adjacent,
                nonadjacent,
            } => write!(
                f,
                "mixed edges between parts: {outside}~{adjacent} but {outside} is not adjacent to {nonadjacent}"
            ),
        }
    }
}

impl Partition {
    /// `n` parts of size one.
    pub fn singletons(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        Ok(Partition {
            n,
            parts: (0..n).map(|v| vec![v]).collect(),
        })
    }

    /// The one-part partition.
    pub fn whole(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        Ok(Partition {
            n,
            parts: vec![(0..n).collect()],
        })
    }

    /// Validates and canonicalises a list of parts covering `0..n`.
    pub fn from_parts(n: usize, mut parts: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for part in parts.iter_mut() {
            if part.is_empty() {
                return Err(Error::InvalidPartition("empty part"));
            }
            part.sort_unstable();
            for &v in part.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if seen[v] {
                    return Err(Error::InvalidPartition("parts overlap"));
                }
                seen[v] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidPartition("parts do not cover the ground set"));
        }
        parts.sort_unstable_by_key(|p| p[0]);
        Ok(Partition { n, parts })
    }

    /// Groups points by equal label. Label values are arbitrary.
    pub fn from_labels<L: Ord + Copy>(labels: &[L]) -> Self {
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by_key(|&v| (labels[v], v));
        let mut parts: Vec<Vec<usize>> = Vec::new();
        let mut previous = None;
        for v in order {
            if previous == Some(labels[v]) {
                parts.last_mut().unwrap().push(v);
            } else {
                parts.push(vec![v]);
                previous = Some(labels[v]);
            }
        }
        parts.sort_unstable_by_key(|p| p[0]);
        Partition { n: labels.len(), parts }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Index of the part containing each point.
    pub fn labels(&self) -> Vec<usize> {
        let mut label = vec![0; self.n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                label[v] = i;
            }
        }
        label
    }

    /// Sizes of the parts, in part order.
    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }

    fn same_ground(&self, other: &Partition) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::GroundSetMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    /// True iff every part of `self` lies inside a part of `other`.
    pub fn is_finer(&self, other: &Partition) -> Result<bool> {
        self.same_ground(other)?;
        let label = other.labels();
        Ok(self
            .parts
            .iter()
            .all(|part| part.iter().all(|&v| label[v] == label[part[0]])))
    }

    /// The finest partition coarser than both: connected components of the
    /// graph linking any two points that share a part in either input.
    pub fn join(&self, other: &Partition) -> Result<Partition> {
        self.same_ground(other)?;
        let mut linked = Graph::empty(self.n);
        for part in self.parts.iter().chain(other.parts.iter()) {
            for pair in part.windows(2) {
                linked.set(pair[0], pair[1]);
            }
        }
        Ok(linked.connected_components())
    }

    /// Composes a partition of the quotient's vertices (one per part of
    /// `self`, in part order) back onto the original points.
    pub fn compose(&self, outer: &Partition) -> Result<Partition> {
        if outer.n != self.parts.len() {
            return Err(Error::GroundSetMismatch {
                left: self.parts.len(),
                right: outer.n,
            });
        }
        let parts = outer
            .parts
            .iter()
            .map(|group| group.iter().flat_map(|&q| self.parts[q].iter().copied()).collect())
            .collect();
        Partition::from_parts(self.n, parts)
    }

    fn check_graph(&self, g: &Graph) -> Result<()> {
        if g.n() == self.n {
            Ok(())
        } else {
            Err(Error::GroundSetMismatch {
                left: g.n(),
                right: self.n,
            })
        }
    }

    /// The first violation of the sibling rules, scanning parts in order for
    /// an induced P4, then vertices in ascending order for a part they are
    /// joined to only partially.
    pub fn sibling_violation(&self, g: &Graph) -> Result<Option<SiblingViolation>> {
        self.check_graph(g)?;
        for part in &self.parts {
            if part.len() < 4 {
                continue;
            }
            let sub = g.induced_subgraph(part)?;
            match build_cotree(&sub) {
                Ok(_) => {}
                Err(CotreeError::NotCograph(path)) => {
                    return Ok(Some(SiblingViolation::P4InsidePart {
                        path: path.map(|i| part[i]),
                    }));
                }
                Err(CotreeError::Inconsistent | CotreeError::Empty) => {
                    unreachable!("nonempty part, decomposable or with a P4")
                }
            }
        }
        let label = self.labels();
        let mut hits = vec![0usize; self.parts.len()];
        let mut touched = Vec::new();
        for u in 0..self.n {
            for w in g.neighbors(u) {
                let b = label[w];
                if b == label[u] {
                    continue;
                }
                if hits[b] == 0 {
                    touched.push(b);
                }
                hits[b] += 1;
            }
            touched.sort_unstable();
            let mixed = touched.iter().copied().find(|&b| hits[b] < self.parts[b].len());
            for &b in &touched {
                hits[b] = 0;
            }
            touched.clear();
            if let Some(b) = mixed {
                let part = &self.parts[b];
                let adjacent = *part.iter().find(|&&v| g.has_edge(u, v)).unwrap();
                let nonadjacent = *part.iter().find(|&&v| !g.has_edge(u, v)).unwrap();
                return Ok(Some(SiblingViolation::MixedEdges {
                    outside: u,
                    adjacent,
                    nonadjacent,
                }));
            }
        }
        Ok(None)
    }

    pub fn is_sibling(&self, g: &Graph) -> Result<bool> {
        Ok(self.sibling_violation(g)?.is_none())
    }

    /// `g / self`: one vertex per part, numbered in part order. Only defined
    /// for sibling partitions, where adjacency between parts is uniform.
    pub fn quotient(&self, g: &Graph) -> Result<Graph> {
        if let Some(violation) = self.sibling_violation(g)? {
            return Err(Error::NotSibling(violation));
        }
        let mut q = Graph::empty(self.parts.len());
        for (i, a) in self.parts.iter().enumerate() {
            for (j, b) in self.parts.iter().enumerate().skip(i + 1) {
                if g.has_edge(a[0], b[0]) {
                    q.set(i, j);
                }
            }
        }
        Ok(q)
    }
}

impl fmt::Display for Partition {
    /// One part per line, space-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for part in &self.parts {
            for (i, v) in part.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}
