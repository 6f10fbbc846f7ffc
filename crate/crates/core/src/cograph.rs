//! Cographs: induced-P4 search, recognition by twin reduction, and cotrees.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::twins::{complete_twin_reduction, MergePolicy};
use crate::{Error, Result};

/// Decomposition tree of a cograph. Two leaves are adjacent iff their lowest
/// common ancestor is a `Join`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Cotree {
    Leaf(usize),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum CotreeError {
    #[error("not a cograph: induced P4 {0:?}")]
    NotCograph([usize; 4]),
    #[error("graph has no vertices")]
    Empty,
    /// Connected, co-connected, more than one vertex and yet P4-free.
    #[error("internal inconsistency: no decomposition and no induced P4")]
    Inconsistent,
}

/// The lexicographically first induced path `a - b - c - d`, if any.
pub fn find_induced_p4(g: &Graph) -> Option<[usize; 4]> {
    for a in 0..g.n() {
        for b in g.neighbors(a) {
            for c in g.neighbors(b) {
                if c == a || g.has_edge(a, c) {
                    continue;
                }
                for d in g.neighbors(c) {
                    if d != b && !g.has_edge(a, d) && !g.has_edge(b, d) {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

/// True iff complete twin reduction leaves at most one vertex.
pub fn is_cograph(g: &Graph) -> bool {
    complete_twin_reduction(g, MergePolicy::Deterministic).graph.n() <= 1
}

/// Splits on components, then on co-components; a piece that is connected
/// with connected complement must contain an induced P4.
pub fn build_cotree(g: &Graph) -> core::result::Result<Cotree, CotreeError> {
    if g.n() == 0 {
        return Err(CotreeError::Empty);
    }
    let all: Vec<usize> = (0..g.n()).collect();
    build(g, &all)
}

fn build(g: &Graph, vertices: &[usize]) -> core::result::Result<Cotree, CotreeError> {
    if vertices.len() == 1 {
        return Ok(Cotree::Leaf(vertices[0]));
    }
    let sub = g.induced_subgraph(vertices).expect("vertices come from g");
    let components = sub.connected_components();
    if components.len() > 1 {
        return children(g, vertices, components.parts()).map(Cotree::Union);
    }
    let co_components = sub.complement().connected_components();
    if co_components.len() > 1 {
        return children(g, vertices, co_components.parts()).map(Cotree::Join);
    }
    match find_induced_p4(&sub) {
        Some(path) => Err(CotreeError::NotCograph(path.map(|i| vertices[i]))),
        None => Err(CotreeError::Inconsistent),
    }
}

fn children(g: &Graph, vertices: &[usize], parts: &[Vec<usize>]) -> core::result::Result<Vec<Cotree>, CotreeError> {
    parts
        .iter()
        .map(|part| {
            let members: Vec<usize> = part.iter().map(|&i| vertices[i]).collect();
            build(g, &members)
        })
        .collect()
}

/// Rebuilds the graph a cotree describes. The leaves must be exactly
/// `0..n`, internal nodes need two or more children, and labels must
/// alternate.
pub fn cotree_to_graph(tree: &Cotree) -> Result<Graph> {
    let mut leaves = Vec::new();
    tree.check(None, &mut leaves)?;
    let n = leaves.len();
    let mut seen = alloc::vec![false; n];
    for &v in &leaves {
        if v >= n || seen[v] {
            return Err(Error::MalformedCotree("leaves are not a permutation of 0..n"));
        }
        seen[v] = true;
    }
    let mut g = Graph::empty(n);
    tree.add_edges(&mut g);
    Ok(g)
}

impl Cotree {
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Leaf(v) => out.push(*v),
            Cotree::Union(children) | Cotree::Join(children) => children.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    fn is_join(&self) -> Option<bool> {
        match self {
            Cotree::Leaf(_) => None,
            Cotree::Union(_) => Some(false),
            Cotree::Join(_) => Some(true),
        }
    }

    fn check(&self, parent_is_join: Option<bool>, leaves: &mut Vec<usize>) -> Result<()> {
        match self {
            Cotree::Leaf(v) => {
                leaves.push(*v);
                Ok(())
            }
            Cotree::Union(children) | Cotree::Join(children) => {
                if children.len() < 2 {
                    return Err(Error::MalformedCotree("internal node with fewer than two children"));
                }
                if parent_is_join.is_some() && parent_is_join == self.is_join() {
                    return Err(Error::MalformedCotree("labels do not alternate"));
                }
                children.iter().try_for_each(|c| c.check(self.is_join(), leaves))
            }
        }
    }

    fn add_edges(&self, g: &mut Graph) {
        match self {
            Cotree::Leaf(_) => {}
            Cotree::Union(children) => children.iter().for_each(|c| c.add_edges(g)),
            Cotree::Join(children) => {
                let groups: Vec<Vec<usize>> = children.iter().map(Cotree::leaves).collect();
                for (i, a) in groups.iter().enumerate() {
                    for b in &groups[i + 1..] {
                        for &u in a {
                            for &v in b {
                                g.set(u, v);
                            }
                        }
                    }
                }
                children.iter().for_each(|c| c.add_edges(g));
            }
        }
    }
}

impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tag, children) = match self {
            Cotree::Leaf(v) => return write!(f, "{v}"),
            Cotree::Union(children) => ("U", children),
            Cotree::Join(children) => ("J", children),
        };
        write!(f, "{tag}(")?;
        for (i, child) in children.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{child}")?;
        }
        f.write_str(")")
    }
}
