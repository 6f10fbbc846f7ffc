//! Permutation groups enumerated from generators, and the power, enhanced
//! power and commuting graphs on their elements.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::graph::Graph;
use crate::{Error, Result};

pub const DEFAULT_GROUP_CAP: usize = 100_000;

/// A permutation of `0..m` stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &x in &images {
            if x >= m || seen[x] {
                return Err(Error::NotBijective(m));
            }
            seen[x] = true;
        }
        Ok(Permutation(images.into_iter().map(|x| x as u32).collect()))
    }

    /// Builds a permutation of `0..degree` from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree || moved[x] {
                    return Err(Error::NotBijective(degree));
                }
                moved[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.0[point] as usize
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[x as usize] = i as u32;
        }
        Permutation(out)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Non-trivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// Disjoint-cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// The elements of a permutation group in discovery order (identity first),
/// with every cyclic subgroup precomputed as a sorted index list.
#[derive(Debug, Clone)]
pub struct GroupElements {
    degree: usize,
    elements: Vec<Permutation>,
    index: BTreeMap<Permutation, usize>,
    cyclic: Vec<Vec<usize>>,
}

/// Breadth-first closure of the generators under right multiplication.
pub fn enumerate_group(generators: &[Permutation], cap: usize) -> Result<GroupElements> {
    let degree = generators.first().ok_or(Error::NoGenerators)?.degree();
    if let Some(bad) = generators.iter().find(|p| p.degree() != degree) {
        return Err(Error::DegreeMismatch {
            left: degree,
            right: bad.degree(),
        });
    }
    let identity = Permutation::identity(degree);
    let mut elements = vec![identity.clone()];
    let mut index = BTreeMap::new();
    index.insert(identity, 0);
    let mut head = 0;
    while head < elements.len() {
        for s in generators {
            let product = elements[head].then(s);
            if !index.contains_key(&product) {
                if elements.len() == cap {
                    return Err(Error::CapExceeded(cap));
                }
                index.insert(product.clone(), elements.len());
                elements.push(product);
            }
        }
        head += 1;
    }
    let cyclic = elements
        .iter()
        .map(|x| {
            let mut members = Vec::new();
            let mut power = x.clone();
            loop {
                members.push(index[&power]);
                if power.is_identity() {
                    break;
                }
                power = power.then(x);
            }
            members.sort_unstable();
            members
        })
        .collect();
    Ok(GroupElements {
        degree,
        elements,
        index,
        cyclic,
    })
}

impl GroupElements {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Indices of `<elements[i]>`, ascending.
    pub fn cyclic_subgroup(&self, i: usize) -> &[usize] {
        &self.cyclic[i]
    }

    pub fn element_order(&self, i: usize) -> usize {
        self.cyclic[i].len()
    }

    fn in_cyclic(&self, x: usize, generator: usize) -> bool {
        self.cyclic[generator].binary_search(&x).is_ok()
    }

    /// `x ~ y` iff one is a power of the other.
    pub fn power_graph(&self) -> Graph {
        let mut g = Graph::empty(self.order());
        for (x, members) in self.cyclic.iter().enumerate() {
            for &y in members {
                if y != x {
                    g.set(x, y);
                }
            }
        }
        g
    }

    /// Elements `x` whose cyclic subgroup is maximal, one generator per
    /// subgroup (the smallest index).
    pub fn maximal_cyclic_generators(&self) -> Vec<usize> {
        let n = self.order();
        let mut covered = vec![false; n];
        for y in 0..n {
            for &x in &self.cyclic[y] {
                if self.element_order(y) > self.element_order(x) {
                    covered[x] = true;
                }
            }
        }
        (0..n)
            .filter(|&x| !covered[x])
            .filter(|&x| {
                let order = self.element_order(x);
                self.cyclic[x].iter().find(|&&z| self.element_order(z) == order) == Some(&x)
            })
            .collect()
    }

    /// `x ~ y` iff some cyclic subgroup contains both; only maximal cyclic
    /// subgroups need scanning.
    pub fn enhanced_power_graph(&self) -> Graph {
        let mut g = Graph::empty(self.order());
        for z in self.maximal_cyclic_generators() {
            let members = &self.cyclic[z];
            for (i, &x) in members.iter().enumerate() {
                for &y in &members[i + 1..] {
                    g.set(x, y);
                }
            }
        }
        g
    }

    /// Reference version of [`Self::enhanced_power_graph`] scanning every
    /// element as a potential common generator.
    pub fn enhanced_power_graph_by_scan(&self) -> Graph {
        let n = self.order();
        let mut g = Graph::empty(n);
        for x in 0..n {
            for y in x + 1..n {
                if (0..n).any(|z| self.in_cyclic(x, z) && self.in_cyclic(y, z)) {
                    g.set(x, y);
                }
            }
        }
        g
    }

    pub fn commutes(&self, x: usize, y: usize) -> bool {
        let (a, b) = (&self.elements[x], &self.elements[y]);
        (0..self.degree).all(|p| b.apply(a.apply(p)) == a.apply(b.apply(p)))
    }

    /// Commuting pairs `(x, y)` with `x` in `rows` and `y > x`.
    pub fn commuting_edges(&self, rows: Range<usize>) -> Vec<(usize, usize)> {
        let n = self.order();
        rows.flat_map(|x| (x + 1..n).filter(move |&y| self.commutes(x, y)).map(move |y| (x, y)))
            .collect()
    }

    pub fn commuting_graph(&self) -> Graph {
        let mut g = Graph::empty(self.order());
        for (x, y) in self.commuting_edges(0..self.order()) {
            g.set(x, y);
        }
        g
    }

    /// Index map `i -> index(z^-1 * x_i * z)` for conjugation by element `z`.
    pub fn conjugation_map(&self, z: usize) -> Vec<usize> {
        let z = &self.elements[z];
        let z_inv = z.inverse();
        self.elements
            .iter()
            .map(|x| self.index[&z_inv.then(x).then(z)])
            .collect()
    }
}

/// True iff every edge of `sub` is an edge of `sup`.
pub fn is_edge_subset(sub: &Graph, sup: &Graph) -> Result<bool> {
    if sub.n() != sup.n() {
        return Err(Error::VertexCountMismatch {
            left: sub.n(),
            right: sup.n(),
        });
    }
    Ok((0..sub.n()).all(|v| sub.row(v).iter().zip(sup.row(v)).all(|(a, b)| a & !b == 0)))
}

/// Edges of `a` that are not edges of `b`.
pub fn graph_difference(a: &Graph, b: &Graph) -> Result<Graph> {
    if a.n() != b.n() {
        return Err(Error::VertexCountMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let mut out = Graph::empty(a.n());
    for (u, v) in a.edges() {
        if !b.has_edge(u, v) {
            out.set(u, v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn cyc(degree: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(degree, &cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn s3() -> GroupElements {
        enumerate_group(&[cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])], DEFAULT_GROUP_CAP).unwrap()
    }

    #[test]
    fn permutations() {
        let p = cyc(4, &[&[0, 1, 2]]);
        assert_eq!(p.to_string(), "(0 1 2)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert!(p.then(&p.inverse()).is_identity());
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 3]]).is_err());
    }

    #[test]
    fn small_groups() {
        let c3 = enumerate_group(&[cyc(3, &[&[0, 1, 2]])], DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(c3.order(), 3);
        assert!(c3.element(0).is_identity());
        assert_eq!(s3().order(), 6);
        assert_eq!(enumerate_group(&[], 10).unwrap_err(), Error::NoGenerators);
        assert_eq!(
            enumerate_group(&[cyc(3, &[&[0, 1]]), cyc(4, &[&[0, 1]])], 10).unwrap_err(),
            Error::DegreeMismatch { left: 3, right: 4 }
        );
        assert_eq!(
            enumerate_group(&[cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])], 5).unwrap_err(),
            Error::CapExceeded(5)
        );
    }

    #[test]
    fn cyclic_membership_contains_identity_and_self() {
        let g = s3();
        for i in 0..g.order() {
            assert!(g.in_cyclic(0, i) && g.in_cyclic(i, i));
        }
    }

    #[test]
    fn s3_graphs() {
        let g = s3();
        let power = g.power_graph();
        let transpositions: Vec<usize> = (0..6).filter(|&i| g.element_order(i) == 2).collect();
        let three_cycles: Vec<usize> = (0..6).filter(|&i| g.element_order(i) == 3).collect();
        assert_eq!((transpositions.len(), three_cycles.len()), (3, 2));
        assert_eq!(power.degree(0), 5);
        for &a in &transpositions {
            for &b in &transpositions {
                assert!(a == b || !power.has_edge(a, b));
            }
            assert_eq!(power.degree(a), 1);
        }
        assert!(power.has_edge(three_cycles[0], three_cycles[1]));
        assert_eq!(power.edge_count(), 5 + 1);

        assert_eq!(g.enhanced_power_graph(), power);
        assert_eq!(g.enhanced_power_graph_by_scan(), power);
        assert_eq!(
            graph_difference(&g.enhanced_power_graph(), &power).unwrap(),
            Graph::empty(6)
        );

        let commuting = g.commuting_graph();
        for &a in &transpositions {
            assert_eq!(commuting.neighbors(a).collect::<Vec<_>>(), vec![0]);
        }
        assert_eq!(commuting.edge_count(), 5 + 1);
    }

    #[test]
    fn cyclic_group_graphs_are_complete() {
        let c6 = enumerate_group(&[cyc(6, &[&[0, 1, 2, 3, 4, 5]])], DEFAULT_GROUP_CAP).unwrap();
        // g^3 is not a power of g^2 or g^4, nor they of it.
        assert_eq!(c6.power_graph().edge_count(), 13);
        assert_eq!(c6.enhanced_power_graph(), Graph::complete(6));
        assert_eq!(c6.commuting_graph(), Graph::complete(6));
    }

    #[test]
    fn difference_basics() {
        let g = Graph::cycle(5);
        assert_eq!(graph_difference(&g, &g).unwrap(), Graph::empty(5));
        assert_eq!(graph_difference(&g, &Graph::empty(5)).unwrap(), g);
        assert!(graph_difference(&g, &Graph::empty(4)).is_err());
        assert_eq!(is_edge_subset(&Graph::path(5), &g), Ok(true));
        assert_eq!(is_edge_subset(&g, &Graph::path(5)), Ok(false));
    }
}
