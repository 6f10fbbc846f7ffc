//! Exhaustive isomorphism and automorphism search for small graphs.
//!
//! Plain backtracking with degree pruning. This is a test oracle and refuses
//! graphs with more than [`ORACLE_MAX_VERTICES`] vertices.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::graph::Graph;
use crate::{Error, Result};

pub const ORACLE_MAX_VERTICES: usize = 12;

pub(crate) fn guard(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::SizeGuard { n, limit })
    } else {
        Ok(())
    }
}

/// Calls `visit` with every isomorphism `g -> h` as an image array.
fn search<F>(g: &Graph, h: &Graph, mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = g.n();
    if n != h.n() {
        return;
    }
    let deg_g: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let deg_h: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let _ = extend(g, h, &deg_g, &deg_h, 0, &mut image, &mut used, &mut visit);
}

#[allow(clippy::too_many_arguments)]
fn extend<F>(
    g: &Graph,
    h: &Graph,
    deg_g: &[usize],
    deg_h: &[usize],
    v: usize,
    image: &mut [usize],
    used: &mut [bool],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if v == image.len() {
        return visit(image);
    }
    for w in 0..image.len() {
        if used[w] || deg_g[v] != deg_h[w] {
            continue;
        }
        if (0..v).any(|u| g.has_edge(u, v) != h.has_edge(image[u], w)) {
            continue;
        }
        image[v] = w;
        used[w] = true;
        let flow = extend(g, h, deg_g, deg_h, v + 1, image, used, visit);
        used[w] = false;
        flow?;
    }
    ControlFlow::Continue(())
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    guard(g.n(), ORACLE_MAX_VERTICES)?;
    guard(h.n(), ORACLE_MAX_VERTICES)?;
    if g.n() != h.n() || g.degree_profile() != h.degree_profile() {
        return Ok(false);
    }
    let mut found = false;
    search(g, h, |_| {
        found = true;
        ControlFlow::Break(())
    });
    Ok(found)
}

pub fn automorphism_count(g: &Graph) -> Result<u64> {
    guard(g.n(), ORACLE_MAX_VERTICES)?;
    let mut count = 0;
    search(g, g, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    Ok(count)
}

/// Every automorphism as an image array, in lexicographic order.
pub fn automorphisms(g: &Graph) -> Result<Vec<Vec<usize>>> {
    guard(g.n(), ORACLE_MAX_VERTICES)?;
    let mut out = Vec::new();
    search(g, g, |p| {
        out.push(p.to_vec());
        ControlFlow::Continue(())
    });
    Ok(out)
}
