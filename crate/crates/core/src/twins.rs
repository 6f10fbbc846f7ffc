//! Twins, twin classes and complete twin reduction.
//!
//! Reduction works on a partition of the original vertices together with the
//! current quotient. Every part is represented by its minimum; merging two
//! twin parts deletes the larger representative, so the quotient is always
//! the subgraph induced on the surviving representatives.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::partition::Partition;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TwinKind {
    NotTwins,
    /// Non-adjacent with equal neighbourhoods.
    Open,
    /// Adjacent with equal closed neighbourhoods.
    Closed,
}

impl fmt::Display for TwinKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TwinKind::NotTwins => "none",
            TwinKind::Open => "open",
            TwinKind::Closed => "closed",
        })
    }
}

/// Which twin pair to merge next.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MergePolicy {
    /// The lexicographically first twin pair of the current quotient.
    Deterministic,
    /// A uniformly chosen twin class, then two of its members, from a seeded
    /// generator.
    Randomized(u64),
}

/// One merge: the parts with minima `part_a < part_b` were twins of `kind`
/// in the quotient before step `index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MergeStep {
    pub index: usize,
    pub part_a: usize,
    pub part_b: usize,
    pub kind: TwinKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub n: usize,
    pub steps: Vec<MergeStep>,
    pub partition: Partition,
}

/// Output of [`complete_twin_reduction`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    /// The twin-free quotient, one vertex per part in part order.
    pub graph: Graph,
    /// The maximal sibling partition of the input.
    pub partition: Partition,
    pub trace: ReductionTrace,
}

fn closed_rows_equal(g: &Graph, u: usize, v: usize) -> bool {
    let (ru, rv) = (g.row(u), g.row(v));
    ru.iter().zip(rv).enumerate().all(|(i, (&a, &b))| {
        let mut a = a;
        let mut b = b;
        if u / 64 == i {
            a |= 1 << (u % 64);
        }
        if v / 64 == i {
            b |= 1 << (v % 64);
        }
        a == b
    })
}

fn kind_of(g: &Graph, u: usize, v: usize) -> TwinKind {
    if g.has_edge(u, v) {
        if closed_rows_equal(g, u, v) {
            TwinKind::Closed
        } else {
            TwinKind::NotTwins
        }
    } else if g.row(u) == g.row(v) {
        TwinKind::Open
    } else {
        TwinKind::NotTwins
    }
}

pub fn twin_kind(g: &Graph, u: usize, v: usize) -> Result<TwinKind> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(kind_of(g, u, v))
}

pub fn is_twin_free(g: &Graph) -> bool {
    twin_classes(g, None).len() == g.n()
}

/// Classes of mutual twins. `Some(Open)` or `Some(Closed)` restricts to one
/// kind; `None` (or `Some(NotTwins)`) takes both, which still partitions the
/// vertices because no vertex has an open and a closed twin at once.
pub fn twin_classes(g: &Graph, filter: Option<TwinKind>) -> Partition {
    match filter {
        Some(TwinKind::Open) => classes_by_row(g, false),
        Some(TwinKind::Closed) => classes_by_row(g, true),
        None | Some(TwinKind::NotTwins) => {
            let open = classes_by_row(g, false);
            let closed = classes_by_row(g, true);
            // Both are finer than the full relation, and their nontrivial
            // parts are disjoint.
            open.join(&closed).expect("same ground set")
        }
    }
}

fn classes_by_row(g: &Graph, closed: bool) -> Partition {
    let n = g.n();
    let mut rows: Vec<Vec<u64>> = (0..n).map(|v| g.row(v).to_vec()).collect();
    if closed {
        for (v, row) in rows.iter_mut().enumerate() {
            row[v / 64] |= 1 << (v % 64);
        }
    }
    Partition::from_labels(&rows.iter().map(Vec::as_slice).collect::<Vec<_>>())
}

const OPEN: u8 = 0;
const CLOSED: u8 = 1;

/// Incremental twin index over the surviving representatives.
///
/// Vertices are bucketed by a sum of random per-vertex keys over their open
/// (or closed) neighbourhood. Equal neighbourhoods give equal sums; equal
/// sums are always re-checked against the rows.
struct Reducer {
    adj: Graph,
    alive: Vec<bool>,
    keys: Vec<u64>,
    open_sig: Vec<u64>,
    buckets: BTreeMap<(u8, u64), BTreeSet<usize>>,
    /// `(bucket minimum, kind, signature)` for buckets with two or more members.
    candidates: BTreeSet<(usize, u8, u64)>,
    parts: Vec<Vec<usize>>,
    steps: Vec<MergeStep>,
}

impl Reducer {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut rng = ChaCha8Rng::seed_from_u64(0x7769_6e73);
        let keys: Vec<u64> = (0..n).map(|_| rng.gen()).collect();
        let open_sig = (0..n)
            .map(|v| g.neighbors(v).fold(0u64, |acc, w| acc.wrapping_add(keys[w])))
            .collect();
        let mut reducer = Reducer {
            adj: g.clone(),
            alive: vec![true; n],
            keys,
            open_sig,
            buckets: BTreeMap::new(),
            candidates: BTreeSet::new(),
            parts: (0..n).map(|v| vec![v]).collect(),
            steps: Vec::new(),
        };
        for v in 0..n {
            reducer.attach(v);
        }
        reducer
    }

    fn signatures(&self, v: usize) -> [(u8, u64); 2] {
        let open = self.open_sig[v];
        [(OPEN, open), (CLOSED, open.wrapping_add(self.keys[v]))]
    }

    fn attach(&mut self, v: usize) {
        for key in self.signatures(v) {
            let set = self.buckets.entry(key).or_default();
            if set.len() >= 2 {
                self.candidates.remove(&(*set.first().unwrap(), key.0, key.1));
            }
            set.insert(v);
            if set.len() >= 2 {
                self.candidates.insert((*set.first().unwrap(), key.0, key.1));
            }
        }
    }

    fn detach(&mut self, v: usize) {
        for key in self.signatures(v) {
            let set = self.buckets.get_mut(&key).expect("attached vertex has a bucket");
            if set.len() >= 2 {
                self.candidates.remove(&(*set.first().unwrap(), key.0, key.1));
            }
            set.remove(&v);
            if set.len() >= 2 {
                self.candidates.insert((*set.first().unwrap(), key.0, key.1));
            }
            if set.is_empty() {
                self.buckets.remove(&key);
            }
        }
    }

    fn exact(&self, kind: u8, u: usize, v: usize) -> bool {
        if kind == OPEN {
            self.adj.row(u) == self.adj.row(v)
        } else {
            closed_rows_equal(&self.adj, u, v)
        }
    }

    /// Exact twin classes (size >= 2) inside one bucket.
    fn exact_classes(&self, kind: u8, members: &BTreeSet<usize>) -> Vec<Vec<usize>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in members {
            match classes.iter_mut().find(|c| self.exact(kind, c[0], v)) {
                Some(class) => class.push(v),
                None => classes.push(vec![v]),
            }
        }
        classes.retain(|c| c.len() >= 2);
        classes
    }

    fn first_pair(&self) -> Option<(usize, usize, u8)> {
        let mut best: Option<(usize, usize, u8)> = None;
        for &(min, kind, sig) in &self.candidates {
            if matches!(best, Some((a, _, _)) if min >= a) {
                break;
            }
            let members = &self.buckets[&(kind, sig)];
            let mut iter = members.iter();
            let (a, b) = (*iter.next().unwrap(), *iter.next().unwrap());
            let pair = if self.exact(kind, a, b) {
                Some((a, b))
            } else {
                // Signature collision: fall back to exact classes.
                self.exact_classes(kind, members).iter().map(|c| (c[0], c[1])).min()
            };
            if let Some((a, b)) = pair {
                if best.is_none_or(|(ba, bb, _)| (a, b) < (ba, bb)) {
                    best = Some((a, b, kind));
                }
            }
        }
        best
    }

    fn random_pair(&self, rng: &mut ChaCha8Rng) -> Option<(usize, usize, u8)> {
        let mut pool: Vec<(u8, u64)> = self.candidates.iter().map(|&(_, k, s)| (k, s)).collect();
        while !pool.is_empty() {
            let key = pool.swap_remove(rng.gen_range(0..pool.len()));
            let classes = self.exact_classes(key.0, &self.buckets[&key]);
            if classes.is_empty() {
                continue;
            }
            let class = &classes[rng.gen_range(0..classes.len())];
            let i = rng.gen_range(0..class.len());
            let mut j = rng.gen_range(0..class.len() - 1);
            if j >= i {
                j += 1;
            }
            let (a, b) = (class[i].min(class[j]), class[i].max(class[j]));
            return Some((a, b, key.0));
        }
        None
    }

    /// Merges part `b` into part `a` (`a < b`) by deleting `b` from the quotient.
    fn merge(&mut self, a: usize, b: usize, kind: u8) {
        self.detach(b);
        self.alive[b] = false;
        let neighbours: Vec<usize> = self.adj.neighbors(b).collect();
        for w in neighbours {
            self.detach(w);
            self.adj.remove_edge(w, b).expect("in range");
            self.open_sig[w] = self.open_sig[w].wrapping_sub(self.keys[b]);
            self.attach(w);
        }
        let moved = core::mem::take(&mut self.parts[b]);
        self.parts[a].extend(moved);
        self.steps.push(MergeStep {
            index: self.steps.len(),
            part_a: a,
            part_b: b,
            kind: if kind == OPEN { TwinKind::Open } else { TwinKind::Closed },
        });
    }

    fn finish(self, g: &Graph) -> Reduction {
        let reps: Vec<usize> = (0..g.n()).filter(|&v| self.alive[v]).collect();
        let graph = g.induced_subgraph(&reps).expect("representatives are vertices");
        let parts: Vec<Vec<usize>> = reps.iter().map(|&r| self.parts[r].clone()).collect();
        let partition = if g.n() == 0 {
            Partition::from_labels::<usize>(&[])
        } else {
            Partition::from_parts(g.n(), parts).expect("parts cover the vertex set")
        };
        Reduction {
            graph,
            trace: ReductionTrace {
                n: g.n(),
                steps: self.steps,
                partition: partition.clone(),
            },
            partition,
        }
    }
}

/// Merges twin pairs of the current quotient until it is twin-free.
///
/// Whatever the policy, the final partition is the unique maximal sibling
/// partition of `g`.
pub fn complete_twin_reduction(g: &Graph, policy: MergePolicy) -> Reduction {
    let mut reducer = Reducer::new(g);
    let mut rng = match policy {
        MergePolicy::Deterministic => None,
        MergePolicy::Randomized(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    loop {
        let pair = match rng.as_mut() {
            None => reducer.first_pair(),
            Some(rng) => reducer.random_pair(rng),
        };
        let Some((a, b, kind)) = pair else { break };
        reducer.merge(a, b, kind);
    }
    reducer.finish(g)
}

pub fn maximal_sibling_partition(g: &Graph) -> Partition {
    complete_twin_reduction(g, MergePolicy::Deterministic).partition
}

/// Replays `trace` on `g` from the singleton partition, checking that every
/// step merges two current parts that are twins of the recorded kind. Returns
/// the partition after each step, starting with the singletons.
pub fn replay_trace(g: &Graph, trace: &ReductionTrace) -> Result<Vec<Partition>> {
    if trace.n != g.n() {
        return Err(Error::VertexCountMismatch {
            left: g.n(),
            right: trace.n,
        });
    }
    let n = g.n();
    let mut adj = g.clone();
    let mut rep: Vec<usize> = (0..n).collect();
    let mut alive = vec![true; n];
    let mut history = vec![Partition::from_labels(&rep)];
    for (i, step) in trace.steps.iter().enumerate() {
        let bad = |reason| Error::InvalidTrace { step: i, reason };
        if step.index != i {
            return Err(bad("step index out of sequence"));
        }
        let (a, b) = (step.part_a, step.part_b);
        if a >= b || b >= n {
            return Err(bad("part minima must satisfy a < b < n"));
        }
        if !alive[a] || !alive[b] {
            return Err(bad("merged part no longer exists"));
        }
        let kind = kind_of(&adj, a, b);
        if kind == TwinKind::NotTwins || kind != step.kind {
            return Err(bad("parts are not twins of the recorded kind"));
        }
        let neighbours: Vec<usize> = adj.neighbors(b).collect();
        for w in neighbours {
            adj.remove_edge(w, b)?;
        }
        alive[b] = false;
        for r in rep.iter_mut() {
            if *r == b {
                *r = a;
            }
        }
        history.push(Partition::from_labels(&rep));
    }
    if history.last() != Some(&trace.partition) {
        return Err(Error::InvalidTrace {
            step: trace.steps.len(),
            reason: "final partition differs",
        });
    }
    Ok(history)
}

/// One stage of the staged reduction: the classes of `kind` twins in the
/// quotient the stage started from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stage {
    pub kind: TwinKind,
    /// Class sizes, descending; they sum to the stage's quotient order.
    pub class_sizes: Vec<usize>,
    /// Vertices removed from the quotient by this stage.
    pub merges: usize,
    /// Partition of the original vertices after this stage.
    pub partition: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageReport {
    pub n: usize,
    pub stages: Vec<Stage>,
    pub partition: Partition,
    pub graph: Graph,
}

/// Alternates open-twin and closed-twin stages, open first, merging whole
/// classes at once. Stops after an open and a closed stage in a row change
/// nothing; those trailing idle stages are not reported.
pub fn staged_reduction(g: &Graph) -> StageReport {
    let n = g.n();
    let mut partition = Partition::from_labels(&(0..n).collect::<Vec<_>>());
    let mut quotient = g.clone();
    let mut stages = Vec::new();
    let mut kind = TwinKind::Open;
    let mut idle = 0;
    while idle < 2 && n > 0 {
        let classes = twin_classes(&quotient, Some(kind));
        let merges = quotient.n() - classes.len();
        let mut class_sizes = classes.sizes();
        class_sizes.sort_unstable_by(|a, b| b.cmp(a));
        if merges > 0 {
            partition = partition.compose(&classes).expect("classes partition the quotient");
            let reps: Vec<usize> = classes.parts().iter().map(|p| p[0]).collect();
            quotient = quotient.induced_subgraph(&reps).expect("in range");
            idle = 0;
        } else {
            idle += 1;
        }
        stages.push(Stage {
            kind,
            class_sizes,
            merges,
            partition: partition.clone(),
        });
        kind = if kind == TwinKind::Open {
            TwinKind::Closed
        } else {
            TwinKind::Open
        };
    }
    while stages.last().is_some_and(|s| s.merges == 0) {
        stages.pop();
    }
    StageReport {
        n,
        stages,
        partition,
        graph: quotient,
    }
}
