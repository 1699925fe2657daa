//! Posets, cover relations and the greedy coloring of uniquely generated
//! posets along a linear extension.

mod coloring;
mod random;

pub use coloring::{
    down_set_tree, greedy_color, log_color_bound, verify_color_bound, verify_tree_claim,
    Coloring, DownSet, TreeClaimFailure,
};
pub use random::{random_forest_dag, random_height2};

use std::collections::BinaryHeap;
use std::cmp::Reverse;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::exec::Exec;
use crate::graph::{saturating_path_counts_in_order, Graph, PathCount, Reachability};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("element {v} outside 1..={n}")]
    OutOfRange { v: usize, n: usize },
    #[error("relation pair ({0}, {0}) is reflexive")]
    Reflexive(usize),
    #[error("duplicate cover edge {0} -> {1}")]
    DuplicateCover(usize, usize),
    #[error("relation is cyclic through {0}")]
    Cyclic(usize),
    #[error("relation not transitive: {0} < {1} < {2} but not {0} < {2}")]
    NotTransitive(usize, usize, usize),
    #[error("extension is not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("extension places {1} before {0} although {0} < {1}")]
    NotAnExtension(usize, usize),
    #[error("two cover chains join {0} and {1}")]
    NotUniquelyGenerated(usize, usize),
    #[error("chain of three: {0} < {1} < {2}")]
    ChainOfThree(usize, usize, usize),
    #[error("greedy coloring is improper on cover edge {0} -> {1}")]
    ImproperColoring(usize, usize),
}

/// Strict partial order on `1..=n` with a distinguished linear extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    above: Vec<FixedBitSet>,
    below: Vec<FixedBitSet>,
    extension: Vec<usize>,
}

impl Poset {
    /// Order generated by the given cover edges (`(x, y)`: `y` covers `x`);
    /// the extension is the smallest-label-first topological order.
    pub fn from_cover_edges(n: usize, covers: &[(usize, usize)]) -> Result<Self, PosetError> {
        let dag = CoverDag::new(n, covers)?;
        Ok(Poset::from_dag(&dag))
    }

    /// Reflexive-free transitive closure of a DAG.
    pub fn from_dag(dag: &CoverDag) -> Self {
        let n = dag.n();
        let mut below = vec![FixedBitSet::with_capacity(n + 1); n + 1];
        for &y in dag.order() {
            let mut acc = FixedBitSet::with_capacity(n + 1);
            for &x in dag.covered_by(y) {
                acc.insert(x);
                acc.union_with(&below[x]);
            }
            below[y] = acc;
        }
        Poset::from_below(below, dag.order().to_vec())
    }

    /// Validates an explicit order relation given as pairs `x < y`.
    pub fn from_order(n: usize, pairs: &[(usize, usize)]) -> Result<Self, PosetError> {
        let mut below = vec![FixedBitSet::with_capacity(n + 1); n + 1];
        for &(x, y) in pairs {
            for v in [x, y] {
                if v == 0 || v > n {
                    return Err(PosetError::OutOfRange { v, n });
                }
            }
            if x == y {
                return Err(PosetError::Reflexive(x));
            }
            below[y].insert(x);
        }
        for y in 1..=n {
            for x in below[y].ones() {
                if let Some(w) = below[x].ones().find(|&w| !below[y].contains(w)) {
                    return Err(PosetError::NotTransitive(w, x, y));
                }
                if below[x].contains(y) {
                    return Err(PosetError::Cyclic(x));
                }
            }
        }
        let succ = transpose(&below);
        let extension = linear_extension_of(&succ)?;
        Ok(Poset::from_below(below, extension))
    }

    /// Monotone-reachability order; the identity labeling extends it.
    pub fn from_reachability(reach: &Reachability) -> Self {
        let n = reach.n();
        let below = (0..=n)
            .map(|y| {
                if y == 0 {
                    FixedBitSet::with_capacity(n + 1)
                } else {
                    reach.below(y).clone()
                }
            })
            .collect();
        Poset::from_below(below, (1..=n).collect())
    }

    fn from_below(below: Vec<FixedBitSet>, extension: Vec<usize>) -> Self {
        let above = transpose_bits(&below);
        Poset {
            above,
            below,
            extension,
        }
    }

    /// Replaces the extension after checking it.
    pub fn with_extension(mut self, ext: Vec<usize>) -> Result<Self, PosetError> {
        check_extension(self.n(), &ext, self.relations())?;
        self.extension = ext;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.below.len() - 1
    }

    pub fn less(&self, x: usize, y: usize) -> bool {
        self.below[y].contains(x)
    }

    pub fn above(&self, x: usize) -> &FixedBitSet {
        &self.above[x]
    }

    pub fn below(&self, y: usize) -> &FixedBitSet {
        &self.below[y]
    }

    pub fn extension(&self) -> &[usize] {
        &self.extension
    }

    /// All pairs `x < y` of the order, sorted.
    pub fn relations(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.n()).flat_map(move |x| self.above[x].ones().map(move |y| (x, y)))
    }
}

fn transpose_bits(rows: &[FixedBitSet]) -> Vec<FixedBitSet> {
    let n = rows.len() - 1;
    let mut out = vec![FixedBitSet::with_capacity(n + 1); n + 1];
    for (y, row) in rows.iter().enumerate() {
        for x in row.ones() {
            out[x].insert(y);
        }
    }
    out
}

fn transpose(below: &[FixedBitSet]) -> Vec<Vec<usize>> {
    transpose_bits(below)
        .iter()
        .map(|s| s.ones().collect())
        .collect()
}

/// Checks that `ext` is a permutation of `1..=n` placing every `x` of a
/// relation pair `(x, y)` before `y`.
pub fn check_extension(
    n: usize,
    ext: &[usize],
    mut relations: impl Iterator<Item = (usize, usize)>,
) -> Result<(), PosetError> {
    let mut pos = vec![usize::MAX; n + 1];
    if ext.len() != n {
        return Err(PosetError::NotAPermutation(n));
    }
    for (i, &v) in ext.iter().enumerate() {
        if v == 0 || v > n || pos[v] != usize::MAX {
            return Err(PosetError::NotAPermutation(n));
        }
        pos[v] = i;
    }
    match relations.find(|&(x, y)| pos[x] > pos[y]) {
        Some((x, y)) => Err(PosetError::NotAnExtension(x, y)),
        None => Ok(()),
    }
}

/// Hasse diagram: `x -> y` whenever `y` covers `x`. Always acyclic; the
/// smallest-label-first topological order is computed on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverDag {
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
    order: Vec<usize>,
}

impl CoverDag {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, PosetError> {
        let mut succ = vec![Vec::new(); n + 1];
        let mut pred = vec![Vec::new(); n + 1];
        for &(x, y) in edges {
            for v in [x, y] {
                if v == 0 || v > n {
                    return Err(PosetError::OutOfRange { v, n });
                }
            }
            if x == y {
                return Err(PosetError::Reflexive(x));
            }
            succ[x].push(y);
            pred[y].push(x);
        }
        for (x, list) in succ.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(PosetError::DuplicateCover(x, w[0]));
            }
        }
        pred.iter_mut().for_each(|l| l.sort_unstable());
        let order = linear_extension_of(&succ)?;
        Ok(CoverDag { succ, pred, order })
    }

    pub fn n(&self) -> usize {
        self.succ.len() - 1
    }

    /// Elements covering `x`.
    pub fn covers_of(&self, x: usize) -> &[usize] {
        &self.succ[x]
    }

    /// Elements covered by `y` (the set `C(y)` of the greedy rule).
    pub fn covered_by(&self, y: usize) -> &[usize] {
        &self.pred[y]
    }

    pub fn successors(&self) -> &[Vec<usize>] {
        &self.succ
    }

    /// Smallest-label-first topological order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Edges `(x, y)` sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().map(move |&y| (x, y)))
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    /// Undirected shadow: the cover graph.
    pub fn cover_graph(&self) -> Graph {
        let mut g = Graph::new(self.n());
        for (x, y) in self.edges() {
            g.add_edge(x, y).expect("cover edges are simple");
        }
        g
    }

    /// `T(v)` for every `v`: the down-sets including `v` itself.
    pub fn down_closures(&self) -> Vec<FixedBitSet> {
        let n = self.n();
        let mut closure = vec![FixedBitSet::with_capacity(n + 1); n + 1];
        for &y in &self.order {
            let mut acc = FixedBitSet::with_capacity(n + 1);
            acc.insert(y);
            for &x in &self.pred[y] {
                acc.union_with(&closure[x]);
            }
            closure[y] = acc;
        }
        closure
    }
}

/// Topological order of a DAG given by successor lists (slot 0 unused),
/// always releasing the smallest available label first.
pub fn linear_extension_of(succ: &[Vec<usize>]) -> Result<Vec<usize>, PosetError> {
    let n = succ.len().saturating_sub(1);
    let mut indeg = vec![0usize; n + 1];
    for list in succ {
        for &y in list {
            indeg[y] += 1;
        }
    }
    let mut ready: BinaryHeap<Reverse<usize>> =
        (1..=n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(v)) = ready.pop() {
        order.push(v);
        for &w in &succ[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.push(Reverse(w));
            }
        }
    }
    if order.len() < n {
        let stuck = (1..=n).find(|&v| indeg[v] > 0).expect("some vertex on a cycle");
        return Err(PosetError::Cyclic(stuck));
    }
    Ok(order)
}

/// Deterministic linear extension of a cover DAG.
pub fn linear_extension(cd: &CoverDag) -> Vec<usize> {
    cd.order().to_vec()
}

/// Exact cover relation: `y` covers `x` iff `x < y` and nothing lies
/// strictly between them.
pub fn covers_from_order(p: &Poset) -> CoverDag {
    let mut edges = Vec::new();
    for x in 1..=p.n() {
        for y in p.above(x).ones() {
            if p.above(x).is_disjoint(p.below(y)) {
                edges.push((x, y));
            }
        }
    }
    CoverDag::new(p.n(), &edges).expect("covers of a poset form a DAG")
}

/// First pair `(x, y)` joined by two distinct cover chains, scanning sources
/// in label order; `None` if the poset is uniquely generated.
pub fn unique_generation_violation(cd: &CoverDag, exec: Exec) -> Option<(usize, usize)> {
    let hits = exec.map_range(cd.n(), |i| {
        let source = i + 1;
        if cd.covers_of(source).len() < 2 {
            return None;
        }
        let counts = saturating_path_counts_in_order(cd.successors(), cd.order(), source);
        counts
            .iter()
            .position(|&c| c == PathCount::Many)
            .map(|y| (source, y))
    });
    hits.into_iter().flatten().next()
}

pub fn is_uniquely_generated(cd: &CoverDag) -> bool {
    unique_generation_violation(cd, Exec::default()).is_none()
}

/// Graph of all comparable pairs; contains the cover graph.
pub fn comparability_graph(p: &Poset) -> Graph {
    let g = Graph::from_edges(p.n(), p.relations()).expect("order relation is simple");
    debug_assert!(covers_from_order(p).edges().all(|(x, y)| g.has_edge(x, y)));
    g
}

/// Minimal and maximal elements of a poset with no three-element chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Height2 {
    /// Elements with nothing below them, isolated elements included.
    pub minimals: Vec<usize>,
    pub maximals: Vec<usize>,
}

pub fn check_height2(p: &Poset) -> Result<Height2, PosetError> {
    let mut minimals = Vec::new();
    let mut maximals = Vec::new();
    for v in 1..=p.n() {
        match (p.below(v).ones().next(), p.above(v).ones().next()) {
            (Some(x), Some(z)) => return Err(PosetError::ChainOfThree(x, v, z)),
            (None, _) => minimals.push(v),
            (Some(_), None) => maximals.push(v),
        }
    }
    debug_assert_eq!(covers_from_order(p).edge_count(), p.relations().count());
    Ok(Height2 { minimals, maximals })
}
