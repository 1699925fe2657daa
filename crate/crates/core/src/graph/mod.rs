//! Undirected simple graphs on integer-labeled vertices and the exact
//! algorithms the rest of the crate is built on.
//!
//! Vertices are the labels `1..=n`. Whenever a direction is needed it is
//! derived from the labels: an edge `{u, v}` with `u < v` is read as `u -> v`.

mod bipartite;
mod chromatic;
mod cycles;
mod independent;
mod monotone;

pub use bipartite::{find_empty_block, EmptyBlock};
pub use chromatic::{chromatic_number_exact, ChromaticResult, MAX_EXACT_CHROMATIC};
pub use cycles::{count_short_cycles, girth, CycleCapExceeded, Girth, ShortCycles};
pub use independent::{max_independent_set, IndependentSet};
pub use monotone::{
    has_two_edge_disjoint_monotone_paths, list_bad_pairs, monotone_path_counts,
    monotone_reachability, saturating_path_counts, saturating_path_counts_in_order, PathCount,
    Reachability,
};

use fixedbitset::FixedBitSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {v} outside 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
}

/// Undirected simple graph on vertices `1..=n`.
///
/// Adjacency lists are kept sorted; slot 0 is unused so that labels index
/// directly.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n + 1],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, out-of-range
    /// endpoints and repeated edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            if !g.add_edge(u, v)? {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 1..=n {
            for v in u + 1..=n {
                g.add_edge(u, v).expect("valid");
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let edges = (1..=n).map(|v| (v, v % n + 1));
        Graph::from_edges(n, edges).expect("valid")
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i + 1, (i + 1) % 5 + 1));
        let spokes = (0..5).map(|i| (i + 1, i + 6));
        let inner = (0..5).map(|i| (i + 6, (i + 2) % 5 + 6));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("valid")
    }

    /// Adds `{u, v}`. Returns `Ok(false)` if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(true)
            }
        }
    }

    /// Removes `{u, v}` if present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u == 0 || v == 0 || u > self.n || v > self.n {
            return false;
        }
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).expect("symmetric adjacency");
                self.adj[v].remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v == 0 || v > self.n {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Neighbors with a larger label, i.e. the out-neighbors in the label
    /// orientation.
    pub fn up_neighbors(&self, v: usize) -> &[usize] {
        let adj = &self.adj[v];
        let split = adj.partition_point(|&w| w < v);
        &adj[split..]
    }

    /// Neighbors with a smaller label.
    pub fn down_neighbors(&self, v: usize) -> &[usize] {
        let adj = &self.adj[v];
        let split = adj.partition_point(|&w| w < v);
        &adj[..split]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices()
            .flat_map(move |u| self.up_neighbors(u).iter().map(move |&v| (u, v)))
    }

    /// Induced subgraph on `keep` (labels ascending), relabeled to `1..=len`
    /// in the same relative order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        let mut relabel = vec![0usize; self.n + 1];
        for (i, &v) in keep.iter().enumerate() {
            relabel[v] = i + 1;
        }
        let mut g = Graph::new(keep.len());
        for &u in keep {
            for &v in self.up_neighbors(u) {
                if relabel[v] != 0 {
                    g.add_edge(relabel[u], relabel[v]).expect("relabelled edge");
                }
            }
        }
        g
    }

    /// Adjacency as bitsets indexed by label (bit 0 unused).
    pub fn adjacency_bits(&self) -> Vec<FixedBitSet> {
        let mut bits = vec![FixedBitSet::with_capacity(self.n + 1); self.n + 1];
        for (u, v) in self.edges() {
            bits[u].insert(v);
            bits[v].insert(u);
        }
        bits
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// True if every edge joins differently colored endpoints. `color` is
    /// indexed by label.
    pub fn is_proper_coloring(&self, color: &[u32]) -> bool {
        self.edges().all(|(u, v)| color[u] != color[v])
    }
}
