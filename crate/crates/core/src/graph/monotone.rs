//! Monotone paths: paths whose labels strictly increase.

use std::ops::Add;

use fixedbitset::FixedBitSet;

use super::Graph;
use crate::exec::Exec;

/// Number of paths, saturated at two.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PathCount {
    #[default]
    Zero,
    One,
    Many,
}

impl Add for PathCount {
    type Output = PathCount;

    fn add(self, rhs: PathCount) -> PathCount {
        use PathCount::*;
        match (self, rhs) {
            (Zero, c) | (c, Zero) => c,
            _ => Many,
        }
    }
}

/// The relation "a monotone path leads from `x` up to `y`".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reachability {
    below: Vec<FixedBitSet>,
    above: Vec<FixedBitSet>,
}

impl Reachability {
    pub fn n(&self) -> usize {
        self.below.len() - 1
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        x < y && self.below[y].contains(x)
    }

    /// Vertices reachable from `x`, ascending.
    pub fn above(&self, x: usize) -> &FixedBitSet {
        &self.above[x]
    }

    /// Vertices that reach `y`, ascending.
    pub fn below(&self, y: usize) -> &FixedBitSet {
        &self.below[y]
    }

    /// All related pairs `(x, y)`, `x < y`, lexicographically.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.n()).flat_map(move |x| self.above[x].ones().map(move |y| (x, y)))
    }

    pub fn len(&self) -> usize {
        self.above.iter().map(|s| s.count_ones(..)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Monotone reachability in one pass over the labels in increasing order:
/// the vertices below `y` are its lower neighbors and everything below them.
pub fn monotone_reachability(g: &Graph) -> Reachability {
    let n = g.n();
    let mut below = vec![FixedBitSet::with_capacity(n + 1); n + 1];
    for y in g.vertices() {
        let mut acc = FixedBitSet::with_capacity(n + 1);
        for &x in g.down_neighbors(y) {
            acc.insert(x);
            acc.union_with(&below[x]);
        }
        below[y] = acc;
    }
    let mut above = vec![FixedBitSet::with_capacity(n + 1); n + 1];
    for y in g.vertices() {
        for x in below[y].ones() {
            above[x].insert(y);
        }
    }
    Reachability { below, above }
}

/// Saturating counts of label-increasing paths from `source`; the source
/// itself counts its trivial path. Indexed by label.
pub fn saturating_path_counts(g: &Graph, source: usize) -> Vec<PathCount> {
    let mut counts = vec![PathCount::Zero; g.n() + 1];
    counts[source] = PathCount::One;
    for v in source..=g.n() {
        let c = counts[v];
        if c == PathCount::Zero {
            continue;
        }
        for &w in g.up_neighbors(v) {
            counts[w] = counts[w] + c;
        }
    }
    counts
}

/// Saturating path counts on an arbitrary DAG given by successor lists and a
/// topological order of its vertices.
pub fn saturating_path_counts_in_order(
    succ: &[Vec<usize>],
    order: &[usize],
    source: usize,
) -> Vec<PathCount> {
    let mut counts = vec![PathCount::Zero; succ.len()];
    counts[source] = PathCount::One;
    for &v in order {
        let c = counts[v];
        if c == PathCount::Zero {
            continue;
        }
        for &w in &succ[v] {
            counts[w] = counts[w] + c;
        }
    }
    counts
}

/// Exact counts of monotone paths from `source` (saturating at `u64::MAX`).
pub fn monotone_path_counts(g: &Graph, source: usize) -> Vec<u64> {
    let mut counts = vec![0u64; g.n() + 1];
    counts[source] = 1;
    for v in source..=g.n() {
        let c = counts[v];
        if c == 0 {
            continue;
        }
        for &w in g.up_neighbors(v) {
            counts[w] = counts[w].saturating_add(c);
        }
    }
    counts
}

/// Whether two edge-disjoint monotone paths join `x < y`: a unit-capacity
/// flow of value two on the label-oriented edges inside `[x, y]`.
pub fn has_two_edge_disjoint_monotone_paths(g: &Graph, x: usize, y: usize) -> bool {
    assert!(x < y, "query pair must satisfy x < y");
    let mut arcs = Vec::new();
    for v in x..y {
        for &w in g.up_neighbors(v) {
            if w > y {
                break;
            }
            arcs.push((v - x, w - x));
        }
    }
    UnitFlow::new(y - x + 1, &arcs).reaches(0, y - x, 2)
}

/// Every bad pair `(x, y)`, `x < y`: pairs joined by two edge-disjoint
/// monotone paths. Flow runs only on monotone-reachable pairs.
pub fn list_bad_pairs(g: &Graph, exec: Exec) -> Vec<(usize, usize)> {
    let reach = monotone_reachability(g);
    let per_source = exec.map_range(g.n(), |i| {
        let x = i + 1;
        // A bad pair needs two distinct first edges out of x.
        if g.up_neighbors(x).len() < 2 {
            return Vec::new();
        }
        reach
            .above(x)
            .ones()
            .filter(|&y| g.down_neighbors(y).len() >= 2)
            .filter(|&y| has_two_edge_disjoint_monotone_paths(g, x, y))
            .map(|y| (x, y))
            .collect::<Vec<_>>()
    });
    per_source.into_iter().flatten().collect()
}

/// Augmenting-path max flow with unit capacities, stopped once the requested
/// value is reached.
struct UnitFlow {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u8>,
}

impl UnitFlow {
    fn new(nodes: usize, arcs: &[(usize, usize)]) -> Self {
        let mut flow = UnitFlow {
            head: vec![Vec::new(); nodes],
            to: Vec::with_capacity(2 * arcs.len()),
            cap: Vec::with_capacity(2 * arcs.len()),
        };
        for &(u, v) in arcs {
            flow.head[u].push(flow.to.len());
            flow.to.push(v);
            flow.cap.push(1);
            flow.head[v].push(flow.to.len());
            flow.to.push(u);
            flow.cap.push(0);
        }
        flow
    }

    fn reaches(mut self, s: usize, t: usize, want: usize) -> bool {
        let mut seen = vec![false; self.head.len()];
        for _ in 0..want {
            seen.iter_mut().for_each(|b| *b = false);
            if !self.augment(s, t, &mut seen) {
                return false;
            }
        }
        true
    }

    fn augment(&mut self, v: usize, t: usize, seen: &mut [bool]) -> bool {
        if v == t {
            return true;
        }
        seen[v] = true;
        for i in 0..self.head[v].len() {
            let arc = self.head[v][i];
            let w = self.to[arc];
            if self.cap[arc] > 0 && !seen[w] && self.augment(w, t, seen) {
                self.cap[arc] -= 1;
                self.cap[arc ^ 1] += 1;
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reachability_examples() {
        let g = Graph::from_edges(5, [(1, 3), (3, 5)]).unwrap();
        let r = monotone_reachability(&g);
        assert_eq!(r.pairs().collect::<Vec<_>>(), vec![(1, 3), (1, 5), (3, 5)]);

        let g = Graph::from_edges(3, [(1, 3), (3, 2)]).unwrap();
        let r = monotone_reachability(&g);
        assert!(!r.contains(1, 2));
        assert!(r.contains(1, 3) && r.contains(2, 3));

        assert!(monotone_reachability(&Graph::new(4)).is_empty());
    }

    #[test]
    fn disjoint_path_examples() {
        let tri = Graph::complete(3);
        assert!(has_two_edge_disjoint_monotone_paths(&tri, 1, 3));
        let path = Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap();
        assert!(!has_two_edge_disjoint_monotone_paths(&path, 1, 3));
        let square = Graph::from_edges(4, [(1, 2), (2, 4), (1, 3), (3, 4)]).unwrap();
        assert!(has_two_edge_disjoint_monotone_paths(&square, 1, 4));
    }

    #[test]
    fn flow_uses_residual_arcs() {
        // The first augmenting path 1-2-4-6 must be rerouted: the disjoint
        // pair is 1-2-5-6 and 1-3-4-6.
        let g = Graph::from_edges(6, [(1, 2), (2, 4), (4, 6), (2, 5), (5, 6), (1, 3), (3, 4)]).unwrap();
        assert!(has_two_edge_disjoint_monotone_paths(&g, 1, 6));
    }

    #[test]
    fn bad_pair_examples() {
        assert_eq!(list_bad_pairs(&Graph::complete(3), Exec::Sequential), vec![(1, 3)]);
        let tree = Graph::from_edges(6, [(1, 2), (1, 3), (3, 4), (4, 5), (2, 6)]).unwrap();
        assert!(list_bad_pairs(&tree, Exec::Parallel).is_empty());
        let mut k2 = Graph::new(6);
        for u in 1..=3 {
            for v in 4..=6 {
                k2.add_edge(u, v).unwrap();
            }
        }
        assert!(list_bad_pairs(&k2, Exec::Parallel).is_empty());
    }

    #[test]
    fn saturating_examples() {
        use PathCount::*;
        let chain = Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(saturating_path_counts(&chain, 1), vec![Zero, One, One, One]);
        let diamond = Graph::from_edges(4, [(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(saturating_path_counts(&diamond, 1)[4], Many);
        assert_eq!(
            saturating_path_counts(&Graph::new(3), 1),
            vec![Zero, One, Zero, Zero]
        );
        assert_eq!(monotone_path_counts(&diamond, 1)[4], 2);
    }

    #[test]
    fn in_order_variant_follows_given_order() {
        use PathCount::*;
        // 3 -> 1 -> 2 and 3 -> 2: two paths from 3 to 2.
        let succ = vec![vec![], vec![2], vec![], vec![1, 2]];
        let counts = saturating_path_counts_in_order(&succ, &[3, 1, 2], 3);
        assert_eq!(counts, vec![Zero, One, Many, One]);
    }
}
