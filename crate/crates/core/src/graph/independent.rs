use fixedbitset::FixedBitSet;

use super::Graph;

/// Outcome of the independence-number search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependentSet {
    /// Size of the best independent set found; a lower bound on alpha.
    pub alpha: usize,
    pub witness: Vec<usize>,
    /// Certified upper bound on alpha (equals `alpha` when exact).
    pub upper: usize,
    /// False when the node budget ran out before the search closed.
    pub exact: bool,
    pub nodes: u64,
}

/// Branch and bound for the independence number.
///
/// Vertices of degree at most one in the candidate set are taken without
/// branching; otherwise the search branches on a maximum-degree vertex. A
/// greedy clique cover of the candidates bounds what they can still add.
pub fn max_independent_set(g: &Graph, budget: u64) -> IndependentSet {
    let adj = g.adjacency_bits();
    let mut cand = FixedBitSet::with_capacity(g.n() + 1);
    cand.insert_range(1..g.n() + 1);
    let root_bound = clique_cover_size(&adj, &cand);

    let mut search = Search {
        adj: &adj,
        best: Vec::new(),
        nodes: 0,
        budget,
        exhausted: false,
    };
    // Seed with a greedy solution so pruning starts early.
    search.best = greedy_independent(&adj, &cand);
    let mut current = Vec::new();
    search.branch(cand, &mut current);

    let mut witness = search.best;
    witness.sort_unstable();
    let exact = !search.exhausted;
    IndependentSet {
        alpha: witness.len(),
        upper: if exact { witness.len() } else { root_bound },
        witness,
        exact,
        nodes: search.nodes,
    }
}

struct Search<'a> {
    adj: &'a [FixedBitSet],
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl Search<'_> {
    fn branch(&mut self, mut cand: FixedBitSet, current: &mut Vec<usize>) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }

        let base = current.len();
        // Degree <= 1 vertices belong to some maximum independent set.
        loop {
            let low = cand
                .ones()
                .find(|&v| self.adj[v].intersection_count(&cand) <= 1);
            match low {
                Some(v) => {
                    current.push(v);
                    cand.set(v, false);
                    cand.difference_with(&self.adj[v]);
                }
                None => break,
            }
        }

        if cand.is_clear() {
            if current.len() > self.best.len() {
                self.best = current.clone();
            }
        } else if current.len() + clique_cover_size(self.adj, &cand) > self.best.len() {
            let v = cand
                .ones()
                .max_by_key(|&v| (self.adj[v].intersection_count(&cand), std::cmp::Reverse(v)))
                .expect("nonempty candidates");

            let mut with = cand.clone();
            with.set(v, false);
            with.difference_with(&self.adj[v]);
            current.push(v);
            self.branch(with, current);
            current.pop();

            cand.set(v, false);
            self.branch(cand, current);
        }
        current.truncate(base);
    }
}

/// Number of cliques in a greedy clique cover of `cand`; an upper bound on
/// the independence number of the induced subgraph.
fn clique_cover_size(adj: &[FixedBitSet], cand: &FixedBitSet) -> usize {
    // Each clique is tracked by the set of candidates adjacent to all members.
    let mut joinable: Vec<FixedBitSet> = Vec::new();
    for v in cand.ones() {
        match joinable.iter_mut().find(|common| common.contains(v)) {
            Some(common) => common.intersect_with(&adj[v]),
            None => {
                let mut common = adj[v].clone();
                common.intersect_with(cand);
                joinable.push(common);
            }
        }
    }
    joinable.len()
}

fn greedy_independent(adj: &[FixedBitSet], cand: &FixedBitSet) -> Vec<usize> {
    let mut left = cand.clone();
    let mut chosen = Vec::new();
    while let Some(v) = left
        .ones()
        .min_by_key(|&v| (adj[v].intersection_count(&left), v))
    {
        chosen.push(v);
        left.set(v, false);
        left.difference_with(&adj[v]);
    }
    chosen
}
