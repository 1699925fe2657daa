//! Brute-force oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::VecDeque;

use girthforge::Graph;
use proptest::prelude::*;

/// Random graph on `1..=n` from an edge-inclusion mask.
pub fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), proptest::collection::vec(any::<bool>(), pairs)).prop_map(|(n, bits)| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

/// Sparse variant: each pair present with probability `1/den`.
pub fn sparse_graph_strategy(max_n: usize, den: u32) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), proptest::collection::vec(0..den, pairs)).prop_map(|(n, draws)| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    if draws[k] == 0 {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn bfs_without_edge(g: &Graph, s: usize, t: usize) -> Option<usize> {
    let mut dist = vec![usize::MAX; g.n() + 1];
    dist[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &w in g.neighbors(u) {
            if (u == s && w == t) || (u == t && w == s) {
                continue;
            }
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
        }
    }
    (dist[t] != usize::MAX).then_some(dist[t])
}

/// Shortest cycle through some edge `uv`: one plus the `u`-`v` distance
/// without that edge.
pub fn girth_oracle(g: &Graph) -> Option<usize> {
    g.edges().filter_map(|(u, v)| bfs_without_edge(g, u, v).map(|d| d + 1)).min()
}

fn permutations(items: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Cycles of each length `3..=max_len`, counted as Hamiltonian cycles of
/// induced subgraphs on every vertex subset.
pub fn cycle_count_oracle(g: &Graph, max_len: usize) -> usize {
    let n = g.n();
    let mut total = 0;
    for mask in 0u32..1 << n {
        let size = mask.count_ones() as usize;
        if size < 3 || size > max_len {
            continue;
        }
        let verts: Vec<usize> = (0..n).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect();
        let first = verts[0];
        let mut rest = verts[1..].to_vec();
        let mut directed = 0;
        permutations(&mut rest, 0, &mut |perm| {
            let mut prev = first;
            for &v in perm {
                if !g.has_edge(prev, v) {
                    return;
                }
                prev = v;
            }
            if g.has_edge(prev, first) {
                directed += 1;
            }
        });
        total += directed / 2;
    }
    total
}

pub fn alpha_oracle(g: &Graph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|mask| {
            g.edges()
                .all(|(u, v)| mask & (1 << (u - 1)) == 0 || mask & (1 << (v - 1)) == 0)
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Smallest `k` admitting a proper coloring, by exhaustive assignment.
pub fn chromatic_oracle(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    (1..=n)
        .find(|&k| {
            let total = (k as u64).pow(n as u32);
            (0..total).any(|mut code| {
                let mut color = vec![0usize; n + 1];
                for c in color.iter_mut().skip(1) {
                    *c = (code % k as u64) as usize;
                    code /= k as u64;
                }
                g.edges().all(|(u, v)| color[u] != color[v])
            })
        })
        .unwrap()
}

/// All monotone paths from `x` to `y`, each as its list of edges.
pub fn monotone_paths(g: &Graph, x: usize, y: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(g: &Graph, v: usize, y: usize, path: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if v == y {
            out.push(path.clone());
            return;
        }
        for &w in g.up_neighbors(v) {
            if w <= y {
                path.push((v, w));
                go(g, w, y, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, x, y, &mut Vec::new(), &mut out);
    out
}

pub fn two_disjoint_oracle(g: &Graph, x: usize, y: usize) -> bool {
    let paths = monotone_paths(g, x, y);
    (0..paths.len()).any(|i| {
        (i + 1..paths.len()).any(|j| paths[i].iter().all(|e| !paths[j].contains(e)))
    })
}
