use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use super::Graph;

/// Length of a shortest cycle; forests have infinite girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    /// `girth >= r`, with `Infinite` passing every bound.
    pub fn at_least(self, r: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= r,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

/// Returns the girth together with a witness cycle of exactly that length.
///
/// One BFS per root; a non-tree edge `uw` closes a walk of length
/// `d(u) + d(w) + 1` through the root, which contains a cycle no longer than
/// the walk. The minimum over all roots is the girth.
pub fn girth(g: &Graph) -> (Girth, Option<Vec<usize>>) {
    let n = g.n();
    let mut best = usize::MAX;
    let mut witness: Option<Vec<usize>> = None;
    let mut dist = vec![usize::MAX; n + 1];
    let mut parent = vec![0usize; n + 1];
    let mut queue = VecDeque::new();

    for root in g.vertices() {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = 0;
        queue.clear();
        queue.push_back(root);
        'bfs: while let Some(u) = queue.pop_front() {
            if 2 * dist[u] >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    if len < best {
                        let cycle = close_cycle(&parent, u, w);
                        best = cycle.len();
                        witness = Some(cycle);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
        }
        if best == 3 {
            break;
        }
    }
    match witness {
        Some(cycle) => (Girth::Finite(best), Some(cycle)),
        None => (Girth::Infinite, None),
    }
}

/// Joins the tree paths of `u` and `w` at their lowest common ancestor.
fn close_cycle(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let up = |mut v: usize| {
        let mut path = vec![v];
        while parent[v] != 0 {
            v = parent[v];
            path.push(v);
        }
        path
    };
    let mut pu = up(u);
    let mut pw = up(w);
    // Both end at the root; strip the shared suffix but keep the LCA once.
    while pu.len() >= 2 && pw.len() >= 2 && pu[pu.len() - 2] == pw[pw.len() - 2] {
        pu.pop();
        pw.pop();
    }
    pw.pop();
    pw.reverse();
    pu.extend(pw);
    pu
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortCycles {
    pub count: usize,
    /// Each cycle once, starting at its smallest vertex, second vertex smaller
    /// than the last.
    pub cycles: Vec<Vec<usize>>,
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("more than {cap} cycles of length below {r}")]
pub struct CycleCapExceeded {
    pub cap: usize,
    pub r: usize,
}

/// Enumerates every cycle of length `3..r` exactly once (rotations and
/// reflections identified). Fails once more than `cap` cycles are found.
pub fn count_short_cycles(g: &Graph, r: usize, cap: usize) -> Result<ShortCycles, CycleCapExceeded> {
    let max_len = r.saturating_sub(1);
    let mut cycles = Vec::new();
    if max_len < 3 {
        return Ok(ShortCycles { count: 0, cycles });
    }
    let mut on_path = vec![false; g.n() + 1];
    let mut path = Vec::with_capacity(max_len);
    for start in g.vertices() {
        path.push(start);
        on_path[start] = true;
        extend(g, start, max_len, &mut path, &mut on_path, &mut cycles, cap)
            .map_err(|()| CycleCapExceeded { cap, r })?;
        on_path[start] = false;
        path.pop();
    }
    Ok(ShortCycles {
        count: cycles.len(),
        cycles,
    })
}

fn extend(
    g: &Graph,
    start: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) -> Result<(), ()> {
    let last = *path.last().expect("nonempty path");
    for &w in g.neighbors(last) {
        if w == start && path.len() >= 3 && path[1] < last {
            if out.len() == cap {
                return Err(());
            }
            out.push(path.clone());
        } else if w > start && !on_path[w] && path.len() < max_len {
            path.push(w);
            on_path[w] = true;
            extend(g, start, max_len, path, on_path, out, cap)?;
            on_path[w] = false;
            path.pop();
        }
    }
    Ok(())
}
