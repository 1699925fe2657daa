use fixedbitset::FixedBitSet;

use super::{check_extension, CoverDag, PosetError};

/// Colors `1..`, indexed by element label (slot 0 unused, holds 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub color: Vec<u32>,
}

impl Coloring {
    pub fn get(&self, v: usize) -> u32 {
        self.color[v]
    }

    pub fn max_color(&self) -> u32 {
        self.color.iter().copied().max().unwrap_or(0)
    }

    pub fn is_proper_on(&self, cd: &CoverDag) -> bool {
        cd.edges().all(|(x, y)| self.color[x] != self.color[y])
    }
}

/// Greedy coloring along `ext`: each element takes the least positive color
/// missing among the elements it covers. Only covered elements are avoided;
/// properness on the whole cover graph follows because `ext` extends the
/// order, and is re-checked before returning.
pub fn greedy_color(cd: &CoverDag, ext: &[usize]) -> Result<Coloring, PosetError> {
    check_extension(cd.n(), ext, cd.edges())?;
    let mut color = vec![0u32; cd.n() + 1];
    let mut seen = Vec::new();
    for &v in ext {
        let covered = cd.covered_by(v);
        seen.clear();
        seen.resize(covered.len() + 2, false);
        for &u in covered {
            let c = color[u] as usize;
            if c < seen.len() {
                seen[c] = true;
            }
        }
        color[v] = (1..seen.len()).find(|&c| !seen[c]).expect("a free color") as u32;
    }
    let coloring = Coloring { color };
    if let Some((x, y)) = cd.edges().find(|&(x, y)| coloring.color[x] == coloring.color[y]) {
        return Err(PosetError::ImproperColoring(x, y));
    }
    Ok(coloring)
}

/// `floor(log2 n) + 1`, the greedy bound for uniquely generated posets
/// (0 for the empty poset).
pub fn log_color_bound(n: usize) -> u32 {
    if n == 0 {
        0
    } else {
        usize::BITS - n.leading_zeros()
    }
}

pub fn verify_color_bound(coloring: &Coloring, n: usize) -> bool {
    coloring.max_color() <= log_color_bound(n)
}

/// The down-set `T(v)` with its induced cover edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DownSet {
    pub root: usize,
    pub members: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

/// `T(v) = {u : u <= v}` and its induced cover subgraph, which must be a
/// tree. Fails with the offending pair when some element of `T(v)` reaches
/// `v` along two cover chains.
pub fn down_set_tree(cd: &CoverDag, v: usize) -> Result<DownSet, PosetError> {
    let closure = down_closure_of(cd, v);
    down_set_from_closure(cd, v, &closure)
}

fn down_closure_of(cd: &CoverDag, v: usize) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(cd.n() + 1);
    let mut stack = vec![v];
    set.insert(v);
    while let Some(y) = stack.pop() {
        for &x in cd.covered_by(y) {
            if !set.put(x) {
                stack.push(x);
            }
        }
    }
    set
}

fn down_set_from_closure(cd: &CoverDag, v: usize, closure: &FixedBitSet) -> Result<DownSet, PosetError> {
    let members: Vec<usize> = closure.ones().collect();
    let mut edges = Vec::with_capacity(members.len().saturating_sub(1));
    for &u in &members {
        let mut inside = cd.covers_of(u).iter().filter(|&&w| closure.contains(w));
        if let Some(&w) = inside.next() {
            edges.push((u, w));
            // Every member below v reaches v, so a second upward cover inside
            // T(v) yields two chains from u to v.
            if inside.next().is_some() {
                return Err(PosetError::NotUniquelyGenerated(u, v));
            }
        }
    }
    // One upward edge per non-root member, all chains ending at v.
    debug_assert_eq!(edges.len() + 1, members.len());
    Ok(DownSet {
        root: v,
        members,
        edges,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeClaimFailure {
    NotATree(PosetError),
    TooSmall { v: usize, color: u32, size: usize },
}

/// Checks `|T(v)| >= 2^(color(v) - 1)` and the tree property of `T(v)` at
/// every element.
pub fn verify_tree_claim(cd: &CoverDag, coloring: &Coloring) -> Result<(), TreeClaimFailure> {
    let closures = cd.down_closures();
    for (v, closure) in closures.iter().enumerate().skip(1) {
        let down = down_set_from_closure(cd, v, closure).map_err(TreeClaimFailure::NotATree)?;
        let color = coloring.get(v);
        let size = down.members.len();
        let needed = 1u128 << (color.saturating_sub(1)).min(127);
        if (size as u128) < needed {
            return Err(TreeClaimFailure::TooSmall { v, color, size });
        }
    }
    Ok(())
}
