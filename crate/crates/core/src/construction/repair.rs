use std::fmt;

use thiserror::Error;

use super::event_a::{event_a_check, EventA};
use super::layered::LayeredGraph;
use crate::exec::Exec;
use crate::graph::{count_short_cycles, girth, list_bad_pairs, CycleCapExceeded, Graph};

/// Default bound on enumerated short cycles before repair gives up.
pub const DEFAULT_CYCLE_CAP: usize = 200_000;

#[derive(Clone, Copy, Debug)]
pub struct RepairOptions {
    pub cycle_cap: usize,
    pub exec: Exec,
}

impl Default for RepairOptions {
    fn default() -> Self {
        RepairOptions {
            cycle_cap: DEFAULT_CYCLE_CAP,
            exec: Exec::default(),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepairError {
    #[error("only {survived} vertices survive repair, {target} requested; resample with another seed")]
    InsufficientSurvivors { survived: usize, target: usize },
    #[error("short-cycle enumeration exceeded its cap; resample instead of repairing")]
    CycleCap(#[from] CycleCapExceeded),
    #[error("repaired graph still violates {0}")]
    PostCondition(&'static str),
}

/// What repair found and removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepairReport {
    /// Deleted vertices, original labels, ascending.
    pub deleted: Vec<usize>,
    /// Number of bad pairs before repair.
    pub bad_pairs_found: usize,
    /// Number of cycles shorter than `r` before repair.
    pub short_cycles_found: usize,
    pub event_a: EventA,
    pub survived_n: usize,
    /// `kept[i]` is the original label of new vertex `i + 1`.
    pub kept: Vec<usize>,
}

impl RepairReport {
    /// Old-to-new label map (0 for deleted vertices), indexed by old label.
    pub fn relabel(&self, old_n: usize) -> Vec<usize> {
        let mut map = vec![0; old_n + 1];
        for (i, &old) in self.kept.iter().enumerate() {
            map[old] = i + 1;
        }
        map
    }
}

impl fmt::Display for RepairReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        writeln!(f, "bad_pairs_found={}", self.bad_pairs_found)?;
        writeln!(f, "short_cycles_found={}", self.short_cycles_found)?;
        writeln!(f, "event_a={}", self.event_a)?;
        writeln!(f, "deleted_count={}", self.deleted.len())?;
        writeln!(f, "deleted={}", join(&self.deleted))?;
        writeln!(f, "survived_n={}", self.survived_n)?;
        writeln!(f, "kept={}", join(&self.kept))
    }
}

/// Removes a hitting set of all bad pairs and all cycles shorter than `r`,
/// then trims to `target_n` by dropping the highest labels.
///
/// The hitting set is greedy: repeatedly delete the vertex lying in the most
/// unresolved violations, smallest label on ties. Deleting vertices never
/// creates a bad pair or a cycle, so one pass suffices; the result is
/// re-checked from scratch anyway.
pub fn repair(
    lg: &LayeredGraph,
    r: usize,
    target_n: Option<usize>,
    opts: RepairOptions,
) -> Result<(Graph, RepairReport), RepairError> {
    let g = &lg.graph;
    let n = g.n();
    let bad = list_bad_pairs(g, opts.exec);
    let cycles = count_short_cycles(g, r, opts.cycle_cap)?;
    let event_a = event_a_check(lg);

    let mut violations: Vec<Vec<usize>> = bad.iter().map(|&(x, y)| vec![x, y]).collect();
    violations.extend(cycles.cycles.iter().cloned());

    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (id, vs) in violations.iter().enumerate() {
        for &v in vs {
            incident[v].push(id);
        }
    }
    let mut load: Vec<usize> = incident.iter().map(Vec::len).collect();
    let mut resolved = vec![false; violations.len()];
    let mut removed = vec![false; n + 1];
    loop {
        // max_by_key keeps the last maximum; reverse so the smallest label wins.
        let pick = (1..=n)
            .rev()
            .filter(|&v| load[v] > 0)
            .max_by_key(|&v| load[v]);
        let Some(v) = pick else { break };
        removed[v] = true;
        for &id in &incident[v] {
            if !resolved[id] {
                resolved[id] = true;
                for &w in &violations[id] {
                    load[w] -= 1;
                }
            }
        }
    }

    let mut kept: Vec<usize> = (1..=n).filter(|&v| !removed[v]).collect();
    if let Some(target) = target_n {
        if kept.len() < target {
            return Err(RepairError::InsufficientSurvivors {
                survived: kept.len(),
                target,
            });
        }
        for v in kept.drain(target..) {
            removed[v] = true;
        }
    }

    let gprime = g.induced(&kept);
    if !list_bad_pairs(&gprime, opts.exec).is_empty() {
        return Err(RepairError::PostCondition("bad pairs"));
    }
    if !girth(&gprime).0.at_least(r) {
        return Err(RepairError::PostCondition("girth"));
    }

    let report = RepairReport {
        deleted: (1..=n).filter(|&v| removed[v]).collect(),
        bad_pairs_found: bad.len(),
        short_cycles_found: cycles.count,
        event_a,
        survived_n: kept.len(),
        kept,
    };
    Ok((gprime, report))
}
