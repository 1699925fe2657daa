use std::fmt;

use thiserror::Error;

use super::event_a::EventA;
use crate::exec::Exec;
use crate::graph::{girth, list_bad_pairs, max_independent_set, monotone_reachability, Graph};
use crate::poset::{covers_from_order, unique_generation_violation, Poset};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("graph has bad pair {{{0}, {1}}}")]
pub struct BadPairsPresent(pub usize, pub usize);

/// Poset of monotone reachability on a graph without bad pairs. Its cover
/// relation is the edge set and the identity labeling extends it.
pub fn build_poset(gprime: &Graph, exec: Exec) -> Result<Poset, BadPairsPresent> {
    if let Some(&(x, y)) = list_bad_pairs(gprime, exec).first() {
        return Err(BadPairsPresent(x, y));
    }
    Ok(Poset::from_reachability(&monotone_reachability(gprime)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub name: &'static str,
    pub pass: bool,
    /// Whitespace-free detail: the certificate on success, the witness on
    /// failure.
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub clauses: Vec<Clause>,
    pub n: usize,
    pub alpha: usize,
    pub alpha_upper: usize,
    pub alpha_exact: bool,
    /// `ceil(n / alpha_upper)`, a certified lower bound on chi.
    pub chi_lower: usize,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&Clause> {
        self.clauses.iter().find(|c| !c.pass)
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        writeln!(f, "alpha={}", self.alpha)?;
        writeln!(f, "alpha_upper={}", self.alpha_upper)?;
        writeln!(f, "alpha_exact={}", self.alpha_exact)?;
        writeln!(f, "chi_lower={}", self.chi_lower)?;
        for c in &self.clauses {
            let verdict = if c.pass { "pass" } else { "fail" };
            writeln!(f, "clause {} {} {}", c.name, verdict, c.witness)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub mis_budget: u64,
    pub exec: Exec,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            mis_budget: crate::DEFAULT_MIS_BUDGET,
            exec: Exec::default(),
        }
    }
}

fn pair(x: usize, y: usize) -> String {
    format!("{x},{y}")
}

/// Re-derives every claimed property of a repaired graph from scratch.
///
/// Clauses: `a-girth`, `b-bad-pairs`, `c-covers`, `d-unique`, `e-alpha`,
/// `f-event-a`. `layer_size` is the `m` of the construction, used for the
/// `alpha <= 7m` implication when `event_a` holds.
pub fn verify_construction(
    gprime: &Graph,
    r: usize,
    layer_size: usize,
    event_a: &EventA,
    opts: &VerifyOptions,
) -> VerificationReport {
    let mut clauses = Vec::with_capacity(6);

    let (g_val, cycle) = girth(gprime);
    clauses.push(Clause {
        name: "a-girth",
        pass: g_val.at_least(r),
        witness: match cycle {
            Some(c) if !g_val.at_least(r) => format!(
                "cycle={}",
                c.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
            ),
            _ => format!("girth={g_val}"),
        },
    });

    let bad = list_bad_pairs(gprime, opts.exec);
    clauses.push(Clause {
        name: "b-bad-pairs",
        pass: bad.is_empty(),
        witness: match bad.first() {
            Some(&(x, y)) => format!("pair={}", pair(x, y)),
            None => "count=0".to_string(),
        },
    });

    // The order is always monotone reachability, whether or not the graph
    // is clean; clause (c) is what detects a mismatch.
    let poset = Poset::from_reachability(&monotone_reachability(gprime));
    let covers = covers_from_order(&poset);
    let mismatch = covers
        .edges()
        .find(|&(x, y)| !gprime.has_edge(x, y))
        .map(|(x, y)| format!("extra_cover={}", pair(x, y)))
        .or_else(|| {
            gprime
                .edges()
                .find(|&(x, y)| !covers.covers_of(x).contains(&y))
                .map(|(x, y)| format!("edge_not_cover={}", pair(x, y)))
        });
    clauses.push(Clause {
        name: "c-covers",
        pass: mismatch.is_none(),
        witness: mismatch.unwrap_or_else(|| format!("covers={}", covers.edge_count())),
    });

    let violation = unique_generation_violation(&covers, opts.exec);
    clauses.push(Clause {
        name: "d-unique",
        pass: violation.is_none(),
        witness: match violation {
            Some((x, y)) => format!("two_chains={}", pair(x, y)),
            None => "max_paths=1".to_string(),
        },
    });

    let n = gprime.n();
    let mis = max_independent_set(gprime, opts.mis_budget);
    let independent = gprime.is_independent(&mis.witness);
    let chi_lower = if n == 0 { 0 } else { n.div_ceil(mis.upper.max(1)) };
    clauses.push(Clause {
        name: "e-alpha",
        pass: independent,
        witness: format!(
            "alpha={},upper={},exact={},chi_lower={}",
            mis.alpha, mis.upper, mis.exact, chi_lower
        ),
    });

    let seven_m = 7 * layer_size;
    clauses.push(match event_a {
        EventA::Holds => Clause {
            name: "f-event-a",
            pass: mis.upper <= seven_m,
            witness: format!("alpha_upper={},7m={}", mis.upper, seven_m),
        },
        other => Clause {
            name: "f-event-a",
            pass: true,
            witness: format!("skipped={other}"),
        },
    });

    VerificationReport {
        clauses,
        n,
        alpha: mis.alpha,
        alpha_upper: mis.upper,
        alpha_exact: mis.exact,
        chi_lower,
    }
}
