use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::Rng;

use super::oracles::{
    bad_pair_bound, bad_pairs_k3_exact, expected_edges, expected_monotone_paths,
    short_cycle_expectation,
};
use super::{run_trials, Criterion, McReport};
use crate::construction::{sample_layout, Layout};
use crate::exec::Exec;
use crate::graph::{list_bad_pairs, monotone_path_counts, Graph};

/// Quantities measured on sampled layered graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LayeredStatistic {
    Edges,
    Triangles,
    /// Monotone paths from the first vertex of `A_1` to the first vertex of
    /// `A_k`.
    MonotonePaths,
    BadPairs,
}

impl LayeredStatistic {
    pub fn name(&self) -> &'static str {
        match self {
            LayeredStatistic::Edges => "edges",
            LayeredStatistic::Triangles => "triangles",
            LayeredStatistic::MonotonePaths => "paths",
            LayeredStatistic::BadPairs => "badpairs",
        }
    }

    fn measure(&self, g: &Graph, layout: &Layout) -> f64 {
        match self {
            LayeredStatistic::Edges => g.edge_count() as f64,
            LayeredStatistic::Triangles => count_triangles(g) as f64,
            LayeredStatistic::MonotonePaths => {
                let target = *layout.layer(layout.k).start();
                monotone_path_counts(g, 1)[target] as f64
            }
            LayeredStatistic::BadPairs => list_bad_pairs(g, Exec::Sequential).len() as f64,
        }
    }

    /// The exact expectation where one is known, else an upper bound.
    fn criterion(&self, layout: &Layout) -> Criterion {
        let (k, m) = (layout.k, layout.m);
        let c = BigRational::from_float(layout.scale).unwrap_or_else(BigRational::one);
        let f = |q: BigRational| q.to_f64().unwrap_or(f64::INFINITY);
        match self {
            LayeredStatistic::Edges => Criterion::MeanNear(f(expected_edges(k, m, &c))),
            LayeredStatistic::Triangles => match short_cycle_expectation(k, m, 4, &c).triangles {
                Some(t) => Criterion::MeanNear(f(t)),
                None => Criterion::AllZero,
            },
            LayeredStatistic::MonotonePaths => {
                Criterion::MeanNear(f(expected_monotone_paths(1, k, m, &c)))
            }
            LayeredStatistic::BadPairs => match k {
                2 => Criterion::AllZero,
                3 => Criterion::MeanNear(f(bad_pairs_k3_exact(m, &c))),
                _ => {
                    let n = (k * m) as u64;
                    let pairs = BigRational::from_integer((n * (n - 1) / 2).into());
                    Criterion::MeanAtMost(f(pairs * bad_pair_bound(k, m)))
                }
            },
        }
    }
}

impl fmt::Display for LayeredStatistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LayeredStatistic {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edges" => Ok(LayeredStatistic::Edges),
            "triangles" | "cycles" => Ok(LayeredStatistic::Triangles),
            "paths" => Ok(LayeredStatistic::MonotonePaths),
            "badpairs" => Ok(LayeredStatistic::BadPairs),
            other => Err(format!("unknown statistic {other:?}")),
        }
    }
}

/// Number of triangles, each counted once.
pub fn count_triangles(g: &Graph) -> u64 {
    let mut total = 0u64;
    for u in g.vertices() {
        for &v in g.up_neighbors(u) {
            // Common up-neighbors of u and v lie above v.
            let (a, b) = (g.up_neighbors(u), g.up_neighbors(v));
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        total += 1;
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
    }
    total
}

/// Seeded estimate of `stat` over independent draws of the layered graph.
/// Each trial samples its graph from a seed drawn off its own generator.
pub fn layered_estimate(
    stat: LayeredStatistic,
    layout: &Layout,
    trials: u64,
    master_seed: u64,
    exec: Exec,
) -> McReport {
    run_trials(stat.name(), trials, master_seed, stat.criterion(layout), exec, |rng| {
        let lg = sample_layout(layout, rng.gen(), Exec::Sequential);
        stat.measure(&lg.graph, layout)
    })
}
