use std::fmt;

use super::layered::LayeredGraph;
use crate::graph::find_empty_block;

/// Largest layer size for which the event is decided exhaustively.
pub const EVENT_A_MAX_LAYER: usize = 16;

/// Outcome of the large-empty-block check over all layer pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EventA {
    /// No layer pair `i < j` has an edgeless `X x Y` with
    /// `|X||Y| >= 3 m^2 2^(i-j)`.
    Holds,
    /// Such a block exists; `x` and `y` are its labels.
    Fails {
        i: usize,
        j: usize,
        x: Vec<usize>,
        y: Vec<usize>,
    },
    /// Layers too large to decide exactly.
    Unchecked,
}

impl EventA {
    pub fn holds(&self) -> bool {
        matches!(self, EventA::Holds)
    }
}

impl fmt::Display for EventA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EventA::Holds => f.write_str("holds"),
            EventA::Fails { .. } => f.write_str("fails"),
            EventA::Unchecked => f.write_str("unchecked"),
        }
    }
}

/// Decides the event exactly for `m <= 16`. For each layer pair and each
/// `X` in the lower layer, the best `Y` is the common non-neighborhood of `X`
/// in the upper layer.
pub fn event_a_check(lg: &LayeredGraph) -> EventA {
    let m = lg.layer_size;
    if m > EVENT_A_MAX_LAYER {
        return EventA::Unchecked;
    }
    let three_m2 = 3 * (m as u64) * (m as u64);
    for i in 1..lg.layers {
        for j in i + 1..=lg.layers {
            let upper_start = *lg.layer(j).start();
            let nbr: Vec<u32> = lg
                .layer(i)
                .map(|x| {
                    lg.graph
                        .up_neighbors(x)
                        .iter()
                        .filter(|&&y| lg.layer_of(y) == j)
                        .fold(0u32, |acc, &y| acc | 1 << (y - upper_start))
                })
                .collect();
            let gap = (j - i) as u32;
            // |X||Y| >= 3m^2 / 2^(j-i)  <=>  |X||Y| 2^(j-i) >= 3m^2
            let block = find_empty_block(&nbr, m, |sx, sy| (sx * sy) << gap >= three_m2);
            if let Some(block) = block {
                let lower_start = *lg.layer(i).start();
                let pick = |mask: u32, start: usize| {
                    (0..m)
                        .filter(|b| mask & (1 << b) != 0)
                        .map(|b| start + b)
                        .collect()
                };
                return EventA::Fails {
                    i,
                    j,
                    x: pick(block.left, lower_start),
                    y: pick(block.right, upper_start),
                };
            }
        }
    }
    EventA::Holds
}
