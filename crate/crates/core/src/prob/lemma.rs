use num_rational::Ratio;
use rand::Rng;
use thiserror::Error;

use super::{run_trials, Criterion, McReport};
use crate::exec::Exec;
use crate::graph::find_empty_block;

/// Largest side decided exhaustively.
pub const MAX_LEMMA_SIDE: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LemmaError {
    #[error("side size {0} exceeds {MAX_LEMMA_SIDE}")]
    TooLarge(usize),
    #[error("density d={d} must satisfy 0 < d <= m={m}")]
    BadDensity { m: usize, d: usize },
}

/// Random bipartite graph on two sides of `m` vertices, each pair an edge
/// with probability `d / m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LemmaParams {
    pub m: usize,
    pub d: usize,
}

impl LemmaParams {
    pub fn new(m: usize, d: usize) -> Result<Self, LemmaError> {
        if m > MAX_LEMMA_SIDE {
            return Err(LemmaError::TooLarge(m));
        }
        if d == 0 || d > m {
            return Err(LemmaError::BadDensity { m, d });
        }
        Ok(LemmaParams { m, d })
    }

    pub fn p(&self) -> Ratio<u64> {
        Ratio::new(self.d as u64, self.m as u64)
    }

    /// `3 m^2 / d`.
    pub fn threshold(&self) -> Ratio<u64> {
        Ratio::new(3 * (self.m * self.m) as u64, self.d as u64)
    }

    /// `2^-m`.
    pub fn statement_bound(&self) -> f64 {
        0.5f64.powi(self.m as i32)
    }

    /// `2^(2m) e^(-pN)` with `pN = 3m`.
    pub fn proof_bound(&self) -> f64 {
        (2.0 * self.m as f64 * std::f64::consts::LN_2 - 3.0 * self.m as f64).exp()
    }
}

/// Samples one bipartite graph and decides whether an edgeless
/// `X x Y` with `|X||Y| >= 3m^2/d` exists.
pub fn lemma1_bad_event<R: Rng + ?Sized>(params: LemmaParams, rng: &mut R) -> bool {
    let LemmaParams { m, d } = params;
    let nbr: Vec<u32> = (0..m)
        .map(|_| {
            (0..m).fold(0u32, |acc, b| {
                if rng.gen_ratio(d as u32, m as u32) {
                    acc | 1 << b
                } else {
                    acc
                }
            })
        })
        .collect();
    let three_m2 = 3 * (m * m) as u64;
    find_empty_block(&nbr, m, |sx, sy| d as u64 * sx * sy >= three_m2).is_some()
}

/// Seeded estimate of the bad-event frequency, judged against `2^-m`.
pub fn lemma1_estimate(params: LemmaParams, trials: u64, master_seed: u64, exec: Exec) -> McReport {
    let mut report = run_trials(
        "lemma1",
        trials,
        master_seed,
        Criterion::FrequencyAtMost(params.statement_bound()),
        exec,
        |rng| lemma1_bad_event(params, rng) as u8 as f64,
    );
    report.aux_bound = Some(("proof_bound".to_string(), params.proof_bound()));
    report
}
