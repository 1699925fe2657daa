//! Seeded Monte Carlo estimates and the exact expectations they are checked
//! against.
//!
//! Trial `t` of a run with master seed `s` uses its own ChaCha8 generator
//! seeded with [`derive_seed`]`(s, t)`, so results do not depend on how
//! trials are scheduled.

mod lemma;
mod oracles;
mod stats;

pub use lemma::{lemma1_bad_event, lemma1_estimate, LemmaError, LemmaParams, MAX_LEMMA_SIDE};
pub use oracles::{
    bad_pair_bound, bad_pairs_k3_exact, expected_edges, expected_monotone_paths,
    monotone_paths_closed_form, monotone_paths_termwise, short_cycle_expectation,
    two_path_term, ShortCycleExpectation,
};
pub use stats::{count_triangles, layered_estimate, LayeredStatistic};

use std::fmt;
use std::io;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exec::Exec;

/// Per-trial seed: a SplitMix64 finalizer applied to the master seed offset
/// by the trial index.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn trial_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sample {
    pub trial: u64,
    pub seed: u64,
    pub value: f64,
}

/// How the run is judged.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Criterion {
    /// Frequency of nonzero samples must not exceed the bound.
    FrequencyAtMost(f64),
    /// Mean must lie within three standard errors of the exact value.
    MeanNear(f64),
    /// Mean must not exceed the bound.
    MeanAtMost(f64),
    /// Every sample must equal zero.
    AllZero,
}

impl Criterion {
    fn reference(&self) -> f64 {
        match *self {
            Criterion::FrequencyAtMost(b) | Criterion::MeanNear(b) | Criterion::MeanAtMost(b) => b,
            Criterion::AllZero => 0.0,
        }
    }
}

/// Outcome of a seeded run.
#[derive(Clone, Debug, PartialEq)]
pub struct McReport {
    pub statistic: String,
    pub master_seed: u64,
    pub samples: Vec<Sample>,
    /// Trials with a nonzero value.
    pub hits: u64,
    pub mean: f64,
    /// Unbiased sample variance; 0 with fewer than two trials.
    pub variance: f64,
    pub stderr: f64,
    pub criterion: Criterion,
    /// Secondary analytic quantity, such as the proof-side bound.
    pub aux_bound: Option<(String, f64)>,
    pub verdict: Verdict,
}

impl McReport {
    pub fn trials(&self) -> u64 {
        self.samples.len() as u64
    }

    pub fn frequency(&self) -> f64 {
        if self.samples.is_empty() {
            0.0
        } else {
            self.hits as f64 / self.samples.len() as f64
        }
    }

    /// Samples whose value is nonzero, for reporting offending seeds.
    pub fn nonzero(&self) -> impl Iterator<Item = &Sample> {
        self.samples.iter().filter(|s| s.value != 0.0)
    }

    /// Writes `trial,seed,statistic,value` rows followed by `#` summary
    /// lines.
    pub fn write_csv<W: io::Write>(&self, out: W) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["trial", "seed", "statistic", "value"])?;
        for s in &self.samples {
            w.write_record([
                s.trial.to_string(),
                s.seed.to_string(),
                self.statistic.clone(),
                s.value.to_string(),
            ])?;
        }
        w.flush()?;
        let mut out = w.into_inner().map_err(|e| e.into_error())?;
        writeln!(out, "# statistic={} trials={} hits={} master_seed={}", self.statistic, self.trials(), self.hits, self.master_seed)?;
        if let Some((name, value)) = &self.aux_bound {
            writeln!(out, "# {name}={value:e}")?;
        }
        writeln!(
            out,
            "# mean={} stderr={} bound={} verdict={}",
            self.mean,
            self.stderr,
            self.criterion.reference(),
            self.verdict
        )
    }
}

/// Runs `trials` independent trials, each with its own derived generator.
pub fn run_trials<F>(
    statistic: &str,
    trials: u64,
    master_seed: u64,
    criterion: Criterion,
    exec: Exec,
    trial: F,
) -> McReport
where
    F: Fn(&mut ChaCha8Rng) -> f64 + Sync,
{
    let values = exec.map_range(trials as usize, |t| {
        let seed = derive_seed(master_seed, t as u64);
        (seed, trial(&mut trial_rng(seed)))
    });
    let samples: Vec<Sample> = values
        .into_iter()
        .enumerate()
        .map(|(t, (seed, value))| Sample {
            trial: t as u64,
            seed,
            value,
        })
        .collect();
    summarize(statistic, master_seed, samples, criterion)
}

pub fn summarize(statistic: &str, master_seed: u64, samples: Vec<Sample>, criterion: Criterion) -> McReport {
    let n = samples.len() as f64;
    let hits = samples.iter().filter(|s| s.value != 0.0).count() as u64;
    let mean = if samples.is_empty() {
        0.0
    } else {
        samples.iter().map(|s| s.value).sum::<f64>() / n
    };
    let variance = if samples.len() < 2 {
        0.0
    } else {
        samples.iter().map(|s| (s.value - mean).powi(2)).sum::<f64>() / (n - 1.0)
    };
    let stderr = if samples.is_empty() { 0.0 } else { (variance / n).sqrt() };
    let verdict = if samples.is_empty() {
        Verdict::Inconclusive
    } else {
        let ok = match criterion {
            Criterion::FrequencyAtMost(b) => hits as f64 / n <= b,
            Criterion::MeanNear(e) => within_three_se(mean, stderr, e),
            Criterion::MeanAtMost(b) => mean <= b,
            Criterion::AllZero => hits == 0,
        };
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    };
    McReport {
        statistic: statistic.to_string(),
        master_seed,
        samples,
        hits,
        mean,
        variance,
        stderr,
        criterion,
        aux_bound: None,
        verdict,
    }
}

/// `|mean - expected| <= 3 stderr`, with a relative slack of `1e-9` for
/// rounding when the standard error vanishes.
pub fn within_three_se(mean: f64, stderr: f64, expected: f64) -> bool {
    (mean - expected).abs() <= 3.0 * stderr + 1e-9 * expected.abs().max(1.0)
}
