use std::io::Write;
use std::path::PathBuf;

use clap::{Args, ValueEnum};

use girthforge::construction::ConstructionParams;
use girthforge::prob::{lemma1_estimate, layered_estimate, LayeredStatistic, LemmaParams, McReport, Verdict};
use girthforge::Exec;

use crate::{io_err, CliError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum McKind {
    /// Large empty blocks in a random bipartite graph.
    Lemma,
    /// Monotone paths between the first vertices of the outer layers.
    Paths,
    /// Triangles.
    Cycles,
    /// Bad pairs, decided by unit-capacity flow.
    Badpairs,
    /// Edges.
    Edges,
}

#[derive(Debug, Args)]
pub struct McArgs {
    pub kind: McKind,
    /// Side size for `lemma`.
    #[arg(long, default_value_t = 8)]
    pub m: usize,
    /// Density parameter for `lemma`; edges appear with probability d/m.
    #[arg(long, default_value_t = 4)]
    pub d: usize,
    #[arg(long, default_value_t = 4)]
    pub layers: usize,
    #[arg(long, default_value_t = 16)]
    pub layer_size: usize,
    #[arg(long, default_value_t = 1.0)]
    pub scale: f64,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// CSV destination; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn estimate(args: &McArgs) -> Result<McReport, CliError> {
    let exec = Exec::default();
    let report = match args.kind {
        McKind::Lemma => {
            let p = LemmaParams::new(args.m, args.d).map_err(|e| CliError::Config(e.to_string()))?;
            lemma1_estimate(p, args.trials, args.seed, exec)
        }
        kind => {
            let layout = ConstructionParams::desk(args.layers, args.layer_size, 4, args.seed)
                .with_scale(args.scale)
                .layout()
                .map_err(|e| CliError::Config(e.to_string()))?;
            let stat = match kind {
                McKind::Paths => LayeredStatistic::MonotonePaths,
                McKind::Cycles => LayeredStatistic::Triangles,
                McKind::Badpairs => LayeredStatistic::BadPairs,
                _ => LayeredStatistic::Edges,
            };
            layered_estimate(stat, &layout, args.trials, args.seed, exec)
        }
    };
    Ok(report)
}

fn config_lines(args: &McArgs) -> String {
    let kind = args.kind.to_possible_value().expect("no skipped variants");
    let params = match args.kind {
        McKind::Lemma => format!("m={} d={}", args.m, args.d),
        _ => format!("layers={} layer_size={} scale={}", args.layers, args.layer_size, args.scale),
    };
    format!("# command=mc kind={} {params} trials={} seed={}\n", kind.get_name(), args.trials, args.seed)
}

pub(crate) fn cmd_mc(args: &McArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let report = estimate(args)?;
    let mut csv = Vec::new();
    report.write_csv(&mut csv).expect("writing to memory");
    csv.extend_from_slice(config_lines(args).as_bytes());
    match &args.out {
        Some(path) => std::fs::write(path, &csv).map_err(io_err(path))?,
        None => out.write_all(&csv).map_err(io_err("<stdout>".as_ref()))?,
    }
    if args.out.is_some() {
        let _ = writeln!(
            out,
            "statistic={} trials={} hits={} mean={} stderr={} verdict={}",
            report.statistic,
            report.trials(),
            report.hits,
            report.mean,
            report.stderr,
            report.verdict
        );
    }
    match report.verdict {
        Verdict::Fail => {
            let culprit = report
                .nonzero()
                .next()
                .map(|s| format!(", first nonzero trial {} seed {}", s.trial, s.seed))
                .unwrap_or_default();
            Err(CliError::Verification(format!(
                "{} out of tolerance: mean {} stderr {}{culprit}",
                report.statistic, report.mean, report.stderr
            )))
        }
        Verdict::Pass | Verdict::Inconclusive => Ok(()),
    }
}
