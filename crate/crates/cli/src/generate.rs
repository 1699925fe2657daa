use std::io::Write;
use std::path::PathBuf;

use clap::Args;

use girthforge::construction::{
    run_pipeline, verify_construction, PipelineError, PipelineOutput, RepairError,
    VerificationReport, VerifyOptions, DEFAULT_CYCLE_CAP,
};
use girthforge::format::{write_graph, write_layered, write_poset, Meta};
use girthforge::poset::covers_from_order;
use girthforge::{Exec, DEFAULT_MIS_BUDGET};

use crate::config::GenerateConfig;
use crate::{create_dir, write, CliError};

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub layers: usize,
    #[arg(long)]
    pub layer_size: usize,
    /// Required girth.
    #[arg(long)]
    pub r: usize,
    /// Edge scale `c` in `p_ij = min(1, c 2^(j-i) / m)`.
    #[arg(long, default_value_t = 1.0)]
    pub scale: f64,
    /// Keep only the first this many survivors.
    #[arg(long)]
    pub target_n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output directory.
    #[arg(long)]
    pub out: PathBuf,
    /// Node budget of the independence-number search.
    #[arg(long, env = "GIRTHFORGE_BUDGET", default_value_t = DEFAULT_MIS_BUDGET)]
    pub budget: u64,
    /// Short cycles enumerated before giving up on repair.
    #[arg(long, default_value_t = DEFAULT_CYCLE_CAP)]
    pub cycle_cap: usize,
}

impl GenerateArgs {
    pub fn config(&self) -> GenerateConfig {
        GenerateConfig {
            layers: self.layers,
            layer_size: self.layer_size,
            r: self.r,
            scale: self.scale,
            target_n: self.target_n,
            seed: self.seed,
            budget: self.budget,
            cycle_cap: self.cycle_cap,
        }
    }
}

/// Artifacts of one run, in the order they are written.
pub struct Generated {
    pub files: Vec<(&'static str, String)>,
    pub output: PipelineOutput,
    pub report: VerificationReport,
}

fn with_header(meta: &Meta, body: impl std::fmt::Display) -> String {
    let mut s: String = meta.0.iter().map(|(k, v)| format!("# {k}={v}\n")).collect();
    s.push_str(&body.to_string());
    s
}

/// Runs sample, repair, poset extraction and verification, rendering every
/// artifact in memory.
pub fn generate_artifacts(cfg: &GenerateConfig) -> Result<Generated, CliError> {
    let exec = Exec::default();
    let output = run_pipeline(&cfg.params(), cfg.cycle_cap, exec).map_err(|e| match e {
        PipelineError::Params(p) => CliError::Config(p.to_string()),
        PipelineError::Repair(RepairError::CycleCap(c)) => {
            CliError::Budget(format!("{c}; lower --scale or raise --cycle-cap, or resample with another --seed"))
        }
        PipelineError::Repair(r @ RepairError::InsufficientSurvivors { .. }) => {
            CliError::Verification(format!("{r} (try another --seed)"))
        }
        other => CliError::Verification(other.to_string()),
    })?;
    let report = verify_construction(
        &output.gprime,
        cfg.r,
        cfg.layer_size,
        &output.repair.event_a,
        &VerifyOptions {
            mis_budget: cfg.budget,
            exec,
        },
    );

    let meta = cfg.to_meta();
    let layout = cfg.params().layout().expect("pipeline validated the layout");
    let mut config_text = cfg.to_text();
    if let Some((i, j)) = layout.capped_pair() {
        config_text.push_str(&format!("# probabilities capped at 1 from layer pair {i},{j}\n"));
    }
    let covers = covers_from_order(&output.poset);
    let files = vec![
        ("config.txt", config_text),
        ("layered.graph", write_layered(&output.layered, &meta)),
        ("gprime.graph", write_graph(&output.gprime, &meta)),
        ("poset.poset", write_poset(&covers, Some(output.poset.extension()), &meta)),
        ("repair.txt", with_header(&meta, &output.repair)),
        ("verification.txt", with_header(&meta, &report)),
    ];
    Ok(Generated {
        files,
        output,
        report,
    })
}

pub(crate) fn cmd_generate(args: &GenerateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = args.config();
    let generated = generate_artifacts(&cfg)?;
    create_dir(&args.out)?;
    for (name, text) in &generated.files {
        write(&args.out.join(name), text)?;
    }
    let rep = &generated.report;
    let _ = writeln!(
        out,
        "n={} deleted={} girth_target={} alpha={} alpha_exact={} chi_lower={}",
        rep.n,
        generated.output.repair.deleted.len(),
        cfg.r,
        rep.alpha,
        rep.alpha_exact,
        rep.chi_lower
    );
    match rep.first_failure() {
        None => {
            let _ = writeln!(out, "verification=pass");
            Ok(())
        }
        Some(c) => Err(CliError::Verification(format!("clause {} ({})", c.name, c.witness))),
    }
}
