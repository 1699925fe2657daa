//! The layered random graph, its repair into a high-girth graph without bad
//! pairs, and independent verification of the result.

mod constants;
mod event_a;
mod layered;
mod params;
mod repair;
mod verify;

pub use constants::{log2_3_bounds, paper_constant_chain, series_check, ConstantChain, SeriesCheck};
pub use event_a::{event_a_check, EventA, EVENT_A_MAX_LAYER};
pub use layered::{sample_layered_graph, sample_layout, LayerViolation, LayeredGraph};
pub use params::{
    edge_scale_for_degree, exact_layout, ConstructionParams, Layout, Mode, ParamError, MAX_SAMPLE_VERTICES,
};
pub use repair::{repair, RepairError, RepairOptions, RepairReport, DEFAULT_CYCLE_CAP};
pub use verify::{
    build_poset, verify_construction, BadPairsPresent, Clause, VerificationReport, VerifyOptions,
};

use thiserror::Error;

use crate::exec::Exec;
use crate::graph::Graph;
use crate::poset::Poset;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Repair(#[from] RepairError),
    #[error(transparent)]
    Poset(#[from] BadPairsPresent),
}

/// Everything one run of the pipeline produces.
#[derive(Clone, Debug)]
pub struct PipelineOutput {
    pub layered: LayeredGraph,
    pub gprime: Graph,
    pub repair: RepairReport,
    pub poset: Poset,
}

pub fn run_pipeline(
    params: &ConstructionParams,
    cycle_cap: usize,
    exec: Exec,
) -> Result<PipelineOutput, PipelineError> {
    let layered = sample_layered_graph(params, exec)?;
    let (gprime, report) = repair(
        &layered,
        params.r,
        params.target_n,
        RepairOptions { cycle_cap, exec },
    )?;
    let poset = build_poset(&gprime, exec)?;
    Ok(PipelineOutput {
        layered,
        gprime,
        repair: report,
        poset,
    })
}

/// Layer size of the layout behind `params`, or 0 if it is invalid.
pub fn layer_size(params: &ConstructionParams) -> usize {
    params.layout().map(|l| l.m).unwrap_or(0)
}
