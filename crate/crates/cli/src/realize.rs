use std::io::Write;
use std::path::PathBuf;

use clap::Args;

use girthforge::curve::{disjointness_graph, realize_height2, render_svg, RealizeError};
use girthforge::format::{parse_poset, write_curves, write_poset, Meta};
use girthforge::poset::{covers_from_order, Poset};
use girthforge::Exec;

use crate::{create_dir, parse_err, read, write, CliError};

#[derive(Debug, Args)]
pub struct RealizeArgs {
    /// Poset file of height at most 2.
    pub input: PathBuf,
    /// Output directory.
    #[arg(long)]
    pub out: PathBuf,
}

/// The four artifacts of a realization: the normalized poset, the curve
/// file, the SVG drawing and a short report.
pub fn realize_artifacts(p: &Poset) -> Result<Vec<(&'static str, String)>, CliError> {
    let family = realize_height2(p).map_err(|e| match e {
        RealizeError::Poset(e) => CliError::Verification(format!("poset has height above 2: {e}")),
        RealizeError::Internal(msg) => CliError::Verification(msg),
    })?;
    let covers = covers_from_order(p);
    let meta = Meta::new().with("command", "realize").with("elements", p.n());
    let disjoint = disjointness_graph(&family, Exec::default());
    let report = format!(
        "# command=realize\ncurves={}\ncover_pairs={}\ndisjoint_pairs={}\nverified=true\n",
        family.len(),
        covers.edge_count(),
        disjoint.edge_count()
    );
    Ok(vec![
        ("poset.poset", write_poset(&covers, Some(p.extension()), &meta)),
        ("curves.txt", write_curves(&family, &meta)),
        ("curves.svg", render_svg(&family)),
        ("realization.txt", report),
    ])
}

pub(crate) fn cmd_realize(args: &RealizeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let pf = parse_poset(&read(&args.input)?).map_err(parse_err(&args.input))?;
    let poset = pf.poset().map_err(|e| CliError::Config(e.to_string()))?;
    let files = realize_artifacts(&poset)?;
    create_dir(&args.out)?;
    for (name, text) in &files {
        write(&args.out.join(name), text)?;
    }
    let _ = writeln!(out, "curves={} verified=true", poset.n());
    Ok(())
}
