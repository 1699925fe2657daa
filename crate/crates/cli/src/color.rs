use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::Args;

use girthforge::format::parse_poset;
use girthforge::poset::{
    greedy_color, log_color_bound, unique_generation_violation, verify_color_bound,
    verify_tree_claim, TreeClaimFailure,
};
use girthforge::Exec;

use crate::{parse_err, read, write, CliError};

#[derive(Debug, Args)]
pub struct ColorArgs {
    /// Poset file.
    pub input: PathBuf,
    /// Where to write the coloring; printed only when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub(crate) fn cmd_color(args: &ColorArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let pf = parse_poset(&read(&args.input)?).map_err(parse_err(&args.input))?;
    if let Some((x, y)) = unique_generation_violation(&pf.covers, Exec::default()) {
        return Err(CliError::Verification(format!(
            "not uniquely generated: two cover chains join {x} and {y}"
        )));
    }
    let poset = pf.poset().map_err(|e| CliError::Config(e.to_string()))?;
    let coloring = greedy_color(&pf.covers, poset.extension())
        .map_err(|e| CliError::Verification(e.to_string()))?;
    let n = pf.covers.n();
    let proper = coloring.is_proper_on(&pf.covers);
    let within = verify_color_bound(&coloring, n);
    let tree = match verify_tree_claim(&pf.covers, &coloring) {
        Ok(()) => "pass".to_string(),
        Err(TreeClaimFailure::NotATree(e)) => format!("fail:{e}"),
        Err(TreeClaimFailure::TooSmall { v, color, size }) => {
            format!("fail:vertex={v},color={color},size={size}")
        }
    };

    let mut text = String::new();
    let _ = writeln!(text, "# command=color");
    let _ = writeln!(text, "coloring {n}");
    for v in 1..=n {
        let _ = writeln!(text, "c {v} {}", coloring.get(v));
    }
    let summary = format!(
        "colors={} bound={} proper={} within_bound={} tree_claim={}",
        coloring.max_color(),
        log_color_bound(n),
        proper,
        within,
        tree
    );
    let _ = writeln!(text, "# {summary}");
    match &args.out {
        Some(path) => write(path, &text)?,
        None => {
            let _ = out.write_all(text.as_bytes());
        }
    }
    let _ = writeln!(out, "{summary}");
    if proper && within && tree == "pass" {
        Ok(())
    } else {
        Err(CliError::Verification(summary))
    }
}
