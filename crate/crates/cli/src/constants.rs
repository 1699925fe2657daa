use std::io::Write;

use clap::Args;

use girthforge::construction::{paper_constant_chain, series_check};

use crate::CliError;

#[derive(Debug, Args)]
pub struct ConstantsArgs {
    /// Single girth value; every r in 4..=64 when omitted.
    #[arg(long)]
    pub r: Option<usize>,
}

pub(crate) fn cmd_constants(args: &ConstantsArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let rs: Vec<usize> = match args.r {
        Some(r) if (4..=64).contains(&r) => vec![r],
        Some(r) => return Err(CliError::Config(format!("r={r} outside 4..=64"))),
        None => (4..=64).collect(),
    };
    let mut failures = Vec::new();
    for r in rs {
        let c = paper_constant_chain(r);
        let _ = writeln!(
            out,
            "r={} log2_n={} k_lower={} k_upper={} n_over_7m_lower={} rhs={} holds={}",
            c.r, c.log2_n, c.k_lower, c.k_upper, c.lhs_lower, c.rhs, c.holds
        );
        if !c.holds {
            failures.push(format!("r={r}"));
        }
    }
    if args.r.is_none() {
        for k in 1..=64 {
            let s = series_check(k);
            if !s.holds {
                failures.push(format!("series k={k}"));
            }
        }
        let _ = writeln!(out, "series k=1..=64 holds={}", failures.iter().all(|f| !f.starts_with("series")));
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(failures.join(", ")))
    }
}
