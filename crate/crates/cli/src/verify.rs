use std::io::Write;
use std::path::{Path, PathBuf};

use clap::Args;

use girthforge::construction::{event_a_check, verify_construction, EventA, VerifyOptions};
use girthforge::curve::verify_realization;
use girthforge::format::{parse_curves, parse_graph, parse_layered, parse_poset, Meta, PosetFile};
use girthforge::graph::Graph;
use girthforge::poset::{covers_from_order, unique_generation_violation, CoverDag, Poset};
use girthforge::{Exec, DEFAULT_MIS_BUDGET};

use crate::config::GenerateConfig;
use crate::generate::generate_artifacts;
use crate::realize::realize_artifacts;
use crate::{parse_err, read, CliError};

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Artifact file, or a directory written by `generate` or `realize`.
    pub path: PathBuf,
    /// Girth to certify for a graph file that carries no run metadata.
    #[arg(long)]
    pub r: Option<usize>,
    /// Node budget of the independence-number search for bare graph files.
    #[arg(long, env = "GIRTHFORGE_BUDGET", default_value_t = DEFAULT_MIS_BUDGET)]
    pub budget: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

pub(crate) fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let checks = verify_path(&args.path, args.r, args.budget)?;
    for c in &checks {
        let verdict = if c.pass { "pass" } else { "fail" };
        let _ = writeln!(out, "check {} {} {}", c.name, verdict, c.detail);
    }
    match checks.iter().find(|c| !c.pass) {
        None => {
            let _ = writeln!(out, "verify=pass");
            Ok(())
        }
        Some(c) => {
            let _ = writeln!(out, "verify=fail");
            Err(CliError::Verification(format!("{} ({})", c.name, c.detail)))
        }
    }
}

/// Re-derives every applicable invariant of the artifact(s) at `path`.
/// Nothing stored in the files is trusted except the run parameters, which
/// are used to regenerate the run and compare it byte for byte.
pub fn verify_path(path: &Path, r: Option<usize>, budget: u64) -> Result<Vec<Check>, CliError> {
    if path.is_dir() {
        if path.join("config.txt").exists() {
            verify_generate_dir(path)
        } else if path.join("curves.txt").exists() {
            verify_realize_dir(path)
        } else {
            Err(CliError::Config(format!(
                "{} holds neither config.txt nor curves.txt",
                path.display()
            )))
        }
    } else {
        verify_file(path, r, budget)
    }
}

fn first_difference(a: &str, b: &str) -> String {
    let line = a
        .lines()
        .zip(b.lines())
        .position(|(x, y)| x != y)
        .unwrap_or_else(|| a.lines().count().min(b.lines().count()));
    format!("differs_from_regenerated_at_line={}", line + 1)
}

fn reproduce(name: &str, on_disk: &str, expected: &str) -> Check {
    if on_disk == expected {
        Check::new(format!("reproduce:{name}"), true, "identical")
    } else {
        Check::new(format!("reproduce:{name}"), false, first_difference(on_disk, expected))
    }
}

fn construction_checks(g: &Graph, r: usize, m: usize, event_a: &EventA, budget: u64) -> Vec<Check> {
    let report = verify_construction(
        g,
        r,
        m,
        event_a,
        &VerifyOptions {
            mis_budget: budget,
            exec: Exec::default(),
        },
    );
    report
        .clauses
        .iter()
        .map(|c| Check::new(format!("clause-{}", c.name), c.pass, c.witness.clone()))
        .collect()
}

fn poset_checks(pf: &PosetFile) -> Vec<Check> {
    let mut checks = Vec::new();
    let closure = Poset::from_dag(&pf.covers);
    let reduced = covers_from_order(&closure);
    let redundant = pf.covers.edges().find(|&(x, y)| !reduced.covers_of(x).contains(&y));
    checks.push(match redundant {
        Some((x, y)) => Check::new("covers-irredundant", false, format!("implied={x},{y}")),
        None => Check::new("covers-irredundant", true, format!("covers={}", pf.covers.edge_count())),
    });
    checks.push(match unique_generation_violation(&pf.covers, Exec::default()) {
        Some((x, y)) => Check::new("uniquely-generated", false, format!("two_chains={x},{y}")),
        None => Check::new("uniquely-generated", true, "max_paths=1"),
    });
    checks
}

fn covers_match_graph(covers: &CoverDag, g: &Graph) -> Check {
    let ok = covers.n() == g.n()
        && covers.edge_count() == g.edge_count()
        && covers.edges().all(|(x, y)| x < y && g.has_edge(x, y));
    Check::new(
        "poset-covers-equal-graph-edges",
        ok,
        format!("covers={} edges={}", covers.edge_count(), g.edge_count()),
    )
}

fn load_poset(path: &Path) -> Result<PosetFile, CliError> {
    parse_poset(&read(path)?).map_err(parse_err(path))
}

fn verify_generate_dir(dir: &Path) -> Result<Vec<Check>, CliError> {
    let config_path = dir.join("config.txt");
    let meta = GenerateConfig::parse_text(&read(&config_path)?).map_err(parse_err(&config_path))?;
    let cfg = GenerateConfig::from_meta(&meta)?;
    let mut checks = Vec::new();

    let layered_path = dir.join("layered.graph");
    let (layered, _) = parse_layered(&read(&layered_path)?).map_err(parse_err(&layered_path))?;
    checks.push(Check::new(
        "layered-shape",
        layered.layers == cfg.layers && layered.layer_size == cfg.layer_size,
        format!("layers={},m={}", layered.layers, layered.layer_size),
    ));
    let event_a = event_a_check(&layered);

    let gprime_path = dir.join("gprime.graph");
    let (gprime, _) = parse_graph(&read(&gprime_path)?).map_err(parse_err(&gprime_path))?;
    checks.extend(construction_checks(&gprime, cfg.r, cfg.layer_size, &event_a, cfg.budget));

    let pf = load_poset(&dir.join("poset.poset"))?;
    checks.push(covers_match_graph(&pf.covers, &gprime));
    checks.extend(poset_checks(&pf));

    let generated = generate_artifacts(&cfg)?;
    for (name, expected) in &generated.files {
        let path = dir.join(name);
        match std::fs::read_to_string(&path) {
            Ok(text) => checks.push(reproduce(name, &text, expected)),
            Err(_) => checks.push(Check::new(format!("reproduce:{name}"), false, "missing")),
        }
    }
    Ok(checks)
}

fn verify_realize_dir(dir: &Path) -> Result<Vec<Check>, CliError> {
    let pf = load_poset(&dir.join("poset.poset"))?;
    let curves_path = dir.join("curves.txt");
    let (family, _) = parse_curves(&read(&curves_path)?).map_err(parse_err(&curves_path))?;
    let mut checks = poset_checks(&pf);
    checks.push(realization_check(&family, &pf.covers));
    let poset = pf.poset().map_err(|e| CliError::Config(e.to_string()))?;
    for (name, expected) in realize_artifacts(&poset)? {
        let path = dir.join(name);
        match std::fs::read_to_string(&path) {
            Ok(text) => checks.push(reproduce(name, &text, &expected)),
            Err(_) => checks.push(Check::new(format!("reproduce:{name}"), false, "missing")),
        }
    }
    Ok(checks)
}

fn realization_check(family: &girthforge::curve::CurveFamily, covers: &CoverDag) -> Check {
    match verify_realization(family, covers, Exec::default()) {
        Ok(()) => Check::new("realization", true, format!("curves={}", family.len())),
        Err(diff) => {
            let pairs: Vec<String> = diff
                .symmetric_difference()
                .iter()
                .map(|(a, b)| format!("{a}-{b}"))
                .collect();
            let detail = match diff.size_mismatch {
                Some((c, e)) => format!("curves={c},elements={e}"),
                None => format!("mismatched={}", pairs.join(",")),
            };
            Check::new("realization", false, detail)
        }
    }
}

enum Kind {
    Layered,
    Graph,
    Poset,
    Curves,
    KeyValue,
}

fn detect(text: &str) -> Kind {
    let mut content = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    match content.next().and_then(|l| l.split_whitespace().next()) {
        Some("graph") => {
            if content.next().is_some_and(|l| l.starts_with("layers")) {
                Kind::Layered
            } else {
                Kind::Graph
            }
        }
        Some("poset") => Kind::Poset,
        Some("curves") => Kind::Curves,
        _ => Kind::KeyValue,
    }
}

/// Metadata from `# key=value` comments, or from bare `key=value` lines of a
/// configuration file.
fn file_meta(text: &str) -> Meta {
    let mut meta = Meta::new();
    for line in text.lines().map(str::trim) {
        let body = line.strip_prefix('#').map(str::trim).unwrap_or(line);
        if let Some((k, v)) = body.split_once('=') {
            if !k.is_empty() && !k.contains(char::is_whitespace) {
                meta.push(k, v);
            }
        }
    }
    meta
}

fn verify_file(path: &Path, r: Option<usize>, budget: u64) -> Result<Vec<Check>, CliError> {
    let text = read(path)?;
    let meta = file_meta(&text);
    let cfg = match meta.get("command") {
        Some("generate") => Some(GenerateConfig::from_meta(&meta)?),
        _ => None,
    };
    let generated = match &cfg {
        Some(cfg) => Some(generate_artifacts(cfg)?),
        None => None,
    };
    let mut checks = Vec::new();
    let artifact: Option<&str> = match detect(&text) {
        Kind::Layered => {
            let (lg, _) = parse_layered(&text).map_err(parse_err(path))?;
            let event_a = event_a_check(&lg);
            checks.push(Check::new("layered-shape", true, format!("layers={},m={},event_a={}", lg.layers, lg.layer_size, event_a)));
            Some("layered.graph")
        }
        Kind::Graph => {
            let (g, _) = parse_graph(&text).map_err(parse_err(path))?;
            let r = cfg.as_ref().map(|c| c.r).or(r).ok_or_else(|| {
                CliError::Config("graph carries no run metadata; pass --r".into())
            })?;
            let m = cfg.as_ref().map_or(0, |c| c.layer_size);
            let event_a = generated
                .as_ref()
                .map_or(EventA::Unchecked, |gen| event_a_check(&gen.output.layered));
            let budget = cfg.as_ref().map_or(budget, |c| c.budget);
            checks.extend(construction_checks(&g, r, m, &event_a, budget));
            Some("gprime.graph")
        }
        Kind::Poset => {
            let pf = parse_poset(&text).map_err(parse_err(path))?;
            checks.extend(poset_checks(&pf));
            if let Some(gen) = &generated {
                checks.push(covers_match_graph(&pf.covers, &gen.output.gprime));
            }
            Some("poset.poset")
        }
        Kind::Curves => {
            let (family, _) = parse_curves(&text).map_err(parse_err(path))?;
            checks.push(Check::new("grounded-family", true, format!("curves={}", family.len())));
            let sibling = path.with_file_name("poset.poset");
            if sibling.exists() && sibling != path {
                let pf = load_poset(&sibling)?;
                checks.push(realization_check(&family, &pf.covers));
                let poset = pf.poset().map_err(|e| CliError::Config(e.to_string()))?;
                let expected = realize_artifacts(&poset)?;
                let (_, curves) = expected.iter().find(|(n, _)| *n == "curves.txt").expect("listed");
                checks.push(reproduce("curves.txt", &text, curves));
            } else {
                checks.push(Check::new("realization", false, "no sibling poset.poset to compare against"));
            }
            None
        }
        Kind::KeyValue => path.file_name().and_then(|n| n.to_str()).and_then(|n| {
            ["config.txt", "repair.txt", "verification.txt"]
                .into_iter()
                .find(|&known| known == n)
        }),
    };
    match (&generated, artifact) {
        (Some(gen), Some(name)) => {
            let (_, expected) = gen.files.iter().find(|(n, _)| *n == name).expect("known artifact");
            checks.push(reproduce(name, &text, expected));
        }
        (None, Some(name)) if matches!(detect(&text), Kind::KeyValue) => {
            return Err(CliError::Config(format!("{name} carries no run metadata")));
        }
        _ => {}
    }
    if checks.is_empty() {
        return Err(CliError::Config(format!(
            "{} is not a recognized artifact",
            path.display()
        )));
    }
    Ok(checks)
}
