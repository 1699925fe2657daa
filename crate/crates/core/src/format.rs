//! Line-oriented text formats for every artifact the tools read and write.
//!
//! Lines starting with `#` are comments. A comment of the form `# key=value`
//! is metadata and is returned to the caller in order. Blank lines are
//! ignored; any other unexpected line is an error naming its line number.

use std::fmt::Write as _;

use thiserror::Error;

use crate::construction::LayeredGraph;
use crate::curve::{Curve, CurveFamily, Point};
use crate::graph::Graph;
use crate::poset::{CoverDag, Poset};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Ordered `key=value` metadata.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Meta(pub Vec<(String, String)>);

impl Meta {
    pub fn new() -> Self {
        Meta(Vec::new())
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.push(key, value);
        self
    }

    pub fn push(&mut self, key: &str, value: impl ToString) {
        self.0.push((key.to_string(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn extend(&mut self, other: &Meta) {
        self.0.extend(other.0.iter().cloned());
    }

    fn write(&self, out: &mut String) {
        for (k, v) in &self.0 {
            let _ = writeln!(out, "# {k}={v}");
        }
    }
}

struct Lines<'a> {
    inner: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
    meta: Meta,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate().peekable(),
            meta: Meta::new(),
            last: 0,
        }
    }

    /// Next content line as `(line number, tokens)`, collecting metadata.
    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, raw) in self.inner.by_ref() {
            self.last = i + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if let Some((k, v)) = comment.trim().split_once('=') {
                    if !k.is_empty() && !k.contains(char::is_whitespace) {
                        self.meta.push(k, v);
                    }
                }
                continue;
            }
            return Some((i + 1, line.split_whitespace().collect()));
        }
        None
    }

    fn expect(&mut self, what: &str) -> Result<(usize, Vec<&'a str>), ParseError> {
        match self.next() {
            Some(x) => Ok(x),
            None => err(self.last + 1, format!("unexpected end of file, expected {what}")),
        }
    }
}

fn num<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T, ParseError> {
    tok.parse()
        .or_else(|_| err(line, format!("invalid {what} {tok:?}")))
}

fn arity(line: usize, toks: &[&str], n: usize) -> Result<(), ParseError> {
    if toks.len() != n {
        return err(line, format!("`{}` takes {} arguments, found {}", toks[0], n - 1, toks.len() - 1));
    }
    Ok(())
}

fn header(lines: &mut Lines, keyword: &str) -> Result<usize, ParseError> {
    let (ln, toks) = lines.expect(&format!("`{keyword} <n>` header"))?;
    if toks[0] != keyword {
        return err(ln, format!("expected `{keyword}` header, found `{}`", toks[0]));
    }
    arity(ln, &toks, 2)?;
    num(ln, toks[1], "count")
}

fn check_count(meta: &Meta, key: &str, found: usize, last: usize) -> Result<(), ParseError> {
    if let Some(v) = meta.get(key) {
        if v.parse::<usize>().ok() != Some(found) {
            return err(last, format!("metadata {key}={v} but {found} found; file truncated or edited"));
        }
    }
    Ok(())
}

pub fn write_graph(g: &Graph, meta: &Meta) -> String {
    let mut out = String::new();
    meta.write(&mut out);
    let _ = writeln!(out, "# edges={}", g.edge_count());
    let _ = writeln!(out, "graph {}", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

fn graph_body(lines: &mut Lines, n: usize) -> Result<Graph, ParseError> {
    let mut g = Graph::new(n);
    while let Some((ln, toks)) = lines.next() {
        if toks[0] != "e" {
            return err(ln, format!("unknown directive `{}`", toks[0]));
        }
        arity(ln, &toks, 3)?;
        let u: usize = num(ln, toks[1], "vertex")?;
        let v: usize = num(ln, toks[2], "vertex")?;
        match g.add_edge(u, v) {
            Ok(true) => {}
            Ok(false) => return err(ln, format!("duplicate edge {u} {v}")),
            Err(e) => return err(ln, e.to_string()),
        }
    }
    check_count(&lines.meta, "edges", g.edge_count(), lines.last)?;
    Ok(g)
}

pub fn parse_graph(text: &str) -> Result<(Graph, Meta), ParseError> {
    let mut lines = Lines::new(text);
    let n = header(&mut lines, "graph")?;
    let g = graph_body(&mut lines, n)?;
    Ok((g, lines.meta))
}

pub fn write_layered(lg: &LayeredGraph, meta: &Meta) -> String {
    let mut out = String::new();
    meta.write(&mut out);
    let _ = writeln!(out, "# edges={}", lg.graph.edge_count());
    let _ = writeln!(out, "graph {}", lg.graph.n());
    let _ = writeln!(out, "layers {} {}", lg.layers, lg.layer_size);
    for (u, v) in lg.graph.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

pub fn parse_layered(text: &str) -> Result<(LayeredGraph, Meta), ParseError> {
    let mut lines = Lines::new(text);
    let n = header(&mut lines, "graph")?;
    let (ln, toks) = lines.expect("`layers <k> <m>`")?;
    if toks[0] != "layers" {
        return err(ln, format!("expected `layers`, found `{}`", toks[0]));
    }
    arity(ln, &toks, 3)?;
    let k: usize = num(ln, toks[1], "layer count")?;
    let m: usize = num(ln, toks[2], "layer size")?;
    let g = graph_body(&mut lines, n)?;
    let lg = LayeredGraph::new(g, k, m).or_else(|e| err(ln, e.to_string()))?;
    Ok((lg, lines.meta))
}

/// Writes the cover relation and, when it differs from the identity, the
/// linear extension.
pub fn write_poset(cd: &CoverDag, ext: Option<&[usize]>, meta: &Meta) -> String {
    let mut out = String::new();
    meta.write(&mut out);
    let _ = writeln!(out, "# covers={}", cd.edge_count());
    let _ = writeln!(out, "poset {}", cd.n());
    for (x, y) in cd.edges() {
        let _ = writeln!(out, "cover {x} {y}");
    }
    if let Some(ext) = ext {
        if !ext.iter().copied().eq(1..=cd.n()) {
            let perm: Vec<String> = ext.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "ext {}", perm.join(" "));
        }
    }
    out
}

/// A parsed poset file.
#[derive(Clone, Debug)]
pub struct PosetFile {
    pub covers: CoverDag,
    /// Extension given by an `ext` line, if any.
    pub ext: Option<Vec<usize>>,
    pub meta: Meta,
}

impl PosetFile {
    /// The order, carrying the `ext` line when present and the canonical
    /// extension of the covers otherwise.
    pub fn poset(&self) -> Result<Poset, crate::poset::PosetError> {
        let p = Poset::from_dag(&self.covers);
        match &self.ext {
            Some(ext) => p.with_extension(ext.clone()),
            None => Ok(p),
        }
    }
}

pub fn parse_poset(text: &str) -> Result<PosetFile, ParseError> {
    let mut lines = Lines::new(text);
    let n = header(&mut lines, "poset")?;
    let mut edges = Vec::new();
    let mut ext = None;
    let mut last_cover_line = 0;
    while let Some((ln, toks)) = lines.next() {
        match toks[0] {
            "cover" if ext.is_none() => {
                arity(ln, &toks, 3)?;
                edges.push((num(ln, toks[1], "element")?, num(ln, toks[2], "element")?));
                last_cover_line = ln;
            }
            "ext" if ext.is_none() => {
                if toks.len() != n + 1 {
                    return err(ln, format!("`ext` needs {n} elements, found {}", toks.len() - 1));
                }
                let perm = toks[1..]
                    .iter()
                    .map(|t| num(ln, t, "element"))
                    .collect::<Result<Vec<usize>, _>>()?;
                ext = Some((ln, perm));
            }
            other => return err(ln, format!("unexpected directive `{other}`")),
        }
    }
    check_count(&lines.meta, "covers", edges.len(), lines.last)?;
    let covers = CoverDag::new(n, &edges).or_else(|e| err(last_cover_line.max(1), e.to_string()))?;
    let ext = match ext {
        Some((ln, perm)) => {
            crate::poset::check_extension(n, &perm, covers.edges())
                .or_else(|e| err(ln, e.to_string()))?;
            Some(perm)
        }
        None => None,
    };
    Ok(PosetFile {
        covers,
        ext,
        meta: lines.meta,
    })
}

pub fn write_curves(f: &CurveFamily, meta: &Meta) -> String {
    let mut out = String::new();
    meta.write(&mut out);
    let _ = writeln!(out, "curves {}", f.len());
    for c in f.curves() {
        let _ = writeln!(out, "curve {} {}", c.id, c.points.len());
        for p in &c.points {
            let _ = writeln!(out, "{} {}", p.x, p.y);
        }
    }
    out
}

pub fn parse_curves(text: &str) -> Result<(CurveFamily, Meta), ParseError> {
    let mut lines = Lines::new(text);
    let count = header(&mut lines, "curves")?;
    let mut curves = Vec::with_capacity(count.min(1 << 16));
    let mut first_line = 1;
    for _ in 0..count {
        let (ln, toks) = lines.expect("`curve <id> <npoints>`")?;
        if toks[0] != "curve" {
            return err(ln, format!("expected `curve`, found `{}`", toks[0]));
        }
        arity(ln, &toks, 3)?;
        if curves.is_empty() {
            first_line = ln;
        }
        let id: usize = num(ln, toks[1], "curve id")?;
        let np: usize = num(ln, toks[2], "point count")?;
        let mut points = Vec::with_capacity(np.min(1 << 16));
        for _ in 0..np {
            let (pl, pt) = lines.expect("a point `<x> <y>`")?;
            if pt.len() != 2 {
                return err(pl, "a point line holds exactly two integers");
            }
            points.push(Point::new(num(pl, pt[0], "coordinate")?, num(pl, pt[1], "coordinate")?));
        }
        curves.push(Curve::new(id, points));
    }
    if let Some((ln, toks)) = lines.next() {
        return err(ln, format!("trailing content `{}` after {count} curves", toks.join(" ")));
    }
    let family = CurveFamily::new(curves).or_else(|e| err(first_line, e.to_string()))?;
    Ok((family, lines.meta))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip_and_meta() {
        let g = Graph::petersen();
        let meta = Meta::new().with("seed", 7).with("r", 5);
        let text = write_graph(&g, &meta);
        let (h, m) = parse_graph(&text).unwrap();
        assert_eq!(h, g);
        assert_eq!(m.get("seed"), Some("7"));
        assert_eq!(m.get("edges"), Some("15"));
    }

    #[test]
    fn graph_errors_carry_lines() {
        assert_eq!(parse_graph("graph 3\ne 1 2\nx 1 2\n").unwrap_err().line, 3);
        assert_eq!(parse_graph("graph 3\ne 1 1\n").unwrap_err().line, 2);
        assert_eq!(parse_graph("graph 3\ne 1 2\ne 2 1\n").unwrap_err().line, 3);
        assert_eq!(parse_graph("graph 3\ne 1\n").unwrap_err().line, 2);
        assert_eq!(parse_graph("graph 3\ne 1 9\n").unwrap_err().line, 2);
        assert_eq!(parse_graph("# only comments\n").unwrap_err().line, 2);
        // Dropping the last edge line is caught by the count metadata.
        let text = write_graph(&Graph::cycle(4), &Meta::new());
        let cut: String = text.lines().take(text.lines().count() - 1).map(|l| format!("{l}\n")).collect();
        let e = parse_graph(&cut).unwrap_err();
        assert!(e.message.contains("truncated"), "{e}");
    }

    #[test]
    fn layered_round_trip() {
        let g = Graph::from_edges(4, [(1, 3), (2, 4)]).unwrap();
        let lg = LayeredGraph::new(g, 2, 2).unwrap();
        let text = write_layered(&lg, &Meta::new());
        assert_eq!(parse_layered(&text).unwrap().0, lg);
        assert!(parse_layered("graph 4\nlayers 2 2\ne 1 2\n").is_err());
    }

    #[test]
    fn poset_round_trip_with_extension() {
        let cd = CoverDag::new(3, &[(2, 1)]).unwrap();
        let text = write_poset(&cd, Some(&[2, 1, 3]), &Meta::new());
        assert!(text.contains("ext 2 1 3\n"));
        let pf = parse_poset(&text).unwrap();
        assert_eq!(pf.covers.edges().collect::<Vec<_>>(), vec![(2, 1)]);
        assert_eq!(pf.poset().unwrap().extension(), &[2, 1, 3]);
        let bad = "poset 3\ncover 2 1\next 1 2 3\n";
        assert_eq!(parse_poset(bad).unwrap_err().line, 3);
        assert_eq!(parse_poset("poset 2\ncover 1 2\ncover 2 1\n").unwrap_err().line, 3);
        let identity = write_poset(&CoverDag::new(2, &[(1, 2)]).unwrap(), Some(&[1, 2]), &Meta::new());
        assert!(!identity.contains("ext"));
    }

    #[test]
    fn curves_round_trip_and_truncation() {
        let f = CurveFamily::new(vec![
            Curve::new(1, vec![Point::new(0, 0), Point::new(5, -3)]),
            Curve::new(2, vec![Point::new(0, 4), Point::new(2, 4), Point::new(2, 9)]),
        ])
        .unwrap();
        let text = write_curves(&f, &Meta::new().with("seed", 1));
        assert_eq!(parse_curves(&text).unwrap().0, f);
        let cut: String = text.lines().take(text.lines().count() - 1).map(|l| format!("{l}\n")).collect();
        let e = parse_curves(&cut).unwrap_err();
        assert!(e.message.contains("end of file"));
        assert_eq!(e.line, cut.lines().count() + 1);
        let moved = text.replace("0 4\n", "1 4\n");
        assert!(parse_curves(&moved).is_err());
    }
}
