use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use thiserror::Error;

use super::{BBox, CurveFamily, Point};

#[derive(Debug, Error)]
#[error("writing {path}: {source}")]
pub struct SvgError {
    pub path: PathBuf,
    #[source]
    pub source: std::io::Error,
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
];

/// SVG 1.1 drawing of the family: y grows upward in curve space and is
/// flipped for the screen, the y-axis is drawn, and each curve is labeled
/// with its id at its ground point.
pub fn render_svg(f: &CurveFamily) -> String {
    let bbox = f
        .bbox()
        .unwrap_or(BBox {
            min: Point::new(0, -10),
            max: Point::new(10, 10),
        })
        .include(Point::new(0, 0));
    let width = (bbox.max.x - bbox.min.x).max(1);
    let height = (bbox.max.y - bbox.min.y).max(1);
    let span = width.max(height);
    let margin = (span / 20).max(1);
    let stroke = (span / 400).max(1);
    let font = (span / 40).max(2);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">",
        bbox.min.x - margin,
        -bbox.max.y - margin,
        width + 2 * margin,
        height + 2 * margin
    );
    let _ = writeln!(
        out,
        "<line class=\"axis\" x1=\"0\" y1=\"{}\" x2=\"0\" y2=\"{}\" stroke=\"#000000\" stroke-width=\"{}\"/>",
        -bbox.max.y - margin,
        -bbox.min.y + margin,
        stroke
    );
    for c in f.curves() {
        let color = PALETTE[(c.id - 1) % PALETTE.len()];
        let pts = c
            .points
            .iter()
            .map(|p| format!("{},{}", p.x, -p.y))
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(
            out,
            "<polyline id=\"curve-{}\" points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\"/>",
            c.id, pts, color, stroke
        );
        let g = c.ground();
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"{}\" text-anchor=\"end\">{}</text>",
            g.x - stroke,
            -g.y,
            font,
            c.id
        );
    }
    out.push_str("</svg>\n");
    out
}

pub fn export_svg(f: &CurveFamily, path: &Path) -> Result<(), SvgError> {
    std::fs::write(path, render_svg(f)).map_err(|source| SvgError {
        path: path.to_path_buf(),
        source,
    })
}
