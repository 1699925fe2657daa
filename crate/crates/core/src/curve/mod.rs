//! Grounded polyline families on integer coordinates, their intersection and
//! disjointness graphs, realization of height-2 posets, and SVG export.

mod geometry;
mod realize;
mod svg;

pub use geometry::{collinear_overlap, orientation, segments_intersect, BBox, Point, MAX_COORD};
pub use realize::{realize_height2, RealizeError};
pub use svg::{export_svg, render_svg, SvgError};

use thiserror::Error;

use crate::exec::Exec;
use crate::graph::Graph;
use crate::poset::CoverDag;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    pub id: usize,
    pub points: Vec<Point>,
}

impl Curve {
    pub fn new(id: usize, points: Vec<Point>) -> Self {
        Curve { id, points }
    }

    pub fn segments(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        self.points.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn ground(&self) -> Point {
        self.points[0]
    }

    pub fn bbox(&self) -> BBox {
        BBox::of(&self.points).expect("validated curves are nonempty")
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("curve ids must be exactly 1..={count}; found {id}")]
    BadId { id: usize, count: usize },
    #[error("curve {0} has fewer than two points")]
    TooShort(usize),
    #[error("curve {0} does not start on the y-axis")]
    NotGrounded(usize),
    #[error("curve {id} point {index} has x <= 0 after its ground point")]
    LeavesHalfPlane { id: usize, index: usize },
    #[error("curve {id} repeats point {index}")]
    ZeroLengthSegment { id: usize, index: usize },
    #[error("curves {0} and {1} share a ground height")]
    SharedGround(usize, usize),
    #[error("curve {id} coordinate outside +-2^60")]
    CoordinateRange { id: usize },
}

/// A validated family. Curves are stored by id, so `curves[i].id == i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveFamily {
    curves: Vec<Curve>,
}

impl CurveFamily {
    /// Checks the grounded-family invariants: ids form `1..=count`, each curve
    /// starts on the y-axis and stays strictly right of it afterwards, no
    /// segment has zero length, and ground heights are distinct.
    pub fn new(mut curves: Vec<Curve>) -> Result<Self, CurveError> {
        let count = curves.len();
        curves.sort_by_key(|c| c.id);
        for (i, c) in curves.iter().enumerate() {
            if c.id != i + 1 {
                let id = if c.id == 0 || c.id > count { c.id } else { i + 1 };
                return Err(CurveError::BadId { id, count });
            }
            if c.points.len() < 2 {
                return Err(CurveError::TooShort(c.id));
            }
            if c.points.iter().any(|p| p.x.abs() > MAX_COORD || p.y.abs() > MAX_COORD) {
                return Err(CurveError::CoordinateRange { id: c.id });
            }
            if c.points[0].x != 0 {
                return Err(CurveError::NotGrounded(c.id));
            }
            if let Some(index) = (1..c.points.len()).find(|&k| c.points[k].x <= 0) {
                return Err(CurveError::LeavesHalfPlane { id: c.id, index });
            }
            if let Some(index) = (1..c.points.len()).find(|&k| c.points[k] == c.points[k - 1]) {
                return Err(CurveError::ZeroLengthSegment { id: c.id, index });
            }
        }
        let mut grounds: Vec<(i64, usize)> = curves.iter().map(|c| (c.ground().y, c.id)).collect();
        grounds.sort_unstable();
        if let Some(w) = grounds.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(CurveError::SharedGround(w[0].1.min(w[1].1), w[0].1.max(w[1].1)));
        }
        Ok(CurveFamily { curves })
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn curve(&self, id: usize) -> &Curve {
        &self.curves[id - 1]
    }

    pub fn bbox(&self) -> Option<BBox> {
        self.curves.iter().map(Curve::bbox).reduce(BBox::union)
    }
}

/// Whether two curves share a point.
pub fn curves_intersect(a: &Curve, b: &Curve) -> bool {
    if !a.bbox().overlaps(&b.bbox()) {
        return false;
    }
    a.segments()
        .any(|(p, q)| b.segments().any(|(r, s)| segments_intersect(p, q, r, s)))
}

fn id_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect()
}

/// Unordered id pairs `(u, v)`, `u < v`, whose curves share a point, in
/// lexicographic order.
pub fn pairwise_intersections(f: &CurveFamily, exec: Exec) -> Vec<(usize, usize)> {
    let pairs = id_pairs(f.len());
    let hit = exec.map_slice(&pairs, |&(u, v)| curves_intersect(f.curve(u), f.curve(v)));
    pairs.into_iter().zip(hit).filter(|(_, h)| *h).map(|(p, _)| p).collect()
}

/// Graph on curve ids joining exactly the disjoint pairs.
pub fn disjointness_graph(f: &CurveFamily, exec: Exec) -> Graph {
    let pairs = id_pairs(f.len());
    let hit = exec.map_slice(&pairs, |&(u, v)| curves_intersect(f.curve(u), f.curve(v)));
    let mut g = Graph::new(f.len());
    for ((u, v), h) in pairs.into_iter().zip(hit) {
        if !h {
            g.add_edge(u, v).expect("distinct ids in range");
        }
    }
    g
}

/// First pair of distinct curves with a collinear overlap of positive length.
pub fn find_collinear_overlap(f: &CurveFamily) -> Option<(usize, usize)> {
    id_pairs(f.len()).into_iter().find(|&(u, v)| {
        f.curve(u)
            .segments()
            .any(|(p, q)| f.curve(v).segments().any(|(r, s)| collinear_overlap(p, q, r, s)))
    })
}

/// Mismatch between a family's disjointness graph and a cover graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RealizationDiff {
    /// `(curves, elements)` when the counts differ.
    pub size_mismatch: Option<(usize, usize)>,
    /// Cover pairs whose curves intersect.
    pub covers_not_disjoint: Vec<(usize, usize)>,
    /// Disjoint pairs that are not cover pairs.
    pub disjoint_not_covers: Vec<(usize, usize)>,
}

impl RealizationDiff {
    pub fn is_empty(&self) -> bool {
        self.size_mismatch.is_none()
            && self.covers_not_disjoint.is_empty()
            && self.disjoint_not_covers.is_empty()
    }

    /// Every mismatched pair, sorted.
    pub fn symmetric_difference(&self) -> Vec<(usize, usize)> {
        let mut all: Vec<_> = self
            .covers_not_disjoint
            .iter()
            .chain(&self.disjoint_not_covers)
            .copied()
            .collect();
        all.sort_unstable();
        all
    }
}

/// Checks that the disjointness graph of `f` equals the undirected cover
/// graph of `cd`, label for label.
pub fn verify_realization(f: &CurveFamily, cd: &CoverDag, exec: Exec) -> Result<(), RealizationDiff> {
    if f.len() != cd.n() {
        return Err(RealizationDiff {
            size_mismatch: Some((f.len(), cd.n())),
            ..Default::default()
        });
    }
    let disjoint = disjointness_graph(f, exec);
    let covers = cd.cover_graph();
    let diff = RealizationDiff {
        size_mismatch: None,
        covers_not_disjoint: covers.edges().filter(|&(u, v)| !disjoint.has_edge(u, v)).collect(),
        disjoint_not_covers: disjoint.edges().filter(|&(u, v)| !covers.has_edge(u, v)).collect(),
    };
    if diff.is_empty() {
        Ok(())
    } else {
        Err(diff)
    }
}
