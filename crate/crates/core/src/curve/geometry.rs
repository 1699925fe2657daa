//! Exact predicates on integer segments.

use std::cmp::Ordering;

/// Largest coordinate magnitude accepted. Differences then fit in 62 bits
/// and orientation products in `i128` without overflow.
pub const MAX_COORD: i64 = 1 << 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

/// Sign of the cross product `(b - a) x (c - a)`: `Greater` when `a, b, c`
/// turn counter-clockwise.
pub fn orientation(a: Point, b: Point, c: Point) -> Ordering {
    let abx = (b.x - a.x) as i128;
    let aby = (b.y - a.y) as i128;
    let acx = (c.x - a.x) as i128;
    let acy = (c.y - a.y) as i128;
    (abx * acy - aby * acx).cmp(&0)
}

/// Whether `p`, known to be collinear with `a b`, lies on the closed segment.
fn within_box(a: Point, b: Point, p: Point) -> bool {
    a.x.min(b.x) <= p.x && p.x <= a.x.max(b.x) && a.y.min(b.y) <= p.y && p.y <= a.y.max(b.y)
}

/// Whether closed segments `ab` and `cd` share at least one point.
pub fn segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool {
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    // A zero orientation on one side still separates correctly: if c lies on
    // line ab outside the segment, a and b are strictly on one side of cd.
    if o1 != o2 && o3 != o4 {
        return true;
    }
    (o1 == Ordering::Equal && within_box(a, b, c))
        || (o2 == Ordering::Equal && within_box(a, b, d))
        || (o3 == Ordering::Equal && within_box(c, d, a))
        || (o4 == Ordering::Equal && within_box(c, d, b))
}

/// Whether `ab` and `cd` are collinear and share a sub-segment of positive
/// length.
pub fn collinear_overlap(a: Point, b: Point, c: Point, d: Point) -> bool {
    if orientation(a, b, c) != Ordering::Equal || orientation(a, b, d) != Ordering::Equal {
        return false;
    }
    // Project on the dominant axis of ab.
    let key = |p: Point| if a.x != b.x { p.x } else { p.y };
    let (lo1, hi1) = (key(a).min(key(b)), key(a).max(key(b)));
    let (lo2, hi2) = (key(c).min(key(d)), key(c).max(key(d)));
    lo1.max(lo2) < hi1.min(hi2)
}

/// Axis-aligned bounding box `[min, max]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BBox {
    pub min: Point,
    pub max: Point,
}

impl BBox {
    pub fn of(points: &[Point]) -> Option<BBox> {
        let first = *points.first()?;
        Some(points.iter().fold(BBox { min: first, max: first }, |b, p| b.include(*p)))
    }

    pub fn include(self, p: Point) -> BBox {
        BBox {
            min: Point::new(self.min.x.min(p.x), self.min.y.min(p.y)),
            max: Point::new(self.max.x.max(p.x), self.max.y.max(p.y)),
        }
    }

    pub fn union(self, other: BBox) -> BBox {
        self.include(other.min).include(other.max)
    }

    pub fn overlaps(&self, other: &BBox) -> bool {
        self.min.x <= other.max.x
            && other.min.x <= self.max.x
            && self.min.y <= other.max.y
            && other.min.y <= self.max.y
    }
}
