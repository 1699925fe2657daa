use thiserror::Error;

use super::{find_collinear_overlap, verify_realization, Curve, CurveFamily, Point, RealizationDiff};
use crate::exec::Exec;
use crate::poset::{check_height2, covers_from_order, Poset, PosetError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealizeError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("realization defect: {0}")]
    Internal(String),
}

impl From<RealizationDiff> for RealizeError {
    fn from(d: RealizationDiff) -> Self {
        RealizeError::Internal(format!("disjointness graph differs on {:?}", d.symmetric_difference()))
    }
}

/// Grounded curves whose disjointness graph is the cover graph of a poset of
/// height at most 2.
///
/// With `s` minimals and `q` maximals (each taken in label order) and pitch
/// `U = 2(q + 2)`, minimal `i` is the hook
/// `(0, 10iU) (h_i, 10iU) (h_i, -10iU) (BU, -10iU)` with `h_i = (10s + i)U`
/// and `B = 20s + 10`. Nested hooks pairwise cross.
///
/// Maximal `t` runs a top rail at height `(10s + 10(q - t + 1))U` out to its
/// lane `x = (B + 10t)U`, descends to depth `-(10s + 10t)U`, returns left to
/// the corridor `x = 2(q - t + 1)`, then climbs. For every minimal `i` it
/// does not cover, in decreasing `i`, it pokes right at height
/// `-10iU + 2t` to `h_i + 1`, steps up one unit and comes back. Each lane
/// crosses the top rails of all later maximals; a poke crosses only the
/// vertical of its own hook.
///
/// The result is checked with [`verify_realization`] before it is returned.
pub fn realize_height2(p: &Poset) -> Result<CurveFamily, RealizeError> {
    let h2 = check_height2(p)?;
    let covers = covers_from_order(p);
    let s = h2.minimals.len() as i64;
    let q = h2.maximals.len() as i64;
    let u = 2 * (q + 2);
    let b = 20 * s + 10;
    let pt = Point::new;
    let hook_x = |i: i64| (10 * s + i) * u;

    let mut curves = Vec::with_capacity(p.n());
    for (idx, &v) in h2.minimals.iter().enumerate() {
        let i = idx as i64 + 1;
        curves.push(Curve::new(
            v,
            vec![
                pt(0, 10 * i * u),
                pt(hook_x(i), 10 * i * u),
                pt(hook_x(i), -10 * i * u),
                pt(b * u, -10 * i * u),
            ],
        ));
    }
    for (idx, &w) in h2.maximals.iter().enumerate() {
        let t = idx as i64 + 1;
        let top = (10 * s + 10 * (q - t + 1)) * u;
        let lane = (b + 10 * t) * u;
        let depth = -(10 * s + 10 * t) * u;
        let corridor = 2 * (q - t + 1);
        let mut pts = vec![pt(0, top), pt(lane, top), pt(lane, depth), pt(corridor, depth)];
        let covered = covers.covered_by(w);
        for (jdx, &v) in h2.minimals.iter().enumerate().rev() {
            if covered.contains(&v) {
                continue;
            }
            let i = jdx as i64 + 1;
            let y1 = -10 * i * u + 2 * t;
            let reach = hook_x(i) + 1;
            pts.extend([pt(corridor, y1), pt(reach, y1), pt(reach, y1 + 1), pt(corridor, y1 + 1)]);
        }
        curves.push(Curve::new(w, pts));
    }

    let family = CurveFamily::new(curves).map_err(|e| RealizeError::Internal(e.to_string()))?;
    if let Some((a, c)) = find_collinear_overlap(&family) {
        return Err(RealizeError::Internal(format!("curves {a} and {c} overlap")));
    }
    verify_realization(&family, &covers, Exec::Sequential)?;
    Ok(family)
}
