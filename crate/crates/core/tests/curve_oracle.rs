use girthforge::curve::{
    curves_intersect, disjointness_graph, pairwise_intersections, realize_height2, segments_intersect,
    verify_realization, Curve, CurveFamily, Point,
};
use girthforge::poset::{check_height2, covers_from_order, random_height2};
use girthforge::Exec;
use num_rational::Ratio;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Q = Ratio<i64>;

fn q(v: i64) -> Q {
    Q::from_integer(v)
}

fn cross(ax: i64, ay: i64, bx: i64, by: i64) -> i64 {
    ax * by - ay * bx
}

/// Parametric segment intersection solved in exact rationals.
fn rational_segments_meet(a: Point, b: Point, c: Point, d: Point) -> bool {
    let (d1x, d1y) = (b.x - a.x, b.y - a.y);
    let (d2x, d2y) = (d.x - c.x, d.y - c.y);
    let (wx, wy) = (c.x - a.x, c.y - a.y);
    let denom = cross(d1x, d1y, d2x, d2y);
    let unit = |t: Q| t >= q(0) && t <= q(1);
    if denom != 0 {
        let t = Q::new(cross(wx, wy, d2x, d2y), denom);
        let s = Q::new(cross(wx, wy, d1x, d1y), denom);
        return unit(t) && unit(s);
    }
    if cross(wx, wy, d1x, d1y) != 0 {
        return false;
    }
    let len2 = d1x * d1x + d1y * d1y;
    let t0 = Q::new(wx * d1x + wy * d1y, len2);
    let t1 = Q::new((d.x - a.x) * d1x + (d.y - a.y) * d1y, len2);
    let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
    lo <= q(1) && hi >= q(0)
}

fn rational_curves_meet(a: &Curve, b: &Curve) -> bool {
    a.segments().any(|(p, p2)| b.segments().any(|(r, r2)| rational_segments_meet(p, p2, r, r2)))
}

fn point() -> impl Strategy<Value = Point> {
    (-5i64..=5, -5i64..=5).prop_map(|(x, y)| Point { x, y })
}

/// Up to six grounded curves on a small grid, where touching and collinear
/// contact are common.
fn family_strategy() -> impl Strategy<Value = CurveFamily> {
    (1usize..=6)
        .prop_flat_map(|count| {
            (
                Just(count),
                proptest::sample::subsequence((-6i64..=6).collect::<Vec<_>>(), count),
                proptest::collection::vec(proptest::collection::vec((1i64..=6, -6i64..=6), 1..=7), count),
            )
        })
        .prop_filter_map("valid family", |(count, grounds, tails)| {
            let curves = (0..count)
                .map(|i| {
                    let mut pts = vec![Point { x: 0, y: grounds[i] }];
                    for &(x, y) in &tails[i] {
                        let p = Point { x, y };
                        if *pts.last().unwrap() != p {
                            pts.push(p);
                        }
                    }
                    Curve::new(i + 1, pts)
                })
                .collect();
            CurveFamily::new(curves).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn segment_predicate_matches_rationals(a in point(), b in point(), c in point(), d in point()) {
        prop_assume!(a != b && c != d);
        prop_assert_eq!(segments_intersect(a, b, c, d), rational_segments_meet(a, b, c, d));
        prop_assert_eq!(segments_intersect(a, b, c, d), segments_intersect(c, d, b, a));
    }

    #[test]
    fn family_intersections_match_rationals(f in family_strategy()) {
        let mut expected = Vec::new();
        for i in 0..f.len() {
            for j in i + 1..f.len() {
                let (a, b) = (&f.curves()[i], &f.curves()[j]);
                let meet = rational_curves_meet(a, b);
                prop_assert_eq!(curves_intersect(a, b), meet);
                if meet {
                    expected.push((a.id, b.id));
                }
            }
        }
        prop_assert_eq!(pairwise_intersections(&f, Exec::Sequential), expected.clone());
        prop_assert_eq!(pairwise_intersections(&f, Exec::Parallel), expected.clone());
        let dg = disjointness_graph(&f, Exec::Sequential);
        prop_assert_eq!(dg.edge_count() + expected.len(), f.len() * (f.len() - 1) / 2);
    }
}

#[test]
fn huge_coordinates_do_not_overflow() {
    let big = 1i64 << 60;
    let a = Point { x: 0, y: -big };
    let b = Point { x: big, y: big };
    let c = Point { x: 0, y: big };
    let d = Point { x: big, y: -big };
    assert!(segments_intersect(a, b, c, d));
    let e = Point { x: big, y: big - 1 };
    assert!(!segments_intersect(c, e, a, d));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_height2_posets_realize(a in 0usize..=12, b in 0usize..=12, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_height2(a, b, 0.5, &mut rng);
        let f = realize_height2(&p).unwrap();
        prop_assert_eq!(f.len(), p.n());
        for c in f.curves() {
            prop_assert_eq!(c.ground().x, 0);
            prop_assert!(c.points[1..].iter().all(|pt| pt.x > 0));
        }
        let cd = covers_from_order(&p);
        prop_assert!(verify_realization(&f, &cd, Exec::Sequential).is_ok());
        let dg = disjointness_graph(&f, Exec::Parallel);
        prop_assert_eq!(girthforge::prob::count_triangles(&dg), 0);
        prop_assert!(check_height2(&p).is_ok());
    }
}
