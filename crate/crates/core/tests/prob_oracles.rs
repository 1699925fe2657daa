mod common;

use girthforge::construction::{event_a_check, sample_layout, EventA, LayeredGraph, Layout};
use girthforge::graph::list_bad_pairs;
use girthforge::prob::{
    bad_pairs_k3_exact, count_triangles, derive_seed, expected_edges, expected_monotone_paths,
    monotone_paths_closed_form, monotone_paths_termwise, short_cycle_expectation, two_path_term,
    bad_pair_bound,
};
use girthforge::{Exec, Graph};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact expectation of `stat` over every graph on `k` layers of size `m`,
/// weighting each edge subset by its probability.
fn enumerate<F: Fn(&Graph) -> u64>(k: usize, m: usize, c: &BigRational, stat: F) -> BigRational {
    let mut pairs = Vec::new();
    for i in 1..k {
        for j in i + 1..=k {
            let raw = c * BigRational::from_integer(BigInt::one() << (j - i)) / rat(m as i64, 1);
            let p = raw.min(BigRational::one());
            for x in (i - 1) * m + 1..=i * m {
                for y in (j - 1) * m + 1..=j * m {
                    pairs.push((x, y, p.clone()));
                }
            }
        }
    }
    assert!(pairs.len() <= 16);
    let mut total = BigRational::zero();
    for mask in 0u32..1 << pairs.len() {
        let mut g = Graph::new(k * m);
        let mut prob = BigRational::one();
        for (b, (x, y, p)) in pairs.iter().enumerate() {
            if mask & (1 << b) != 0 {
                g.add_edge(*x, *y).unwrap();
                prob *= p;
            } else {
                prob *= BigRational::one() - p;
            }
        }
        total += prob * rat(stat(&g) as i64, 1);
    }
    total
}

#[test]
fn k3_bad_pairs_match_enumeration() {
    let c = rat(1, 4);
    let exact = enumerate(3, 2, &c, |g| list_bad_pairs(g, Exec::Sequential).len() as u64);
    assert_eq!(bad_pairs_k3_exact(2, &c), exact);
}

#[test]
fn triangles_and_edges_match_enumeration() {
    let c = rat(1, 4);
    let tri = enumerate(3, 2, &c, count_triangles);
    assert_eq!(short_cycle_expectation(3, 2, 4, &c).triangles.unwrap(), tri);
    let edges = enumerate(3, 2, &c, |g| g.edge_count() as u64);
    assert_eq!(expected_edges(3, 2, &c), edges);
}

#[test]
fn monotone_paths_match_enumeration() {
    let c = rat(1, 4);
    // First vertex of layer 1 to first vertex of layer 3, m = 2.
    let exact = enumerate(3, 2, &c, |g| common::monotone_paths(g, 1, 5).len() as u64);
    assert_eq!(expected_monotone_paths(1, 3, 2, &c), exact);
}

#[test]
fn path_expectation_identities() {
    let one = BigRational::one();
    for gap in 1..=8 {
        for m in [16usize, 64, 256] {
            if (1usize << gap) > m {
                continue;
            }
            let direct = expected_monotone_paths(1, 1 + gap, m, &one);
            assert_eq!(direct, monotone_paths_termwise(gap, m, &one));
            assert_eq!(direct, monotone_paths_closed_form(gap, m));
        }
    }
    assert_eq!(expected_monotone_paths(1, 4, 16, &one), rat(2, 1));
}

#[test]
fn closed_form_constants() {
    assert_eq!(expected_edges(4, 16, &BigRational::one()), rat(352, 1));
    let cyc = short_cycle_expectation(4, 16, 4, &BigRational::one());
    assert_eq!(cyc.triangles.unwrap(), rat(160, 1));
    for l in 1..4 {
        for l2 in 1..4 {
            assert_eq!(two_path_term(5, 32, l, l2), rat(1 << 20, 32 * 32));
        }
    }
    assert_eq!(bad_pair_bound(2, 16), rat(4 * 256, 256));
    let k3 = bad_pairs_k3_exact(16, &BigRational::one());
    assert!(k3 > rat(18, 1) && k3 < rat(20, 1));
}

#[test]
fn seeds_are_distinct_and_stable() {
    let seeds: std::collections::HashSet<u64> = (0..10_000).map(|i| derive_seed(7, i)).collect();
    assert_eq!(seeds.len(), 10_000);
    assert_eq!(derive_seed(7, 3), derive_seed(7, 3));
    assert_ne!(derive_seed(7, 3), derive_seed(8, 3));
}

/// Exhaustive event-A decision over all subset pairs.
fn event_a_oracle(lg: &LayeredGraph) -> bool {
    let m = lg.layer_size;
    for i in 1..lg.layers {
        for j in i + 1..=lg.layers {
            let lo: Vec<usize> = lg.layer(i).collect();
            let hi: Vec<usize> = lg.layer(j).collect();
            for xm in 1u32..1 << m {
                for ym in 1u32..1 << m {
                    let empty = (0..m).all(|a| {
                        xm & (1 << a) == 0
                            || (0..m).all(|b| ym & (1 << b) == 0 || !lg.graph.has_edge(lo[a], hi[b]))
                    });
                    let area = (xm.count_ones() * ym.count_ones()) as u64;
                    // |X||Y| >= 3 m^2 2^(i-j)
                    if empty && area << (j - i) >= 3 * (m * m) as u64 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[test]
fn event_a_matches_subset_enumeration() {
    let mut fails = 0;
    for seed in 0..200 {
        for (k, m, scale) in [(3usize, 4usize, 1.0f64), (4, 5, 2.0), (3, 6, 0.3), (3, 4, 0.2)] {
            let lg = sample_layout(&Layout { k, m, scale }, seed, Exec::Sequential);
            let got = event_a_check(&lg);
            let truth = event_a_oracle(&lg);
            assert_eq!(got.holds(), truth, "seed {seed} k {k} m {m}");
            if let EventA::Fails { i, j, x, y } = got {
                fails += 1;
                assert!(x.iter().all(|&a| y.iter().all(|&b| !lg.graph.has_edge(a, b))));
                assert!(((x.len() * y.len()) << (j - i)) >= 3 * m * m);
            }
        }
    }
    assert!(fails > 0);
}
