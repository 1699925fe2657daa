#![allow(clippy::needless_range_loop)]

use girthforge::poset::{
    covers_from_order, greedy_color, is_uniquely_generated, linear_extension, log_color_bound,
    random_forest_dag, random_height2, unique_generation_violation, verify_color_bound,
    verify_tree_claim, check_height2, comparability_graph,
};
use girthforge::{CoverDag, Exec, Poset};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Random DAG on `1..=n` with edges oriented by label.
fn dag_strategy(max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), proptest::collection::vec(0u8..3, pairs)).prop_map(|(n, draws)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    if draws[k] == 0 {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            (n, edges)
        })
    })
}

/// Transitive closure by repeated relaxation over an adjacency matrix.
fn closure(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut less = vec![vec![false; n + 1]; n + 1];
    for &(u, v) in edges {
        less[u][v] = true;
    }
    for z in 1..=n {
        for x in 1..=n {
            for y in 1..=n {
                if less[x][z] && less[z][y] {
                    less[x][y] = true;
                }
            }
        }
    }
    less
}

/// Number of maximal cover chains from `x` to `y`.
fn chain_count(cd: &CoverDag, x: usize, y: usize) -> u64 {
    if x == y {
        return 1;
    }
    cd.covers_of(x).iter().map(|&z| chain_count(cd, z, y)).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn covers_are_the_transitive_reduction((n, edges) in dag_strategy(10)) {
        let p = Poset::from_cover_edges(n, &edges).unwrap();
        let less = closure(n, &edges);
        for x in 1..=n {
            for y in 1..=n {
                prop_assert_eq!(p.less(x, y), less[x][y]);
            }
        }
        let cd = covers_from_order(&p);
        for x in 1..=n {
            for y in 1..=n {
                let cover = less[x][y] && !(1..=n).any(|z| less[x][z] && less[z][y]);
                prop_assert_eq!(cd.covers_of(x).contains(&y), cover);
            }
        }
        let again = Poset::from_dag(&cd);
        prop_assert_eq!(again.relations().collect::<Vec<_>>(), p.relations().collect::<Vec<_>>());
        prop_assert_eq!(comparability_graph(&p).edge_count(), p.relations().count());
    }

    #[test]
    fn unique_generation_matches_chain_counts((n, edges) in dag_strategy(9)) {
        let cd = covers_from_order(&Poset::from_cover_edges(n, &edges).unwrap());
        let mut first = None;
        for x in 1..=n {
            for y in 1..=n {
                if x != y && chain_count(&cd, x, y) >= 2 && first.is_none() {
                    first = Some((x, y));
                }
            }
        }
        prop_assert_eq!(is_uniquely_generated(&cd), first.is_none());
        let seq = unique_generation_violation(&cd, Exec::Sequential);
        prop_assert_eq!(seq.is_some(), first.is_some());
        prop_assert_eq!(unique_generation_violation(&cd, Exec::Parallel), seq);
        if let Some((x, y)) = seq {
            prop_assert!(chain_count(&cd, x, y) >= 2);
        }
    }

    #[test]
    fn linear_extension_respects_order((n, edges) in dag_strategy(12)) {
        let cd = CoverDag::new(n, &edges).unwrap();
        let ext = linear_extension(&cd);
        let mut pos = vec![0; n + 1];
        for (i, &v) in ext.iter().enumerate() {
            pos[v] = i;
        }
        let mut sorted = ext.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (1..=n).collect::<Vec<_>>());
        for (x, y) in cd.edges() {
            prop_assert!(pos[x] < pos[y]);
        }
    }

    #[test]
    fn forests_color_within_log_bound(n in 1usize..400, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cd = random_forest_dag(n, &mut rng);
        prop_assert!(is_uniquely_generated(&cd));
        let c = greedy_color(&cd, &linear_extension(&cd)).unwrap();
        prop_assert!(c.is_proper_on(&cd));
        prop_assert!(c.max_color() <= log_color_bound(n));
        prop_assert!(verify_color_bound(&c, n));
        prop_assert!(verify_tree_claim(&cd, &c).is_ok());
    }

    #[test]
    fn height2_samples_split_cleanly(a in 0usize..8, b in 0usize..8, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_height2(a, b, 0.5, &mut rng);
        let h = check_height2(&p).unwrap();
        prop_assert_eq!(h.minimals.len() + h.maximals.len(), a + b);
        for (x, y) in p.relations() {
            prop_assert!(h.minimals.contains(&x) && h.maximals.contains(&y));
        }
    }
}

#[test]
fn log_bound_values() {
    assert_eq!(log_color_bound(1), 1);
    assert_eq!(log_color_bound(2), 2);
    assert_eq!(log_color_bound(3), 2);
    assert_eq!(log_color_bound(1024), 11);
    assert_eq!(log_color_bound(1023), 10);
}
