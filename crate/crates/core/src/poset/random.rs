use rand::seq::SliceRandom;
use rand::Rng;

use super::{CoverDag, Poset};

/// Random poset whose cover graph is a forest: a random recursive forest
/// with every edge oriented by a coin flip and labels shuffled. Any such
/// poset is uniquely generated.
pub fn random_forest_dag<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CoverDag {
    let mut label: Vec<usize> = (1..=n).collect();
    label.shuffle(rng);
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for v in 1..n {
        // Roughly one new component in ten.
        if rng.gen_bool(0.9) {
            let u = rng.gen_range(0..v);
            let (a, b) = (label[u], label[v]);
            edges.push(if rng.gen_bool(0.5) { (a, b) } else { (b, a) });
        }
    }
    CoverDag::new(n, &edges).expect("a forest orientation is acyclic")
}

/// Random poset with `minimals` lower and `maximals` upper elements, each
/// cover pair present independently with probability `p`; labels shuffled.
pub fn random_height2<R: Rng + ?Sized>(minimals: usize, maximals: usize, p: f64, rng: &mut R) -> Poset {
    let n = minimals + maximals;
    let mut label: Vec<usize> = (1..=n).collect();
    label.shuffle(rng);
    let mut covers = Vec::new();
    for lo in 0..minimals {
        for hi in minimals..n {
            if rng.gen_bool(p) {
                covers.push((label[lo], label[hi]));
            }
        }
    }
    covers.sort_unstable();
    Poset::from_cover_edges(n, &covers).expect("bipartite covers are acyclic")
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::poset::{check_height2, covers_from_order, is_uniquely_generated};

    #[test]
    fn forests_are_uniquely_generated() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in [1, 2, 10, 100] {
            let cd = random_forest_dag(n, &mut rng);
            assert!(cd.edge_count() < n.max(1));
            assert!(is_uniquely_generated(&cd));
        }
    }

    #[test]
    fn height2_samples_have_height_two() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let p = random_height2(5, 4, 0.5, &mut rng);
            assert!(check_height2(&p).is_ok());
            assert_eq!(covers_from_order(&p).edge_count(), p.relations().count());
        }
    }
}
