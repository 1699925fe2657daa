//! Exact expectations over the layered random graph, as rationals.
//!
//! Layer pair `(i, j)` carries edge probability `min(1, c 2^(j-i) / m)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn int(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn pow2(e: usize) -> BigRational {
    BigRational::from_integer(BigInt::one() << e)
}

fn edge_prob(gap: usize, m: usize, c: &BigRational) -> BigRational {
    let raw = c * pow2(gap) / int(m as u64);
    raw.min(BigRational::one())
}

fn binomial(n: u64, k: u64) -> BigRational {
    let mut b = BigInt::one();
    for t in 0..k {
        b = b * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    BigRational::from_integer(b)
}

/// Expected number of monotone paths between a fixed vertex of layer `i`
/// and a fixed vertex of layer `j`. A path picks a subset of the
/// intermediate layers and one vertex in each.
pub fn expected_monotone_paths(i: usize, j: usize, m: usize, c: &BigRational) -> BigRational {
    assert!(1 <= i && i < j, "need 1 <= i < j");
    let inner = j - i - 1;
    assert!(inner <= 24, "too many intermediate layers");
    let mut total = BigRational::zero();
    for mask in 0u32..1 << inner {
        let mut prob = BigRational::one();
        let mut prev = i;
        for layer in i + 1..=j {
            let chosen = layer == j || mask & (1 << (layer - i - 1)) != 0;
            if chosen {
                prob *= edge_prob(layer - prev, m, c);
                prev = layer;
            }
        }
        total += int(m as u64).pow(mask.count_ones() as i32) * prob;
    }
    total
}

/// `sum_{l=1}^{gap} C(gap-1, l-1) m^(l-1) c^l 2^gap / m^l`, ignoring caps.
pub fn monotone_paths_termwise(gap: usize, m: usize, c: &BigRational) -> BigRational {
    let mm = int(m as u64);
    (1..=gap)
        .map(|l| {
            binomial(gap as u64 - 1, l as u64 - 1) * mm.pow(l as i32 - 1) * c.pow(l as i32) * pow2(gap)
                / mm.pow(l as i32)
        })
        .fold(BigRational::zero(), |a, b| a + b)
}

/// `2^(2 gap - 1) / m`, the uncapped value at `c = 1`.
pub fn monotone_paths_closed_form(gap: usize, m: usize) -> BigRational {
    pow2(2 * gap - 1) / int(m as u64)
}

/// Expected edge count, `sum_{i<j} m^2 p_ij`.
pub fn expected_edges(k: usize, m: usize, c: &BigRational) -> BigRational {
    let m2 = int((m * m) as u64);
    let mut total = BigRational::zero();
    for i in 1..k {
        for j in i + 1..=k {
            total += &m2 * edge_prob(j - i, m, c);
        }
    }
    total
}

/// Per-pair bound `k^2 2^(4k) / m^2` on the probability of a bad pair.
pub fn bad_pair_bound(k: usize, m: usize) -> BigRational {
    int((k * k) as u64) * pow2(4 * k) / int((m * m) as u64)
}

/// `(2^k m^(l-1)) (2^k m^(l2-1)) (2^k / m^l) (2^k / m^l2)`, which collapses
/// to `2^(4k) / m^2` for every `l, l2 >= 1`.
pub fn two_path_term(k: usize, m: usize, l: usize, l2: usize) -> BigRational {
    let mm = int(m as u64);
    let a = pow2(k) * mm.pow(l as i32 - 1);
    let b = pow2(k) * mm.pow(l2 as i32 - 1);
    let pa = pow2(k) / mm.pow(l as i32);
    let pb = pow2(k) / mm.pow(l2 as i32);
    a * b * pa * pb
}

/// Exact expected number of bad pairs when `k = 3`.
///
/// Only pairs in `A_1 x A_3` can be bad. Two-edge paths through distinct
/// middle vertices are edge-disjoint, each present with probability
/// `q = p_12 p_23`. The pair is bad when the direct edge and one such path
/// exist, or when two such paths exist.
pub fn bad_pairs_k3_exact(m: usize, c: &BigRational) -> BigRational {
    let one = BigRational::one();
    let p13 = edge_prob(2, m, c);
    let q = edge_prob(1, m, c) * edge_prob(1, m, c);
    let none = (&one - &q).pow(m as i32);
    let exactly_one = int(m as u64) * &q * (&one - &q).pow(m as i32 - 1);
    let at_least_one = &one - &none;
    let at_least_two = &at_least_one - &exactly_one;
    int((m * m) as u64) * (&p13 * at_least_one + (&one - &p13) * at_least_two)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ShortCycleExpectation {
    /// `sum_{l=3}^{r-1} N^l p_max^l` with `N = km`.
    pub bound: BigRational,
    /// Exact expected triangle count; `None` for `k < 3`.
    pub triangles: Option<BigRational>,
}

pub fn short_cycle_expectation(k: usize, m: usize, r: usize, c: &BigRational) -> ShortCycleExpectation {
    let big_n = int((k * m) as u64);
    let p_max = if k >= 2 { edge_prob(k - 1, m, c) } else { BigRational::zero() };
    let bound = (3..r)
        .map(|l| (&big_n * &p_max).pow(l as i32))
        .fold(BigRational::zero(), |a, b| a + b);
    let triangles = (k >= 3).then(|| {
        let m3 = int((m * m * m) as u64);
        let mut total = BigRational::zero();
        for a in 1..=k {
            for b in a + 1..=k {
                for d in b + 1..=k {
                    total += &m3 * edge_prob(b - a, m, c) * edge_prob(d - b, m, c) * edge_prob(d - a, m, c);
                }
            }
        }
        total
    });
    ShortCycleExpectation { bound, triangles }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one() -> BigRational {
        BigRational::one()
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn monotone_path_examples() {
        assert_eq!(expected_monotone_paths(1, 2, 16, &one()), r(2, 16));
        assert_eq!(expected_monotone_paths(1, 4, 16, &one()), r(2, 1));
        assert_eq!(monotone_paths_closed_form(3, 16), r(2, 1));
        for gap in 1..=8 {
            let m = 1 << 10;
            assert_eq!(monotone_paths_termwise(gap, m, &one()), monotone_paths_closed_form(gap, m));
            assert_eq!(expected_monotone_paths(2, 2 + gap, m, &one()), monotone_paths_closed_form(gap, m));
        }
    }

    #[test]
    fn capped_probabilities() {
        // m = 2: every gap has p = 1, so every subset path exists.
        assert_eq!(expected_monotone_paths(1, 3, 2, &one()), r(3, 1));
        assert_eq!(expected_edges(3, 2, &one()), r(12, 1));
    }

    #[test]
    fn edge_and_triangle_expectations() {
        assert_eq!(expected_edges(4, 16, &one()), r(352, 1));
        assert_eq!(short_cycle_expectation(4, 16, 5, &one()).triangles, Some(r(160, 1)));
        assert_eq!(short_cycle_expectation(4, 8, 5, &one()).triangles, Some(r(160, 1)));
        assert_eq!(short_cycle_expectation(3, 16, 4, &one()).triangles, Some(r(16, 1)));
        assert_eq!(short_cycle_expectation(2, 16, 4, &one()).triangles, None);
        // r = 4 has only the l = 3 term: (64 * 1/2)^3.
        assert_eq!(short_cycle_expectation(4, 16, 4, &one()).bound, r(32768, 1));
    }

    #[test]
    fn bad_pair_quantities() {
        assert_eq!(bad_pair_bound(2, 16), r(4 * 256, 256));
        for (l, l2) in [(1, 1), (2, 3), (4, 1)] {
            assert_eq!(two_path_term(3, 16, l, l2), r(4096, 256));
        }
        let exact = bad_pairs_k3_exact(16, &one());
        assert!(exact > r(18, 1) && exact < r(20, 1));
        assert!(bad_pair_bound(3, 16) * r(256, 1) >= exact);
    }

    #[test]
    fn k3_exact_matches_enumeration_for_tiny_m() {
        // m = 1 at scale 1/8: p12 = p23 = 1/4, p13 = 1/2, q = 1/16.
        // Bad iff direct edge and the single middle path: 1/2 * 1/16.
        assert_eq!(bad_pairs_k3_exact(1, &r(1, 8)), r(1, 32));
    }
}
