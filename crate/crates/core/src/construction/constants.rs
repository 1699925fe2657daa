//! Exact rational checks of the constant chain behind the chromatic lower
//! bound at the threshold `n = 2^(10r)`.
//!
//! With `N = 3n`, `k = log2 N / 10r` and `m = N / k`, the bound `n / 7m`
//! simplifies to `k / 21`, and `log2 n / (1000 r) = 1 / 100`. The only
//! irrational quantity is `log2 3`, enclosed by rational bounds certified
//! with integer powers.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Certified enclosure `lo <= log2 3 < hi` with denominators 1000:
/// `2^1584 <= 3^1000 < 2^1585`.
pub fn log2_3_bounds() -> (BigRational, BigRational) {
    let three_pow = BigUint::from(3u32).pow(1000);
    let lo_num = 1584u32;
    let hi_num = 1585u32;
    assert!(BigUint::one() << lo_num <= three_pow);
    assert!(three_pow < BigUint::one() << hi_num);
    (ratio(lo_num as i64, 1000), ratio(hi_num as i64, 1000))
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn pow2(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(num_bigint::BigInt::one() << e as usize)
    } else {
        BigRational::new(1.into(), num_bigint::BigInt::one() << (-e) as usize)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeriesCheck {
    pub terms: usize,
    /// `sum_{l=1}^{terms} l 2^-l`.
    pub partial_sum: BigRational,
    /// `2 - partial_sum`, equal to `(terms + 2) / 2^terms`.
    pub remainder: BigRational,
    /// Largest cross-layer weight `sum_{i<=h<j<=terms} 2^(i-j)` over `h`.
    pub max_cross_weight: BigRational,
    pub holds: bool,
}

/// Partial sums of `sum l 2^-l` and the cross-layer weights they dominate.
pub fn series_check(terms: usize) -> SeriesCheck {
    let partial_sum = (1..=terms as i64)
        .map(|l| ratio(l, 1) * pow2(-l))
        .fold(BigRational::zero(), |a, b| a + b);
    let two = ratio(2, 1);
    let remainder = &two - &partial_sum;
    let closed = ratio(terms as i64 + 2, 1) * pow2(-(terms as i64));

    // The double sum factors as (sum_{i<=h} 2^i)(sum_{j>h} 2^-j).
    let max_cross_weight = (1..terms)
        .map(|h| {
            let low: BigRational = (1..=h).map(|i| pow2(i as i64)).sum();
            let high: BigRational = (h + 1..=terms).map(|j| pow2(-(j as i64))).sum();
            low * high
        })
        .max()
        .unwrap_or_else(BigRational::zero);

    let holds = partial_sum < two && remainder == closed && max_cross_weight <= partial_sum;
    SeriesCheck {
        terms,
        partial_sum,
        remainder,
        max_cross_weight,
        holds,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConstantChain {
    pub r: usize,
    /// `log2 n` at the threshold, `10 r`.
    pub log2_n: usize,
    /// Enclosure of `k = 1 + log2 3 / 10r`.
    pub k_lower: BigRational,
    pub k_upper: BigRational,
    /// `floor(k)`, the layer count the integer parameters would use.
    pub k_floor: usize,
    /// Lower bound on `n / 7m = k / 21`.
    pub lhs_lower: BigRational,
    /// `log2 n / (1000 r)`.
    pub rhs: BigRational,
    pub holds: bool,
    pub series: SeriesCheck,
}

/// Verifies `n / 7m = k / 21 > log2 n / (1000 r)` at `n = 2^(10r)` and the
/// series bound for the first `ceil(k)` terms.
pub fn paper_constant_chain(r: usize) -> ConstantChain {
    assert!((4..=64).contains(&r), "r must lie in 4..=64");
    let (lo, hi) = log2_3_bounds();
    let ten_r = ratio(10 * r as i64, 1);
    let k_lower = ratio(1, 1) + lo / &ten_r;
    let k_upper = ratio(1, 1) + hi / &ten_r;
    let k_floor = k_lower.floor().to_integer().try_into().expect("small");
    let k_ceil: usize = k_upper.ceil().to_integer().try_into().expect("small");

    // n / 7m = n k / 7N = k / 21 exactly since N = 3n.
    let lhs_lower = &k_lower / ratio(21, 1);
    let rhs = ratio(10 * r as i64, 1000 * r as i64);
    let series = series_check(k_ceil);
    let holds = lhs_lower > rhs && k_lower < k_upper && series.holds;
    ConstantChain {
        r,
        log2_n: 10 * r,
        k_lower,
        k_upper,
        k_floor,
        lhs_lower,
        rhs,
        holds,
        series,
    }
}
