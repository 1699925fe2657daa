use thiserror::Error;

use super::Graph;

/// Largest vertex count accepted by [`chromatic_number_exact`].
pub const MAX_EXACT_CHROMATIC: usize = 20;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("exact chromatic number limited to {max} vertices, got {n}")]
pub struct InstanceTooLarge {
    pub n: usize,
    pub max: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticResult {
    pub chi: usize,
    /// Proper coloring with colors `1..=chi`, indexed by label (slot 0 unused).
    pub coloring: Vec<u32>,
}

// The inclusion-exclusion count is evaluated modulo the Mersenne prime
// 2^61 - 1 and only used to pick the candidate value, which is then certified.
const MODULUS: u64 = (1 << 61) - 1;

/// Exact chromatic number by inclusion-exclusion over vertex subsets.
///
/// `c_k = sum_S (-1)^{n-|S|} i(S)^k` counts ordered covers of the vertex set
/// by `k` independent sets, where `i(S)` is the number of independent subsets
/// of `S`. The least `k` with `c_k != 0` is chi. The candidate is certified by
/// an explicit `k`-coloring and an exhaustive refutation of `k - 1` colors.
pub fn chromatic_number_exact(g: &Graph) -> Result<ChromaticResult, InstanceTooLarge> {
    let n = g.n();
    if n > MAX_EXACT_CHROMATIC {
        return Err(InstanceTooLarge {
            n,
            max: MAX_EXACT_CHROMATIC,
        });
    }
    if n == 0 {
        return Ok(ChromaticResult {
            chi: 0,
            coloring: vec![0],
        });
    }

    let nbr: Vec<u32> = (1..=n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(0u32, |acc, &w| acc | 1 << (w - 1))
        })
        .collect();

    let full = 1usize << n;
    let mut indep = vec![0u32; full];
    indep[0] = 1;
    for s in 1..full {
        let v = s.trailing_zeros() as usize;
        let without = s & !(1 << v);
        indep[s] = indep[without] + indep[without & !(nbr[v] as usize)];
    }

    let candidate = least_covering_k(&indep, n);

    // Certify: refute one color fewer by exhaustive search, then produce
    // an explicit coloring.
    let mut chi = candidate;
    while chi > 1 && color_with(&nbr, n, chi - 1).is_some() {
        chi -= 1;
    }
    let coloring = loop {
        if let Some(c) = color_with(&nbr, n, chi) {
            break c;
        }
        chi += 1;
    };
    Ok(ChromaticResult { chi, coloring })
}

/// Least `k` whose inclusion-exclusion sum is nonzero modulo [`MODULUS`].
fn least_covering_k(indep: &[u32], n: usize) -> usize {
    let p = MODULUS as u128;
    let mut power: Vec<u128> = vec![1; indep.len()];
    for k in 1..=n {
        let mut total: u128 = 0;
        for (s, (pw, &count)) in power.iter_mut().zip(indep).enumerate() {
            *pw = *pw * count as u128 % p;
            if (n - s.count_ones() as usize).is_multiple_of(2) {
                total += *pw;
            } else {
                total += p - *pw;
            }
            total %= p;
        }
        if total != 0 {
            return k;
        }
    }
    n
}

/// Backtracking `k`-coloring; colors are opened in order so symmetric
/// branches are skipped.
fn color_with(nbr: &[u32], n: usize, k: usize) -> Option<Vec<u32>> {
    fn go(nbr: &[u32], v: usize, k: usize, used: usize, color: &mut [u32]) -> bool {
        if v == nbr.len() {
            return true;
        }
        for c in 1..=(used + 1).min(k) {
            let clash = (0..v).any(|w| nbr[v] & (1 << w) != 0 && color[w] == c as u32);
            if !clash {
                color[v] = c as u32;
                if go(nbr, v + 1, k, used.max(c), color) {
                    return true;
                }
            }
        }
        color[v] = 0;
        false
    }
    let mut color = vec![0u32; n];
    if go(nbr, 0, k, 0, &mut color) {
        let mut labelled = vec![0u32];
        labelled.extend(color);
        Some(labelled)
    } else {
        None
    }
}
