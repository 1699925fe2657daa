/// Edgeless block `X x Y` between two sides of at most 32 vertices each,
/// given as bitmasks over side positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EmptyBlock {
    pub left: u32,
    pub right: u32,
}

impl EmptyBlock {
    pub fn area(&self) -> u64 {
        self.left.count_ones() as u64 * self.right.count_ones() as u64
    }
}

/// Searches for an edgeless block accepted by `violates(|X|, |Y|)`.
///
/// `nbr[a]` is the neighborhood of left vertex `a` as a mask over the right
/// side (`right_size` bits). Every nonempty `X` is enumerated; the largest `Y`
/// with no edge to `X` is the common non-neighborhood, and `violates` must be
/// monotone in `|Y|` for that choice to be exhaustive. Cost is `2^|left|`.
pub fn find_empty_block<F>(nbr: &[u32], right_size: usize, violates: F) -> Option<EmptyBlock>
where
    F: Fn(u64, u64) -> bool,
{
    assert!(nbr.len() <= 24, "left side too large for exhaustive search");
    assert!(right_size <= 32);
    let full_right: u32 = if right_size == 32 {
        u32::MAX
    } else {
        (1u32 << right_size) - 1
    };
    let subsets = 1usize << nbr.len();
    let mut free = vec![0u32; subsets];
    free[0] = full_right;
    for x in 1..subsets {
        let low = x.trailing_zeros() as usize;
        free[x] = free[x & (x - 1)] & !nbr[low];
        let size_x = x.count_ones() as u64;
        let size_y = free[x].count_ones() as u64;
        if violates(size_x, size_y) {
            return Some(EmptyBlock {
                left: x as u32,
                right: free[x],
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_has_no_nonempty_block() {
        let nbr = vec![0b1111; 4];
        assert_eq!(find_empty_block(&nbr, 4, |x, y| x * y >= 1), None);
    }

    #[test]
    fn edgeless_gives_full_block() {
        let nbr = vec![0; 4];
        let block = find_empty_block(&nbr, 4, |x, y| x * y >= 16).unwrap();
        assert_eq!(block.area(), 16);
        assert_eq!((block.left, block.right), (0b1111, 0b1111));
    }

    #[test]
    fn finds_block_avoiding_edges() {
        // Left 0 sees right 0, left 1 sees right 1.
        let nbr = vec![0b01, 0b10];
        let block = find_empty_block(&nbr, 2, |x, y| x * y >= 1).unwrap();
        assert_eq!((block.left, block.right), (0b01, 0b10));
        assert_eq!(find_empty_block(&nbr, 2, |x, y| x * y >= 2), None);
    }
}
