//! Ground sets and k-subset enumeration.

use crate::error::{Error, Result};

/// Default cap on the number of k-subsets an exhaustive operation may touch.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 5_000_000;

/// Vertices `0..n` of a complete hypergraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parameter("ground set must be non-empty".into()));
        }
        Ok(GroundSet { n })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }
}

/// Limits guarding the exhaustive operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of k-subsets (or conflict pairs) enumerated by one call.
    pub enumeration: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            enumeration: DEFAULT_ENUMERATION_BUDGET,
        }
    }
}

impl Budget {
    pub fn new(enumeration: u64) -> Self {
        Budget { enumeration }
    }

    pub(crate) fn check(&self, needed: u128) -> Result<()> {
        if needed > self.enumeration as u128 {
            Err(Error::Resource {
                budget: "enumeration",
                needed,
                limit: self.enumeration as u128,
            })
        } else {
            Ok(())
        }
    }
}

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        match acc.checked_mul((n - i) as u128) {
            Some(v) => acc = v / (i as u128 + 1),
            None => return u128::MAX,
        }
    }
    acc
}

/// Advances `idx` to the next k-combination of `0..n` in lexicographic order.
/// Returns false when `idx` was the last combination.
pub fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Lexicographic iterator over the k-subsets of `0..n`, each yielded sorted.
#[derive(Clone, Debug)]
pub struct KSubsets {
    n: usize,
    current: Vec<usize>,
    done: bool,
}

impl KSubsets {
    /// Also accepts `k = 0` (one empty subset) and `k > n` (nothing), which
    /// internal callers rely on; [`enumerate_ksubsets`] is the checked entry point.
    pub fn new(n: usize, k: usize) -> Self {
        KSubsets {
            n,
            current: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for KSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        if !next_combination(&mut self.current, self.n) {
            self.done = true;
        }
        Some(out)
    }
}

/// All k-subsets of the ground set in lexicographic order of sorted id tuples.
pub fn enumerate_ksubsets(ground: &GroundSet, k: usize) -> Result<KSubsets> {
    if k == 0 || k > ground.len() {
        return Err(Error::Parameter(format!(
            "k = {k} must lie in 1..={}",
            ground.len()
        )));
    }
    Ok(KSubsets::new(ground.len(), k))
}

/// Calls `f` on every k-subset of `items` (taken in the given order).
pub fn for_each_ksubset_of<T: Copy>(items: &[T], k: usize, mut f: impl FnMut(&[T])) {
    if k > items.len() {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut buf: Vec<T> = Vec::with_capacity(k);
    loop {
        buf.clear();
        buf.extend(idx.iter().map(|&i| items[i]));
        f(&buf);
        if !next_combination(&mut idx, items.len()) {
            break;
        }
    }
}

/// Position of a sorted k-subset of `0..n` in lexicographic order.
pub fn rank_ksubset(subset: &[usize], n: usize) -> usize {
    let k = subset.len();
    let mut rank = 0u128;
    let mut prev = 0usize;
    for (i, &v) in subset.iter().enumerate() {
        for skipped in prev..v {
            rank += binomial((n - skipped - 1) as u64, (k - i - 1) as u64);
        }
        prev = v + 1;
    }
    rank as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_choose_two() {
        let g = GroundSet::new(4).unwrap();
        let all: Vec<_> = enumerate_ksubsets(&g, 2).unwrap().collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
    }

    #[test]
    fn full_set_and_counts() {
        let g = GroundSet::new(5).unwrap();
        let all: Vec<_> = enumerate_ksubsets(&g, 5).unwrap().collect();
        assert_eq!(all, vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(enumerate_ksubsets(&g, 3).unwrap().count(), 10);
    }

    #[test]
    fn k_out_of_range() {
        let g = GroundSet::new(3).unwrap();
        assert!(matches!(enumerate_ksubsets(&g, 0), Err(Error::Parameter(_))));
        assert!(matches!(enumerate_ksubsets(&g, 4), Err(Error::Parameter(_))));
        assert!(GroundSet::new(0).is_err());
    }

    #[test]
    fn lexicographic_and_ranked() {
        let n = 7;
        for k in 1..=n {
            let all: Vec<_> = KSubsets::new(n, k).collect();
            assert_eq!(all.len() as u128, binomial(n as u64, k as u64));
            for w in all.windows(2) {
                assert!(w[0] < w[1]);
            }
            for (i, s) in all.iter().enumerate() {
                assert_eq!(rank_ksubset(s, n), i);
            }
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 3), 10);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(60, 30), 118_264_581_564_861_424);
        assert_eq!(binomial(10_000, 5000), u128::MAX);
    }
}
