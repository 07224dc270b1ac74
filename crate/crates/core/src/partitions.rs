//! Partitions, bipartitions, rim hooks and the label types built on them.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub struct Partition(pub Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Self {
        let mut p: Vec<u32> = parts.into_iter().filter(|&x| x > 0).collect();
        p.sort_unstable_by(|a, b| b.cmp(a));
        Partition(p)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn is_valid(parts: &[u32]) -> bool {
        parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&x| x > 0)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0] as usize;
        let mut t = Vec::with_capacity(cols);
        for c in 0..cols {
            t.push(self.0.iter().filter(|&&p| p as usize > c).count() as u32);
        }
        Partition(t)
    }

    /// No part repeated `ell` or more times.
    pub fn is_regular(&self, ell: u64) -> bool {
        if self.0.is_empty() {
            return true;
        }
        let mut run = 1usize;
        for w in self.0.windows(2) {
            if w[0] == w[1] {
                run += 1;
                if run as u64 >= ell {
                    return false;
                }
            } else {
                run = 1;
            }
        }
        (run as u64) < ell
    }

    /// Dominance order on partitions of equal size.
    pub fn dominates(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.size(), other.size());
        let mut a = 0u32;
        let mut b = 0u32;
        for i in 0..self.0.len().max(other.0.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Beta-set (first-column hook values) with `m` entries, m >= len.
    fn beta_set(&self, m: usize) -> Vec<i64> {
        assert!(m >= self.len());
        (0..m)
            .map(|i| self.part(i) as i64 + (m - 1 - i) as i64)
            .collect()
    }

    /// All ways to remove a rim hook of size `k`: (smaller partition, height sign).
    pub fn rim_hook_removals(&self, k: u32) -> Vec<(Partition, i64)> {
        if k == 0 {
            return vec![(self.clone(), 1)];
        }
        let m = self.len() + k as usize;
        let beta = self.beta_set(m);
        let set: std::collections::HashSet<i64> = beta.iter().copied().collect();
        let mut out = Vec::new();
        for (idx, &b) in beta.iter().enumerate() {
            let target = b - k as i64;
            if target < 0 || set.contains(&target) {
                continue;
            }
            // Height = number of beta entries strictly between target and b.
            let height = beta
                .iter()
                .filter(|&&x| x > target && x < b)
                .count();
            let mut nb = beta.clone();
            nb[idx] = target;
            nb.sort_unstable_by(|a, c| c.cmp(a));
            let parts: Vec<u32> = nb
                .iter()
                .enumerate()
                .map(|(i, &x)| (x - (m - 1 - i) as i64) as u32)
                .collect();
            let sign = if height % 2 == 0 { 1 } else { -1 };
            out.push((Partition::new(parts), sign));
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, descending lexicographic (so `(n)` first).
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        let top = max.min(n);
        for p in (1..=top).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Ordered pair of partitions with |alpha| + |beta| = n.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bipartition {
    pub alpha: Partition,
    pub beta: Partition,
}

impl Bipartition {
    pub fn new(alpha: Partition, beta: Partition) -> Self {
        Bipartition { alpha, beta }
    }

    pub fn size(&self) -> u32 {
        self.alpha.size() + self.beta.size()
    }

    pub fn swap(&self) -> Bipartition {
        Bipartition {
            alpha: self.beta.clone(),
            beta: self.alpha.clone(),
        }
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.alpha, self.beta)
    }
}

/// All bipartitions of `n` in the documented display order:
/// |alpha| descending, then each component descending lexicographic.
pub fn bipartitions_of(n: u32) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for alpha in partitions_of(a) {
            for beta in partitions_of(n - a) {
                out.push(Bipartition::new(alpha.clone(), beta));
            }
        }
    }
    out
}

/// Dominance-compatible total order for bipartition rows/columns:
/// |alpha| descending, then alpha descending-lex, then beta descending-lex.
pub fn bipartition_order(a: &Bipartition, b: &Bipartition) -> Ordering {
    (b.alpha.size(), &b.alpha.0, &b.beta.0).cmp(&(a.alpha.size(), &a.alpha.0, &a.beta.0))
}

/// Bipartition dominance (partial): componentwise partial sums of
/// (alpha; |alpha| + beta-partials).
pub fn bipartition_dominates(a: &Bipartition, b: &Bipartition) -> bool {
    debug_assert_eq!(a.size(), b.size());
    let n = a.alpha.len().max(b.alpha.len()) + 1;
    let mut sa = 0u32;
    let mut sb = 0u32;
    for i in 0..n {
        sa += a.alpha.part(i);
        sb += b.alpha.part(i);
        if sa < sb {
            return false;
        }
    }
    let (ta, tb) = (a.alpha.size(), b.alpha.size());
    let m = a.beta.len().max(b.beta.len()) + 1;
    let mut pa = ta;
    let mut pb = tb;
    for i in 0..m {
        pa += a.beta.part(i);
        pb += b.beta.part(i);
        if pa < pb {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn transpose_involution() {
        for n in 0..=7 {
            for lam in partitions_of(n) {
                assert_eq!(lam.transpose().transpose(), lam);
            }
        }
    }

    #[test]
    fn regularity() {
        assert!(p(&[2, 1]).is_regular(3));
        assert!(!p(&[1, 1, 1]).is_regular(3));
        assert!(p(&[1, 1]).is_regular(3));
        assert!(!p(&[1, 1]).is_regular(2));
        assert!(p(&[3, 1]).is_regular(2));
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(partitions_of(0).len(), 1);
        assert_eq!(bipartitions_of(2).len(), 5);
        assert_eq!(bipartitions_of(4).len(), 20);
    }

    #[test]
    fn descending_order() {
        let ps = partitions_of(4);
        assert_eq!(ps[0], p(&[4]));
        assert_eq!(ps[ps.len() - 1], p(&[1, 1, 1, 1]));
    }

    #[test]
    fn rim_hooks_of_staircase() {
        // (2,1) is a 2-core: no 2-hooks at all.
        let lam = p(&[2, 1]);
        assert!(lam.rim_hook_removals(2).is_empty());
        // Exactly one 3-hook, the whole diagram, of odd height.
        let threes = lam.rim_hook_removals(3);
        assert_eq!(threes, vec![(Partition::empty(), -1)]);
        // Two 1-hooks, both of height zero.
        let ones = lam.rim_hook_removals(1);
        assert_eq!(ones.len(), 2);
        assert!(ones.contains(&(p(&[1, 1]), 1)));
        assert!(ones.contains(&(p(&[2]), 1)));
    }

    #[test]
    fn dominance_basic() {
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])));
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])));
        assert!(p(&[2, 2]).dominates(&p(&[2, 1, 1])));
    }

    #[test]
    fn hook_count_equals_mn_base() {
        // removing n-hooks from (n) gives exactly one way
        for n in 1..=6u32 {
            let lam = p(&[n]);
            assert_eq!(lam.rim_hook_removals(n).len(), 1);
        }
    }
}
