//! Streaming k-subset enumeration in lexicographic order.
//!
//! The leak-set and candidate scans walk hundreds of millions of subsets in
//! the larger instances, so combinations are emitted directly as `VertexSet`
//! values from a reusable index state instead of allocating id vectors.

use crate::graph::VertexSet;

/// Lexicographic k-combinations of a ground list of ascending vertex ids.
///
/// For ascending ground ids the emitted sets are ordered exactly like their
/// sorted id sequences, which is the order witnesses and certificates are
/// canonicalized in.
pub struct Combinations {
    ground: Vec<usize>,
    idx: Vec<usize>,
    started: bool,
    done: bool,
}

impl Combinations {
    pub fn new(ground: Vec<usize>, k: usize) -> Self {
        let done = k > ground.len();
        Combinations { idx: (0..k).collect(), ground, started: false, done }
    }

    /// Enumerates k-subsets of `{0..n-1}`.
    pub fn of_range(n: usize, k: usize) -> Self {
        Self::new((0..n).collect(), k)
    }

    fn current(&self) -> VertexSet {
        self.idx.iter().map(|&i| self.ground[i]).collect()
    }

    fn advance(&mut self) -> bool {
        let k = self.idx.len();
        let n = self.ground.len();
        if !self.started {
            self.started = true;
            return !self.done;
        }
        if self.done || k == 0 {
            self.done = true;
            return false;
        }
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                return false;
            }
            i -= 1;
            if self.idx[i] + (k - i) < n {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return true;
            }
        }
    }

    /// Fills `out` with up to `max` further combinations; returns how many
    /// were produced. An empty fill means the enumeration is exhausted.
    pub fn next_chunk(&mut self, out: &mut Vec<VertexSet>, max: usize) -> usize {
        out.clear();
        while out.len() < max && self.advance() {
            out.push(self.current());
        }
        out.len()
    }
}

impl Iterator for Combinations {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.advance() {
            Some(self.current())
        } else {
            None
        }
    }
}

/// Binomial coefficient, saturating at `u64::MAX`; only small `k` occur in
/// practice but the guard keeps display math safe for any input.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_in_lexicographic_order() {
        let got: Vec<Vec<usize>> = Combinations::of_range(4, 2).map(|s| s.to_vec()).collect();
        assert_eq!(
            got,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
    }

    #[test]
    fn zero_and_full_sizes() {
        let got: Vec<_> = Combinations::of_range(3, 0).collect();
        assert_eq!(got, vec![VertexSet::empty()]);
        let got: Vec<_> = Combinations::of_range(3, 3).collect();
        assert_eq!(got, vec![VertexSet::from_ids([0, 1, 2])]);
        assert_eq!(Combinations::of_range(3, 4).count(), 0);
    }

    #[test]
    fn sparse_ground_keeps_order() {
        let got: Vec<Vec<usize>> =
            Combinations::new(vec![1, 4, 9], 2).map(|s| s.to_vec()).collect();
        assert_eq!(got, vec![vec![1, 4], vec![1, 9], vec![4, 9]]);
    }

    #[test]
    fn chunking_matches_iteration() {
        let all: Vec<_> = Combinations::of_range(9, 3).collect();
        let mut chunked = Vec::new();
        let mut combos = Combinations::of_range(9, 3);
        let mut buf = Vec::new();
        while combos.next_chunk(&mut buf, 7) > 0 {
            chunked.extend_from_slice(&buf);
        }
        assert_eq!(all, chunked);
        assert_eq!(all.len() as u64, binomial(9, 3));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(16, 2), 120);
        assert_eq!(binomial(32, 3), 4960);
        assert_eq!(binomial(64, 4), 635_376);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(4, 5), 0);
    }
}
