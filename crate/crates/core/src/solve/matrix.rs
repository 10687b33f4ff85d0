//! Dense bit-matrix adjacency for auxiliary graphs whose vertex count can
//! exceed 64 (conflict graphs live on edge ids).

use crate::graph::Graph;

#[derive(Clone)]
pub(crate) struct AdjMatrix {
    n: usize,
    words: usize,
    rows: Vec<u64>, // row-major, `words` words per row
}

impl AdjMatrix {
    pub fn new(n: usize) -> AdjMatrix {
        let words = n.div_ceil(64).max(1);
        AdjMatrix {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn from_graph(g: &Graph) -> AdjMatrix {
        let mut m = AdjMatrix::new(g.n());
        for (u, v) in g.edges() {
            m.add_edge(u, v);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> usize {
        self.words
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        test_bit(self.row(u), v)
    }

    pub fn degree(&self, v: usize) -> usize {
        count(self.row(v))
    }

    /// Bitmask of all `n` vertices.
    pub fn full(&self) -> Vec<u64> {
        let mut w = vec![u64::MAX; self.words];
        let spare = self.words * 64 - self.n;
        if spare > 0 {
            w[self.words - 1] = u64::MAX >> spare;
        }
        if self.n == 0 {
            w[0] = 0;
        }
        w
    }
}

pub(crate) fn test_bit(words: &[u64], i: usize) -> bool {
    words[i / 64] >> (i % 64) & 1 == 1
}


pub(crate) fn clear_bit(words: &mut [u64], i: usize) {
    words[i / 64] &= !(1 << (i % 64));
}

pub(crate) fn count(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

pub(crate) fn count_and(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

/// Ascending iterator over set bits of a word slice.
pub(crate) fn iter_bits<'a>(words: &'a [u64]) -> impl Iterator<Item = usize> + 'a {
    words
        .iter()
        .enumerate()
        .flat_map(|(i, &w)| crate::graph::BitIter(w).map(move |b| i * 64 + b))
}
