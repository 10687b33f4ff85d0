//! Canonical edge numbering and bit-vector edge subsets.
//!
//! Edge ids are assigned lexicographically by `(u, v)` with `u < v`, so that
//! witnesses and reports are reproducible across runs.

use std::fmt;

use crate::graph::{Graph, VertexSet};

const NO_EDGE: u16 = u16::MAX;

/// Bijection between the edges of one graph and the ids `0..m`.
#[derive(Clone)]
pub struct EdgeIndex {
    n: usize,
    pairs: Vec<(u8, u8)>,
    ids: Vec<u16>, // n*n lookup, NO_EDGE where absent
}

impl EdgeIndex {
    pub fn new(g: &Graph) -> EdgeIndex {
        let n = g.n();
        let mut pairs = Vec::with_capacity(g.edge_count());
        let mut ids = vec![NO_EDGE; n * n];
        for (u, v) in g.edges() {
            let id = pairs.len() as u16;
            pairs.push((u as u8, v as u8));
            ids[u * n + v] = id;
            ids[v * n + u] = id;
        }
        EdgeIndex { n, pairs, ids }
    }

    pub fn edge_count(&self) -> usize {
        self.pairs.len()
    }

    /// Endpoints of edge `id`, with `u < v`.
    pub fn pair(&self, id: usize) -> (usize, usize) {
        let (u, v) = self.pairs[id];
        (u as usize, v as usize)
    }

    pub fn id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        match self.ids[u * self.n + v] {
            NO_EDGE => None,
            id => Some(id as usize),
        }
    }

    /// All edges as `(u, v)` pairs in id order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    pub fn empty_set(&self) -> EdgeSet {
        EdgeSet::new(self.pairs.len())
    }

    pub fn full_set(&self) -> EdgeSet {
        let mut s = self.empty_set();
        for id in 0..self.pairs.len() {
            s.insert(id);
        }
        s
    }

    pub fn set_from_ids<I: IntoIterator<Item = usize>>(&self, ids: I) -> EdgeSet {
        let mut s = self.empty_set();
        for id in ids {
            s.insert(id);
        }
        s
    }

    /// Ids of the edges induced inside `s`.
    pub fn set_within(&self, s: VertexSet) -> EdgeSet {
        let mut out = self.empty_set();
        for (id, (u, v)) in self.pairs().enumerate() {
            if s.contains(u) && s.contains(v) {
                out.insert(id);
            }
        }
        out
    }
}

impl fmt::Debug for EdgeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeIndex(m={})", self.pairs.len())
    }
}

/// Subset of the edge ids of one [`EdgeIndex`], stored as packed bits.
///
/// Sets from different indices must not be mixed; combining operations check
/// that the universes have the same size.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    m: usize,
    words: Vec<u64>,
}

impl EdgeSet {
    pub(crate) fn new(m: usize) -> EdgeSet {
        EdgeSet {
            m,
            words: vec![0; m.div_ceil(64)],
        }
    }

    /// Size of the owning universe (number of edges of the graph).
    pub fn universe(&self) -> usize {
        self.m
    }

    pub fn insert(&mut self, id: usize) {
        assert!(id < self.m, "edge id {id} out of range (m = {})", self.m);
        self.words[id / 64] |= 1 << (id % 64);
    }

    pub fn remove(&mut self, id: usize) {
        assert!(id < self.m, "edge id {id} out of range (m = {})", self.m);
        self.words[id / 64] &= !(1 << (id % 64));
    }

    pub fn contains(&self, id: usize) -> bool {
        id < self.m && self.words[id / 64] >> (id % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        assert_eq!(self.m, other.m, "edge sets belong to different indices");
        EdgeSet {
            m: self.m,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        assert_eq!(self.m, other.m, "edge sets belong to different indices");
        EdgeSet {
            m: self.m,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        assert_eq!(self.m, other.m, "edge sets belong to different indices");
        EdgeSet {
            m: self.m,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn intersection_len(&self, other: &EdgeSet) -> usize {
        assert_eq!(self.m, other.m, "edge sets belong to different indices");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset_of(&self, other: &EdgeSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Set ids in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &bits)| {
            crate::graph::BitIter(bits).map(move |b| w * 64 + b)
        })
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeSet{{")?;
        for (i, id) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{id}")?;
        }
        write!(f, "}}")
    }
}
