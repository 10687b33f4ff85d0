//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` neighbor bitmask per vertex, so set
//! intersections (common neighborhoods, cuts, induced subgraphs) are single
//! word operations. Graphs are immutable once built; every operation here is
//! a pure function and safe to call from concurrent workers.

use std::fmt;

use thiserror::Error;

use crate::edges::{EdgeIndex, EdgeSet};

/// Hard vertex capacity: one machine word per neighbor set.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph capacity exceeded: {requested} vertices (limit {MAX_VERTICES})")]
    CapacityExceeded { requested: usize },
    #[error("vertex {vertex} out of range for a {n}-vertex graph")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("bipartite-block sizes must be positive")]
    ZeroFamilyBlock,
}

/// Subset of the vertices `0..64`, one bit per vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// All vertices below `n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn complement_in(self, n: usize) -> Self {
        VertexSet(!self.0 & Self::full(n).0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Ascending iterator over the set bits of a word.
#[derive(Clone)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// Vertex triple `a < b < c` spanning three pairwise-adjacent vertices.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Triangle {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl Triangle {
    pub fn vertices(self) -> [usize; 3] {
        [self.a, self.b, self.c]
    }

    /// The three edges as ordered pairs.
    pub fn pairs(self) -> [(usize, usize); 3] {
        [(self.a, self.b), (self.a, self.c), (self.b, self.c)]
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// Simple undirected graph with bit-vector adjacency rows.
///
/// Invariants maintained by construction: adjacency is symmetric, there are
/// no self-loops, and all neighbor bits lie below `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::CapacityExceeded { requested: n });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Build directly from adjacency rows; used by the graph6 decoder, which
    /// produces symmetric loop-free rows by construction.
    pub(crate) fn from_adjacency(n: usize, adj: Vec<u64>) -> Graph {
        debug_assert_eq!(adj.len(), n);
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, &row)| row >> v & 1 == 0 && (n == 64 || row >> n == 0)));
        Graph { n, adj }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbor bitmask of `v`.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|row| row.count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges in lexicographic `(u, v)` order with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            BitIter(self.adj[u] & !VertexSet::full(u + 1).0).map(move |v| (u, v))
        })
    }

    pub fn has_triangle(&self) -> bool {
        self.edges()
            .any(|(u, v)| self.adj[u] & self.adj[v] != 0)
    }

    /// All triangles, each once, in lexicographic order of the sorted triple.
    pub fn triangles(&self) -> Vec<Triangle> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let above_u = self.adj[u] & !VertexSet::full(u + 1).0;
            for v in BitIter(above_u) {
                let common = self.adj[u] & self.adj[v] & !VertexSet::full(v + 1).0;
                for w in BitIter(common) {
                    out.push(Triangle { a: u, b: v, c: w });
                }
            }
        }
        out
    }

    /// Number of edges with exactly one endpoint in `s`.
    pub fn cut_size(&self, s: VertexSet) -> usize {
        let comp = !s.0;
        s.iter()
            .map(|v| (self.adj[v] & comp).count_ones() as usize)
            .sum()
    }

    /// The edge cut `[S, S̄]` as a set over `index`.
    pub fn cut_edges(&self, index: &EdgeIndex, s: VertexSet) -> EdgeSet {
        let mut out = index.empty_set();
        for (id, (u, v)) in index.pairs().enumerate() {
            if s.contains(u) != s.contains(v) {
                out.insert(id);
            }
        }
        out
    }

    /// Subgraph induced by `s`, relabeled to `0..|s|` preserving vertex order,
    /// together with the new-to-old vertex map.
    pub fn induced_subgraph(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let s = s & self.vertices();
        let map: Vec<usize> = s.iter().collect();
        let k = map.len();
        let mut adj = vec![0u64; k];
        for (new_v, &old_v) in map.iter().enumerate() {
            // compress the old neighbor bits that lie inside s
            for old_w in BitIter(self.adj[old_v] & s.0) {
                let new_w = (s.0 & VertexSet::full(old_w).0).count_ones() as usize;
                adj[new_v] |= 1 << new_w;
            }
        }
        (Graph { n: k, adj }, map)
    }

    /// Disjoint union plus all edges between the two parts.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::CapacityExceeded { requested: n });
        }
        let other_mask = VertexSet::full(n).0 & !VertexSet::full(self.n).0;
        let mut adj: Vec<u64> = self.adj.iter().map(|row| row | other_mask).collect();
        adj.extend(
            other
                .adj
                .iter()
                .map(|row| row << self.n | VertexSet::full(self.n).0),
        );
        Ok(Graph { n, adj })
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        let full = VertexSet::full(n).0;
        for v in 0..n {
            g.adj[v] = full & !(1 << v);
        }
        Ok(g)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
        let n = a + b;
        let mut g = Graph::empty(n)?;
        let left = VertexSet::full(a).0;
        let right = VertexSet::full(n).0 & !left;
        for v in 0..a {
            g.adj[v] = right;
        }
        for v in a..n {
            g.adj[v] = left;
        }
        Ok(g)
    }

    /// Cycle on `n` vertices (a single edge for `n = 2`, edgeless below that).
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        if n == 2 {
            g.add_edge(0, 1)?;
        } else if n >= 3 {
            for v in 0..n {
                g.add_edge(v, (v + 1) % n)?;
            }
        }
        Ok(g)
    }

    /// `K_{r1,r1} ∨ K_{r2,r2} ∨ … ∨ K_{rt,rt}`: the iterated join of balanced
    /// complete bipartite blocks.
    pub fn sharpness_family(rs: &[usize]) -> Result<Graph, GraphError> {
        if rs.contains(&0) {
            return Err(GraphError::ZeroFamilyBlock);
        }
        let total: usize = rs.iter().map(|&r| 2 * r).sum();
        if total > MAX_VERTICES {
            return Err(GraphError::CapacityExceeded { requested: total });
        }
        let mut g = Graph::empty(0)?;
        for &r in rs {
            g = g.join(&Graph::complete_bipartite(r, r)?)?;
        }
        Ok(g)
    }

    /// Proper 2-coloring of every component (side returned as a vertex set),
    /// or an odd cycle when none exists. BFS in ascending vertex order, so the
    /// result is deterministic.
    pub fn two_coloring(&self) -> Result<VertexSet, Vec<usize>> {
        const UNSEEN: u8 = 2;
        let mut color = vec![UNSEEN; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut side = VertexSet::EMPTY;
        let mut queue = Vec::new();
        for root in 0..self.n {
            if color[root] != UNSEEN {
                continue;
            }
            color[root] = 0;
            queue.clear();
            queue.push(root);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                for v in BitIter(self.adj[u]) {
                    if color[v] == UNSEEN {
                        color[v] = 1 - color[u];
                        parent[v] = u;
                        queue.push(v);
                    } else if color[v] == color[u] {
                        return Err(odd_cycle(&parent, u, v));
                    }
                }
            }
        }
        for (v, &c) in color.iter().enumerate() {
            if c == 1 {
                side.insert(v);
            }
        }
        Ok(side)
    }
}

/// Reconstruct the cycle through `u` and `v` from BFS parent pointers.
fn odd_cycle(parent: &[usize], u: usize, v: usize) -> Vec<usize> {
    let ancestors = |mut x: usize| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let up = ancestors(u);
    let vp = ancestors(v);
    // trim the common suffix, keeping the lowest common ancestor once
    let mut i = up.len();
    let mut j = vp.len();
    while i > 1 && j > 1 && up[i - 2] == vp[j - 2] {
        i -= 1;
        j -= 1;
    }
    let mut cycle = up[..i].to_vec();
    cycle.extend(vp[..j - 1].iter().rev());
    cycle
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
