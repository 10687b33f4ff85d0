//! The conflict graph of a graph `G`: one vertex per edge of `G`, with two
//! edges adjacent exactly when they lie in a common triangle. An edge set of
//! `G` contains at most one edge from each triangle if and only if it is an
//! independent set here.

use super::matrix::AdjMatrix;
use crate::edges::EdgeIndex;
use crate::graph::{BitIter, Graph, VertexSet};

pub struct ConflictGraph {
    adj: AdjMatrix,
}

impl ConflictGraph {
    /// Number of vertices, i.e. edges of the underlying graph.
    pub fn vertex_count(&self) -> usize {
        self.adj.n()
    }

    pub fn are_conflicting(&self, e: usize, f: usize) -> bool {
        self.adj.are_adjacent(e, f)
    }

    pub fn conflict_degree(&self, e: usize) -> usize {
        self.adj.degree(e)
    }

    pub(crate) fn matrix(&self) -> &AdjMatrix {
        &self.adj
    }
}

/// Two distinct edges conflict iff they share a vertex `u` and their opposite
/// endpoints are adjacent; the common triangle is then `{u, v, w}`.
pub fn conflict_graph(g: &Graph, index: &EdgeIndex) -> ConflictGraph {
    let mut adj = AdjMatrix::new(index.edge_count());
    for u in 0..g.n() {
        let nbrs = g.neighbors(u);
        for v in BitIter(nbrs) {
            let higher = nbrs & g.neighbors(v) & !VertexSet::full(v + 1).0;
            for w in BitIter(higher) {
                let e = index.id(u, v).expect("edge of g");
                let f = index.id(u, w).expect("edge of g");
                adj.add_edge(e, f);
            }
        }
    }
    ConflictGraph { adj }
}
