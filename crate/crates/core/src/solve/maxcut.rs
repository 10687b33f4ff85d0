//! Exact maximum cut by exhaustive bipartition enumeration, and the edge
//! bipartization number derived from it.
//!
//! Sides are enumerated in binary-reflected Gray-code order over the
//! `2^(n-1)` bipartitions with the last vertex pinned, so each step moves one
//! vertex and updates the cut size incrementally. The first maximum
//! encountered is kept, which makes the certificate deterministic.

use crate::edges::EdgeIndex;
use crate::graph::{Graph, VertexSet};

use super::{SolveResult, SolverError, SolverKind};

/// Default vertex limit for exhaustive max-cut; beyond it the solver refuses
/// rather than approximates.
pub const DEFAULT_MAXCUT_LIMIT: usize = 28;

pub(crate) struct MaxCut {
    pub size: usize,
    pub side: u64,
    pub steps: u64,
}

pub(crate) fn max_cut_exact(g: &Graph) -> MaxCut {
    let n = g.n();
    if n <= 1 || g.edge_count() == 0 {
        return MaxCut {
            size: 0,
            side: 0,
            steps: 0,
        };
    }
    let full = VertexSet::full(n).0;
    let mut side = 0u64; // vertex n-1 stays on the zero side
    let mut cut = 0i64;
    let mut best = 0i64;
    let mut best_side = 0u64;
    let steps = 1u64 << (n - 1);
    for i in 1..steps {
        let v = i.trailing_zeros() as usize;
        let same_mask = if side >> v & 1 == 1 { side } else { !side & full };
        let same = (g.neighbors(v) & same_mask).count_ones() as i64;
        cut += 2 * same - g.degree(v) as i64;
        side ^= 1 << v;
        if cut > best {
            best = cut;
            best_side = side;
        }
    }
    MaxCut {
        size: best as usize,
        side: best_side,
        steps,
    }
}

/// Minimum edge deletion to a bipartite graph: `m - maxcut(G)`, with the
/// within-side edges as witness and the optimal side as certificate.
pub fn taub_exact_with_limit(g: &Graph, limit: usize) -> Result<SolveResult, SolverError> {
    if g.n() > limit {
        return Err(SolverError::MaxCutCapacity { n: g.n(), limit });
    }
    let mc = max_cut_exact(g);
    let index = EdgeIndex::new(g);
    let mut witness = index.empty_set();
    for (id, (u, v)) in index.pairs().enumerate() {
        if mc.side >> u & 1 == mc.side >> v & 1 {
            witness.insert(id);
        }
    }
    Ok(SolveResult {
        value: (index.edge_count() - mc.size) as u64,
        witness,
        nodes_explored: mc.steps,
        solver_kind: SolverKind::BranchAndBound,
        bipartition: Some(VertexSet(mc.side)),
    })
}

pub fn taub_exact(g: &Graph) -> Result<SolveResult, SolverError> {
    taub_exact_with_limit(g, DEFAULT_MAXCUT_LIMIT)
}
