//! Exhaustive oracles for the three invariants. These are the reference
//! implementations the optimized solvers are validated against; they never
//! run in the verification pipeline except to double-check a reported
//! violation.

use crate::edges::EdgeIndex;
use crate::graph::{Graph, VertexSet};

use super::{InvariantKind, SolveResult, SolverError, SolverKind};

/// Edge-subset enumeration cap for the alpha1/tau oracles (2^20 subsets).
pub const BRUTE_FORCE_EDGE_LIMIT: usize = 20;
/// Bipartition enumeration cap for the taub oracle.
pub const BRUTE_FORCE_VERTEX_LIMIT: usize = 16;

pub fn brute_force(g: &Graph, which: InvariantKind) -> Result<SolveResult, SolverError> {
    match which {
        InvariantKind::Alpha1 | InvariantKind::Tau => brute_edge_subsets(g, which),
        InvariantKind::TauB => brute_bipartitions(g),
    }
}

fn brute_edge_subsets(g: &Graph, which: InvariantKind) -> Result<SolveResult, SolverError> {
    let index = EdgeIndex::new(g);
    let m = index.edge_count();
    if m > BRUTE_FORCE_EDGE_LIMIT {
        return Err(SolverError::BruteForceEdges {
            m,
            limit: BRUTE_FORCE_EDGE_LIMIT,
        });
    }
    let tri_masks: Vec<u32> = g
        .triangles()
        .iter()
        .map(|t| {
            t.pairs()
                .iter()
                .map(|&(u, v)| 1u32 << index.id(u, v).unwrap())
                .sum()
        })
        .collect();

    let mut best_mask = match which {
        InvariantKind::Alpha1 => 0u32, // empty set is triangle-independent
        InvariantKind::Tau => (1u32 << m) - 1, // all edges always cover
        InvariantKind::TauB => unreachable!(),
    };
    let mut best_count = best_mask.count_ones();
    let total: u64 = 1 << m;
    for sub in 0..total {
        let sub = sub as u32;
        match which {
            InvariantKind::Alpha1 => {
                if sub.count_ones() > best_count
                    && tri_masks.iter().all(|&t| (sub & t).count_ones() <= 1)
                {
                    best_count = sub.count_ones();
                    best_mask = sub;
                }
            }
            InvariantKind::Tau => {
                if sub.count_ones() < best_count
                    && tri_masks.iter().all(|&t| sub & t != 0)
                {
                    best_count = sub.count_ones();
                    best_mask = sub;
                }
            }
            InvariantKind::TauB => unreachable!(),
        }
    }
    Ok(SolveResult {
        value: best_count as u64,
        witness: index.set_from_ids((0..m).filter(|&id| best_mask >> id & 1 == 1)),
        nodes_explored: total,
        solver_kind: SolverKind::BruteForce,
        bipartition: None,
    })
}

fn brute_bipartitions(g: &Graph) -> Result<SolveResult, SolverError> {
    let n = g.n();
    if n > BRUTE_FORCE_VERTEX_LIMIT {
        return Err(SolverError::BruteForceVertices {
            n,
            limit: BRUTE_FORCE_VERTEX_LIMIT,
        });
    }
    let index = EdgeIndex::new(g);
    let m = index.edge_count();
    let full = VertexSet::full(n).0;
    let masks: u64 = if n <= 1 { 1 } else { 1 << (n - 1) };
    let mut best_cut = 0usize;
    let mut best_side = 0u64;
    for side in 0..masks {
        let comp = !side & full;
        let cut: usize = crate::graph::BitIter(side)
            .map(|v| (g.neighbors(v) & comp).count_ones() as usize)
            .sum();
        if cut > best_cut {
            best_cut = cut;
            best_side = side;
        }
    }
    let mut witness = index.empty_set();
    for (id, (u, v)) in index.pairs().enumerate() {
        if best_side >> u & 1 == best_side >> v & 1 {
            witness.insert(id);
        }
    }
    Ok(SolveResult {
        value: (m - best_cut) as u64,
        witness,
        nodes_explored: masks,
        solver_kind: SolverKind::BruteForce,
        bipartition: Some(VertexSet(best_side)),
    })
}
