//! Structural predicates and inequality checkers used to screen
//! counterexample candidates.
//!
//! A vertex-minimal graph violating `alpha1 + tau <= n²/4` would have to
//! survive every check in this module: minimum degree above `n/2`, every
//! edge on a triangle, and strictly dense edge cuts. The bipartization
//! variant adds clique-extension and induced-`K4^-` requirements. Each
//! predicate is also exposed as a plain inequality checker so the test
//! suites can exercise the underlying arithmetic directly, always in scaled
//! integers — sharp cases must not be lost to rounding.

mod cliques;
mod cuts;
mod subadditivity;

pub use cliques::{clique_extension_check, maximal_cliques, CliqueExtension};
pub use cuts::{
    dense_cut_audit, CutReport, DenseCutMode, DenseCutOutcome, DENSE_CUT_EXHAUSTIVE_LIMIT,
};
pub use subadditivity::{
    check_denseboth, check_densemin, check_peel, check_trifree_bound, merge_cover,
    DenseBothOutcome, DenseBothValues, DenseMinOutcome, PeelOutcome, PeelValues,
    TrifreeBoundOutcome,
};

use thiserror::Error;

use crate::graph::{BitIter, Graph, Triangle, VertexSet};
use crate::solve::{SolverError, WitnessViolation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("S must be a nonempty proper subset of the vertices")]
    NotProperSubset,
    #[error("exhaustive cut audit is limited to {limit} vertices, graph has {n}")]
    ExhaustiveCutCapacity { n: usize, limit: usize },
    #[error("edge set is not triangle-independent: {0}")]
    NotTriangleIndependent(WitnessViolation),
    #[error("cover {side} contains edge ({u},{v}) outside its part")]
    SideEdgeOutsidePart { side: u8, u: usize, v: usize },
    #[error("cover {side} misses triangle {triangle} of its part")]
    SideNotCovered { side: u8, triangle: Triangle },
    #[error("S is not a clique: {u} and {v} are not adjacent")]
    NotClique { u: usize, v: usize },
    #[error("S is not maximal: vertex {vertex} is adjacent to all of S")]
    NotMaximalClique { vertex: usize },
    #[error("S is the whole vertex set")]
    CliqueIsWholeGraph,
    #[error("triangle-free bound does not apply: graph contains triangle {0}")]
    HasTriangles(Triangle),
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error(transparent)]
    Solver(#[from] SolverError),
}

fn require_proper_subset(g: &Graph, s: VertexSet) -> Result<(), StructureError> {
    if s.is_empty() || !s.is_subset_of(g.vertices()) || s == g.vertices() {
        return Err(StructureError::NotProperSubset);
    }
    Ok(())
}

/// Every edge lies on at least one triangle (vacuously true without edges).
pub fn is_triangular(g: &Graph) -> bool {
    g.edges()
        .all(|(u, v)| g.neighbors(u) & g.neighbors(v) != 0)
}

/// `2·δ(G) > n`: a graph failing this cannot be a minimal violator of the
/// `alpha1 + tau` bound.
pub fn mindeg_filter(g: &Graph) -> bool {
    2 * g.min_degree() > g.n()
}

/// An induced subgraph on four vertices with exactly five edges: two
/// triangles sharing the `adjacent` edge, with the `nonadjacent` pair as the
/// missing edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InducedK4Minus {
    pub adjacent: (usize, usize),
    pub nonadjacent: (usize, usize),
}

impl InducedK4Minus {
    pub fn vertices(self) -> [usize; 4] {
        let mut vs = [
            self.adjacent.0,
            self.adjacent.1,
            self.nonadjacent.0,
            self.nonadjacent.1,
        ];
        vs.sort_unstable();
        vs
    }
}

/// First induced `K4^-` in lexicographic order of (shared edge, missing
/// pair), or None. Scans common neighborhoods of adjacent pairs: `{u,v,w,x}`
/// induces `K4^-` exactly when `w,x` are common neighbors of the edge `uv`
/// and `wx` is not an edge.
pub fn has_induced_k4_minus(g: &Graph) -> Option<InducedK4Minus> {
    for (u, v) in g.edges() {
        let common = g.neighbors(u) & g.neighbors(v);
        for w in BitIter(common) {
            let missing = common & !g.neighbors(w) & !VertexSet::full(w + 1).0;
            if let Some(x) = BitIter(missing).next() {
                return Some(InducedK4Minus {
                    adjacent: (u, v),
                    nonadjacent: (w, x),
                });
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DenseCutStatus {
    VerifiedAll,
    RefutedByCut(CutReport),
    SkippedTooLarge,
}

/// Per-graph record of every structural predicate a minimal counterexample
/// must satisfy.
#[derive(Debug, Clone)]
pub struct StructureProfile {
    pub is_triangular: bool,
    pub min_degree: usize,
    pub induced_k4_minus: Option<InducedK4Minus>,
    pub passes_mindeg_filter: bool,
    pub dense_cut_status: DenseCutStatus,
    /// Extension status of every maximal clique other than the full vertex
    /// set.
    pub clique_extensions: Vec<(VertexSet, CliqueExtension)>,
}

impl StructureProfile {
    pub fn has_induced_k4_minus(&self) -> bool {
        self.induced_k4_minus.is_some()
    }
}

/// Evaluate the whole profile. The cut audit is exhaustive up to
/// [`DENSE_CUT_EXHAUSTIVE_LIMIT`] vertices and falls back to sampled cuts
/// beyond it; a clean sampled audit is reported as skipped, never as
/// verified.
pub fn structure_profile(g: &Graph) -> StructureProfile {
    let n = g.n();
    let dense_cut_status = if n <= DENSE_CUT_EXHAUSTIVE_LIMIT {
        match dense_cut_audit(g, DenseCutMode::Exhaustive).expect("within exhaustive limit") {
            DenseCutOutcome::Refuted(report) => DenseCutStatus::RefutedByCut(report),
            _ => DenseCutStatus::VerifiedAll,
        }
    } else {
        match dense_cut_audit(g, DenseCutMode::Sampled { max_cuts: usize::MAX })
            .expect("sampled mode has no capacity limit")
        {
            DenseCutOutcome::Refuted(report) => DenseCutStatus::RefutedByCut(report),
            _ => DenseCutStatus::SkippedTooLarge,
        }
    };
    let clique_extensions = maximal_cliques(g)
        .into_iter()
        .filter(|&c| c != g.vertices())
        .map(|c| {
            let status = clique_extension_check(g, c).expect("maximal proper clique");
            (c, status)
        })
        .collect();
    StructureProfile {
        is_triangular: is_triangular(g),
        min_degree: g.min_degree(),
        induced_k4_minus: has_induced_k4_minus(g),
        passes_mindeg_filter: mindeg_filter(g),
        dense_cut_status,
        clique_extensions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangular_fixtures() {
        assert!(is_triangular(&Graph::complete(4).unwrap()));
        assert!(!is_triangular(&Graph::cycle(5).unwrap()));
        assert!(!is_triangular(&Graph::complete_bipartite(3, 3).unwrap()));
        // no edges, vacuously triangular
        assert!(is_triangular(&Graph::empty(4).unwrap()));
    }

    #[test]
    fn mindeg_fixtures() {
        assert!(mindeg_filter(&Graph::complete(6).unwrap())); // 2*5 > 6
        assert!(!mindeg_filter(&Graph::cycle(5).unwrap())); // 4 < 5
        // equality is not enough: 2*3 = 6
        assert!(!mindeg_filter(&Graph::complete_bipartite(3, 3).unwrap()));
    }

    #[test]
    fn k4_minus_detection() {
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let w = has_induced_k4_minus(&diamond).unwrap();
        assert_eq!(w.vertices(), [0, 1, 2, 3]);
        assert_eq!(w.adjacent, (0, 1));
        assert_eq!(w.nonadjacent, (2, 3));
        assert!(!diamond.has_edge(w.nonadjacent.0, w.nonadjacent.1));

        // K4 contains K4^- as a subgraph but not induced
        assert!(has_induced_k4_minus(&Graph::complete(4).unwrap()).is_none());
        assert!(has_induced_k4_minus(&Graph::complete_bipartite(3, 3).unwrap()).is_none());
        // K5 minus an edge has induced diamonds
        let mut k5e = Graph::complete(5).unwrap();
        k5e = {
            let edges: Vec<_> = k5e.edges().filter(|&e| e != (3, 4)).collect();
            Graph::from_edges(5, &edges).unwrap()
        };
        assert!(has_induced_k4_minus(&k5e).is_some());
    }

    #[test]
    fn k4_minus_agrees_with_quadruple_enumeration() {
        // check the 4-vertex induced-edge-count definition directly
        for n in [5usize, 6] {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let total = 1u64 << pairs.len();
            let step = if n == 5 { 1 } else { 131 };
            let mut mask = 0;
            while mask < total {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                let mut naive = false;
                for a in 0..n {
                    for b in a + 1..n {
                        for c in b + 1..n {
                            for d in c + 1..n {
                                let vs = [a, b, c, d];
                                let cnt = vs
                                    .iter()
                                    .flat_map(|&x| vs.iter().map(move |&y| (x, y)))
                                    .filter(|&(x, y)| x < y && g.has_edge(x, y))
                                    .count();
                                naive |= cnt == 5;
                            }
                        }
                    }
                }
                assert_eq!(has_induced_k4_minus(&g).is_some(), naive, "n={n} mask={mask}");
                mask += step;
            }
        }
    }

    #[test]
    fn profile_of_k4() {
        let p = structure_profile(&Graph::complete(4).unwrap());
        assert!(p.is_triangular);
        assert_eq!(p.min_degree, 3);
        assert!(p.passes_mindeg_filter);
        assert!(!p.has_induced_k4_minus());
        assert_eq!(p.dense_cut_status, DenseCutStatus::VerifiedAll);
        // the only maximal clique is the whole graph, so nothing to extend
        assert!(p.clique_extensions.is_empty());
    }

    #[test]
    fn profile_of_c5() {
        let p = structure_profile(&Graph::cycle(5).unwrap());
        assert!(!p.is_triangular);
        assert!(!p.passes_mindeg_filter);
        match &p.dense_cut_status {
            DenseCutStatus::RefutedByCut(report) => {
                assert_eq!(report.s, VertexSet::singleton(0));
                assert_eq!(report.cut_size, 2);
            }
            other => panic!("expected a refuting cut, got {other:?}"),
        }
        assert_eq!(p.clique_extensions.len(), 5); // the edges
    }

    #[test]
    fn mindeg_flag_matches_arithmetic() {
        for g in [
            Graph::complete(7).unwrap(),
            Graph::cycle(6).unwrap(),
            Graph::complete_bipartite(2, 5).unwrap(),
            Graph::empty(3).unwrap(),
        ] {
            let p = structure_profile(&g);
            assert_eq!(p.passes_mindeg_filter, 2 * p.min_degree > g.n());
        }
    }
}
