//! Cut-subadditivity checkers and the constructive cover merge.
//!
//! Each inequality here is provable for the exact invariants, so on exactly
//! computed values a check can only fail if a solver is wrong; the test
//! corpus exercises them as end-to-end consistency checks. All comparisons
//! are in scaled integers.

use super::StructureError;
use crate::edges::{EdgeIndex, EdgeSet};
use crate::graph::{Graph, VertexSet};
use crate::solve::{
    alpha1_exact, independence_number, tau_exact, taub_exact_with_limit, validate_witness,
    InvariantKind,
};

/// Exact `alpha1` and `tau` for the whole graph and the two sides of a cut.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeelValues {
    pub alpha1_whole: u64,
    pub tau_whole: u64,
    pub alpha1_side: u64,
    pub tau_side: u64,
    pub alpha1_rest: u64,
    pub tau_rest: u64,
}

impl PeelValues {
    /// Solve all six invariants for `g`, `g[S]`, `g[S̄]`.
    pub fn solve(g: &Graph, s: VertexSet) -> PeelValues {
        let (side, _) = g.induced_subgraph(s);
        let (rest, _) = g.induced_subgraph(s.complement_in(g.n()));
        PeelValues {
            alpha1_whole: alpha1_exact(g).value,
            tau_whole: tau_exact(g).value,
            alpha1_side: alpha1_exact(&side).value,
            tau_side: tau_exact(&side).value,
            alpha1_rest: alpha1_exact(&rest).value,
            tau_rest: tau_exact(&rest).value,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeelOutcome {
    pub holds: bool,
    /// Right side minus left side of
    /// `(α+τ)(G) <= (α+τ)(G[S]) + (α+τ)(G[S̄]) + |[S,S̄]|`.
    pub slack: i64,
    pub cut_size: usize,
}

/// The sum `alpha1 + tau` is subadditive across any cut, up to the cut size.
pub fn check_peel(
    g: &Graph,
    s: VertexSet,
    values: &PeelValues,
) -> Result<PeelOutcome, StructureError> {
    super::require_proper_subset(g, s)?;
    let cut = g.cut_size(s);
    let lhs = values.alpha1_whole + values.tau_whole;
    let rhs = values.alpha1_side
        + values.tau_side
        + values.alpha1_rest
        + values.tau_rest
        + cut as u64;
    Ok(PeelOutcome {
        holds: lhs <= rhs,
        slack: rhs as i64 - lhs as i64,
        cut_size: cut,
    })
}

/// Constructive content of the cut subadditivity: given triangle edge covers
/// `x1` of `g[S]` and `x2` of `g[S̄]` (on `g`'s edge ids) and a
/// triangle-independent set `a`, the union `x1 ∪ x2 ∪ ([S,S̄] − a)` covers
/// every triangle of `g`. Any triangle crossing the cut has two cut edges,
/// of which `a` owns at most one.
pub fn merge_cover(
    g: &Graph,
    index: &EdgeIndex,
    s: VertexSet,
    x1: &EdgeSet,
    x2: &EdgeSet,
    a: &EdgeSet,
) -> Result<EdgeSet, StructureError> {
    super::require_proper_subset(g, s)?;
    if let Err(v) = validate_witness(g, index, InvariantKind::Alpha1, a) {
        return Err(StructureError::NotTriangleIndependent(v));
    }
    validate_side_cover(g, index, s, x1, 1)?;
    validate_side_cover(g, index, s.complement_in(g.n()), x2, 2)?;

    let cut = g.cut_edges(index, s);
    let merged = x1.union(x2).union(&cut.difference(a));
    // always a cover once the inputs check out; a failure here means one of
    // the validators above let a bad input through
    assert!(
        validate_witness(g, index, InvariantKind::Tau, &merged).is_ok(),
        "merged cover failed validation"
    );
    Ok(merged)
}

fn validate_side_cover(
    g: &Graph,
    index: &EdgeIndex,
    part: VertexSet,
    cover: &EdgeSet,
    side: u8,
) -> Result<(), StructureError> {
    for id in cover.iter() {
        let (u, v) = index.pair(id);
        if !(part.contains(u) && part.contains(v)) {
            return Err(StructureError::SideEdgeOutsidePart { side, u, v });
        }
    }
    for triangle in g.triangles() {
        let inside = triangle.vertices().iter().all(|&v| part.contains(v));
        if inside {
            let hit = triangle
                .pairs()
                .iter()
                .any(|&(u, v)| cover.contains(index.id(u, v).unwrap()));
            if !hit {
                return Err(StructureError::SideNotCovered { side, triangle });
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DenseMinOutcome {
    pub cut_size: usize,
    /// Independence number `t` of `g[S]`.
    pub independence: u64,
    /// `(|S| − 2t)(n − |S|)`, possibly negative.
    pub threshold: i64,
    /// `|[S,S̄]| <= threshold`: the graph cannot be a minimal violator of
    /// the bipartization bound.
    pub refutes_minimality: bool,
}

/// Cut filter derived from the independence number of one side: a minimal
/// violator of the bipartization bound has
/// `|[S,S̄]| > (|S| − 2t)(n − |S|)` where `t` is the independence number of
/// `g[S]`. Thresholds below zero carry no information.
pub fn check_densemin(g: &Graph, s: VertexSet) -> Result<DenseMinOutcome, StructureError> {
    super::require_proper_subset(g, s)?;
    let (side, _) = g.induced_subgraph(s);
    let t = independence_number(&side)?;
    let cut = g.cut_size(s);
    let k = s.len() as i64;
    let threshold = (k - 2 * t as i64) * (g.n() as i64 - k);
    Ok(DenseMinOutcome {
        cut_size: cut,
        independence: t,
        threshold,
        refutes_minimality: cut as i64 <= threshold,
    })
}

/// Exact `alpha1` and `taub` for the whole graph and the two sides of a cut.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DenseBothValues {
    pub alpha1_whole: u64,
    pub taub_whole: u64,
    pub alpha1_side: u64,
    pub taub_side: u64,
    pub alpha1_rest: u64,
    pub taub_rest: u64,
}

impl DenseBothValues {
    pub fn solve(
        g: &Graph,
        s: VertexSet,
        maxcut_limit: usize,
    ) -> Result<DenseBothValues, StructureError> {
        let (side, _) = g.induced_subgraph(s);
        let (rest, _) = g.induced_subgraph(s.complement_in(g.n()));
        Ok(DenseBothValues {
            alpha1_whole: alpha1_exact(g).value,
            taub_whole: taub_exact_with_limit(g, maxcut_limit)?.value,
            alpha1_side: alpha1_exact(&side).value,
            taub_side: taub_exact_with_limit(&side, maxcut_limit)?.value,
            alpha1_rest: alpha1_exact(&rest).value,
            taub_rest: taub_exact_with_limit(&rest, maxcut_limit)?.value,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DenseBothOutcome {
    pub holds: bool,
    /// Scaled (×2) slack of `|A| + τ_B(G) <= (α+τ_B)(G[S]) + (α+τ_B)(G[S̄])
    /// + ½|[S,S̄]| + |[S,S̄] ∩ A|`.
    pub scaled_slack: i64,
    pub cut_size: usize,
    pub cut_in_a: usize,
}

/// Cut subadditivity for `alpha1 + taub`, relative to a triangle-independent
/// set `a`. Both sides are doubled so the half-cut term stays integral.
///
/// The left side uses `|a|`, not `alpha1(g)`: splitting `a` across the cut
/// bounds `|a|` by `alpha1(g[S]) + alpha1(g[S̄]) + |[S,S̄] ∩ a|` for *any*
/// triangle-independent `a`, while the `alpha1(g)` form requires `a` to be a
/// largest such set (take one and the two statements coincide).
pub fn check_denseboth(
    g: &Graph,
    index: &EdgeIndex,
    s: VertexSet,
    a: &EdgeSet,
    values: &DenseBothValues,
) -> Result<DenseBothOutcome, StructureError> {
    super::require_proper_subset(g, s)?;
    if let Err(v) = validate_witness(g, index, InvariantKind::Alpha1, a) {
        return Err(StructureError::NotTriangleIndependent(v));
    }
    debug_assert!(a.len() as u64 <= values.alpha1_whole);
    let cut = g.cut_edges(index, s);
    let cut_size = cut.len();
    let cut_in_a = cut.intersection_len(a);
    let lhs = 2 * (a.len() as u64 + values.taub_whole) as i64;
    let rhs = 2 * (values.alpha1_side + values.taub_side) as i64
        + 2 * (values.alpha1_rest + values.taub_rest) as i64
        + cut_size as i64
        + 2 * cut_in_a as i64;
    Ok(DenseBothOutcome {
        holds: lhs <= rhs,
        scaled_slack: rhs - lhs,
        cut_size,
        cut_in_a,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrifreeBoundOutcome {
    pub holds: bool,
    /// `taub · n²`
    pub scaled_taub: i64,
    /// `m·n² − 4m²`
    pub scaled_limit: i64,
}

/// For a triangle-free graph, `taub <= m − 4m²/n²`, checked as
/// `taub·n² <= m·n² − 4m²` in exact integers (the un-floored, stronger
/// form).
pub fn check_trifree_bound(g: &Graph, taub: u64) -> Result<TrifreeBoundOutcome, StructureError> {
    if g.n() == 0 {
        return Err(StructureError::EmptyGraph);
    }
    if let Some(&t) = g.triangles().first() {
        return Err(StructureError::HasTriangles(t));
    }
    let n2 = (g.n() * g.n()) as i64;
    let m = g.edge_count() as i64;
    let scaled_taub = taub as i64 * n2;
    let scaled_limit = m * n2 - 4 * m * m;
    Ok(TrifreeBoundOutcome {
        holds: scaled_taub <= scaled_limit,
        scaled_taub,
        scaled_limit,
    })
}
