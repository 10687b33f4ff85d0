//! Minimum triangle edge cover by branch and bound.
//!
//! Every triangle must lose at least one edge. The search picks an uncovered
//! triangle of minimum total edge degree and branches over its edges: the
//! lowest usable edge is first deleted, then excluded. Exclusions persist
//! down the subtree, and a triangle left with a single usable edge forces
//! that edge, so the triangle is effectively expanded into at most three
//! branches. The bound is the larger of a greedy edge-disjoint triangle
//! packing and a covering-ratio bound.

use crate::edges::EdgeIndex;
use crate::graph::Graph;

use super::{SolveResult, SolverKind};

pub fn tau_exact(g: &Graph) -> SolveResult {
    let index = EdgeIndex::new(g);
    let triangles = g.triangles();
    if triangles.is_empty() {
        return SolveResult {
            value: 0,
            witness: index.empty_set(),
            nodes_explored: 0,
            solver_kind: SolverKind::BranchAndBound,
            bipartition: None,
        };
    }

    let tri_edges: Vec<[u16; 3]> = triangles
        .iter()
        .map(|t| {
            // pair order (a,b) < (a,c) < (b,c) matches ascending edge ids
            let [p, q, r] = t.pairs();
            [
                index.id(p.0, p.1).unwrap() as u16,
                index.id(q.0, q.1).unwrap() as u16,
                index.id(r.0, r.1).unwrap() as u16,
            ]
        })
        .collect();
    let m = index.edge_count();
    let mut edge_tris: Vec<Vec<u32>> = vec![Vec::new(); m];
    for (t, ids) in tri_edges.iter().enumerate() {
        for &e in ids {
            edge_tris[e as usize].push(t as u32);
        }
    }

    let tri_count = tri_edges.len();
    let mut search = Search {
        tri_edges: &tri_edges,
        edge_tris: &edge_tris,
        covered: vec![0u32; tri_count],
        forbidden_tri: vec![0u32; tri_count],
        uncovered: tri_count,
        edge_deg: edge_tris.iter().map(|v| v.len() as u32).collect(),
        edge_forbidden: vec![false; m],
        chosen: Vec::new(),
        trail: Vec::new(),
        best: Vec::new(),
        nodes: 0,
        pack_epoch: vec![0u32; m],
        epoch: 0,
    };

    // warm start: greedily delete the edge covering the most open triangles
    while search.uncovered > 0 {
        let e = (0..m)
            .filter(|&e| !search.chosen_contains(e))
            .max_by_key(|&e| (search.edge_deg[e], std::cmp::Reverse(e)))
            .expect("an uncovered triangle always has edges");
        search.include(e as u16);
    }
    search.best = search.chosen.clone();
    search.undo_to(0);

    search.rec();

    let mut witness_ids = search.best.clone();
    witness_ids.sort_unstable();
    SolveResult {
        value: witness_ids.len() as u64,
        witness: index.set_from_ids(witness_ids.iter().map(|&e| e as usize)),
        nodes_explored: search.nodes,
        solver_kind: SolverKind::BranchAndBound,
        bipartition: None,
    }
}

enum TrailOp {
    Included(u16),
    Forbidden(u16),
}

struct Search<'a> {
    tri_edges: &'a [[u16; 3]],
    edge_tris: &'a [Vec<u32>],
    covered: Vec<u32>,       // chosen edges covering each triangle
    forbidden_tri: Vec<u32>, // forbidden edges of each triangle
    uncovered: usize,
    edge_deg: Vec<u32>, // open triangles through each edge
    edge_forbidden: Vec<bool>,
    chosen: Vec<u16>,
    trail: Vec<TrailOp>,
    best: Vec<u16>,
    nodes: u64,
    pack_epoch: Vec<u32>,
    epoch: u32,
}

impl Search<'_> {
    fn chosen_contains(&self, e: usize) -> bool {
        self.chosen.iter().any(|&c| c as usize == e)
    }

    fn include(&mut self, e: u16) {
        self.chosen.push(e);
        self.trail.push(TrailOp::Included(e));
        for &t in &self.edge_tris[e as usize] {
            self.covered[t as usize] += 1;
            if self.covered[t as usize] == 1 {
                self.uncovered -= 1;
                for &f in &self.tri_edges[t as usize] {
                    self.edge_deg[f as usize] -= 1;
                }
            }
        }
    }

    fn undo_include(&mut self, e: u16) {
        self.chosen.pop();
        for &t in &self.edge_tris[e as usize] {
            self.covered[t as usize] -= 1;
            if self.covered[t as usize] == 0 {
                self.uncovered += 1;
                for &f in &self.tri_edges[t as usize] {
                    self.edge_deg[f as usize] += 1;
                }
            }
        }
    }

    /// Exclude `e` from the solution and force any triangle this leaves with
    /// a single usable edge. Returns false when some open triangle has no
    /// usable edges left.
    fn forbid(&mut self, e: u16) -> bool {
        self.edge_forbidden[e as usize] = true;
        self.trail.push(TrailOp::Forbidden(e));
        let mut pending: Vec<u32> = Vec::new();
        let mut dead = false;
        for &t in &self.edge_tris[e as usize] {
            self.forbidden_tri[t as usize] += 1;
            if self.covered[t as usize] == 0 {
                match self.forbidden_tri[t as usize] {
                    3 => dead = true,
                    2 => pending.push(t),
                    _ => {}
                }
            }
        }
        if dead {
            return false;
        }
        while let Some(t) = pending.pop() {
            if self.covered[t as usize] > 0 {
                continue;
            }
            let forced = self.tri_edges[t as usize]
                .iter()
                .copied()
                .find(|&f| !self.edge_forbidden[f as usize])
                .expect("an open triangle with two forbidden edges has one left");
            self.include(forced);
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                TrailOp::Included(e) => self.undo_include(e),
                TrailOp::Forbidden(e) => {
                    self.edge_forbidden[e as usize] = false;
                    for &t in &self.edge_tris[e as usize] {
                        self.forbidden_tri[t as usize] -= 1;
                    }
                }
            }
        }
    }

    /// max(greedy edge-disjoint packing, ceil(open / best usable edge)).
    fn lower_bound(&mut self) -> usize {
        self.epoch += 1;
        let mut packed = 0usize;
        for (t, ids) in self.tri_edges.iter().enumerate() {
            if self.covered[t] > 0 {
                continue;
            }
            if ids.iter().all(|&e| self.pack_epoch[e as usize] != self.epoch) {
                packed += 1;
                for &e in ids {
                    self.pack_epoch[e as usize] = self.epoch;
                }
            }
        }
        let max_deg = self
            .edge_deg
            .iter()
            .enumerate()
            .filter(|&(e, _)| !self.edge_forbidden[e])
            .map(|(_, &d)| d as usize)
            .max()
            .unwrap_or(0);
        let ratio = if max_deg == 0 {
            // open triangles but no usable edges: dead branch
            usize::MAX / 2
        } else {
            self.uncovered.div_ceil(max_deg)
        };
        packed.max(ratio)
    }

    fn rec(&mut self) {
        self.nodes += 1;
        if self.uncovered == 0 {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        }
        if self.chosen.len() + 1 >= self.best.len() {
            return;
        }
        let lb = self.lower_bound();
        if self.chosen.len() + lb >= self.best.len() {
            return;
        }

        // pick the open triangle with minimum total edge degree,
        // lexicographically first on ties
        let mut target = usize::MAX;
        let mut target_deg = u32::MAX;
        for (t, ids) in self.tri_edges.iter().enumerate() {
            if self.covered[t] > 0 {
                continue;
            }
            let deg: u32 = ids.iter().map(|&e| self.edge_deg[e as usize]).sum();
            if deg < target_deg {
                target_deg = deg;
                target = t;
            }
        }
        // an open triangle always keeps a usable edge: once its second edge
        // is excluded the third is force-included, covering it
        let e = self.tri_edges[target]
            .iter()
            .copied()
            .find(|&e| !self.edge_forbidden[e as usize])
            .expect("open triangle has a usable edge");

        let mark = self.trail.len();
        self.include(e);
        self.rec();
        self.undo_to(mark);
        if self.forbid(e) {
            self.rec();
        }
        self.undo_to(mark);
    }
}
