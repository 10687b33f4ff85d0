//! Maximum independent set by branch and bound.
//!
//! Shared engine for the triangle-independent solver (independent sets of the
//! conflict graph) and the vertex independence number. Branching pivots on
//! the highest-degree candidate, include-branch first; the bound is a greedy
//! clique cover of the candidate set. All tie-breaks are by lowest id, so the
//! witness is deterministic.

use super::matrix::{clear_bit, count, count_and, iter_bits, test_bit, AdjMatrix};

pub(crate) struct MisResult {
    pub size: usize,
    pub witness: Vec<usize>,
    pub nodes: u64,
}

pub(crate) fn max_independent_set(adj: &AdjMatrix) -> MisResult {
    let n = adj.n();
    if n == 0 {
        return MisResult {
            size: 0,
            witness: Vec::new(),
            nodes: 0,
        };
    }
    let mut search = Search {
        adj,
        words: adj.words(),
        best: greedy_independent_set(adj),
        cur: Vec::with_capacity(n),
        nodes: 0,
        bufs: vec![vec![0u64; adj.words()]; n + 2],
        cover: Vec::new(),
    };
    search.best.sort_unstable();
    search.bufs[0] = adj.full();
    search.rec(0);
    let mut witness = search.best;
    witness.sort_unstable();
    MisResult {
        size: witness.len(),
        witness,
        nodes: search.nodes,
    }
}

/// Deterministic warm start: repeatedly take the lowest-id vertex of minimum
/// degree within the remaining candidates.
fn greedy_independent_set(adj: &AdjMatrix) -> Vec<usize> {
    let mut remaining = adj.full();
    let mut out = Vec::new();
    while count(&remaining) > 0 {
        let mut best_v = usize::MAX;
        let mut best_deg = usize::MAX;
        for v in iter_bits(&remaining) {
            let deg = count_and(adj.row(v), &remaining);
            if deg < best_deg {
                best_deg = deg;
                best_v = v;
                if deg == 0 {
                    break;
                }
            }
        }
        out.push(best_v);
        for (slot, row) in remaining.iter_mut().zip(adj.row(best_v)) {
            *slot &= !row;
        }
        clear_bit(&mut remaining, best_v);
    }
    out
}

struct Search<'a> {
    adj: &'a AdjMatrix,
    words: usize,
    best: Vec<usize>,
    cur: Vec<usize>,
    nodes: u64,
    bufs: Vec<Vec<u64>>, // candidate set per depth
    cover: Vec<u64>,     // clique-cover scratch: common-neighborhood per clique
}

impl Search<'_> {
    fn rec(&mut self, depth: usize) {
        self.nodes += 1;
        let pcount = count(&self.bufs[depth]);
        if self.cur.len() + pcount <= self.best.len() {
            return;
        }
        // pivot: maximum degree within the candidates, lowest id on ties
        let mut pivot = usize::MAX;
        let mut pivot_deg = 0;
        for v in iter_bits(&self.bufs[depth]) {
            let deg = count_and(self.adj.row(v), &self.bufs[depth]);
            if pivot == usize::MAX || deg > pivot_deg {
                pivot = v;
                pivot_deg = deg;
            }
        }
        if pivot_deg == 0 {
            // candidates are pairwise non-adjacent: take them all
            let mut sol = self.cur.clone();
            sol.extend(iter_bits(&self.bufs[depth]));
            if sol.len() > self.best.len() {
                self.best = sol;
            }
            return;
        }
        if self.cur.len() < self.best.len() {
            let slack = self.best.len() - self.cur.len();
            if !self.cover_exceeds(depth, slack) {
                return; // clique cover proves no strict improvement below
            }
        }

        // include the pivot
        {
            let (head, tail) = self.bufs.split_at_mut(depth + 1);
            let p = &head[depth];
            let next = &mut tail[0];
            for w in 0..self.words {
                next[w] = p[w] & !self.adj.row(pivot)[w];
            }
            clear_bit(next, pivot);
        }
        self.cur.push(pivot);
        self.rec(depth + 1);
        self.cur.pop();

        // exclude the pivot
        {
            let (head, tail) = self.bufs.split_at_mut(depth + 1);
            let next = &mut tail[0];
            next.copy_from_slice(&head[depth]);
            clear_bit(next, pivot);
        }
        self.rec(depth + 1);
    }

    /// Greedy clique cover of the candidates at `depth`. Returns whether the
    /// cover needs more than `limit` cliques; at most `limit` cliques bound
    /// the independent set, which prunes the node.
    fn cover_exceeds(&mut self, depth: usize, limit: usize) -> bool {
        let words = self.words;
        self.cover.clear();
        let mut cliques = 0usize;
        for v in iter_bits(&self.bufs[depth]) {
            let mut placed = false;
            for c in 0..cliques {
                if test_bit(&self.cover[c * words..(c + 1) * words], v) {
                    let row = self.adj.row(v);
                    for (w, slot) in self.cover[c * words..(c + 1) * words]
                        .iter_mut()
                        .enumerate()
                    {
                        *slot &= row[w];
                    }
                    placed = true;
                    break;
                }
            }
            if !placed {
                cliques += 1;
                if cliques > limit {
                    return true;
                }
                self.cover.extend_from_slice(self.adj.row(v));
            }
        }
        false
    }
}
