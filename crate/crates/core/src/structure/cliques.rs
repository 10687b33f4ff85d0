//! Maximal clique enumeration and the clique-extension requirement.

use super::StructureError;
use crate::graph::{BitIter, Graph, VertexSet};

/// All maximal cliques, each exactly once, in ascending bit-pattern order.
/// Pivoting over bit-vector candidate sets; singletons count for isolated
/// vertices.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if g.n() == 0 {
        return out;
    }
    expand(g, 0, g.vertices().0, 0, &mut out);
    out.sort_unstable();
    out
}

fn expand(g: &Graph, r: u64, mut p: u64, mut x: u64, out: &mut Vec<VertexSet>) {
    if p == 0 && x == 0 {
        out.push(VertexSet(r));
        return;
    }
    // pivot with the most candidate neighbors, lowest id on ties
    let mut pivot = usize::MAX;
    let mut best = 0u32;
    for u in BitIter(p | x) {
        let d = (p & g.neighbors(u)).count_ones();
        if pivot == usize::MAX || d > best {
            pivot = u;
            best = d;
        }
    }
    let candidates = p & !g.neighbors(pivot);
    for v in BitIter(candidates) {
        let nv = g.neighbors(v);
        expand(g, r | 1 << v, p & nv, x & nv, out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// Whether a maximal clique `S` extends to an induced `K_{|S|+1}^-`: some
/// outside vertex adjacent to all but one vertex of `S`. Maximality caps the
/// overlap at `|S| - 1`, so any such vertex certifies the extension. A
/// minimal violator of the bipartization bound extends every maximal clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliqueExtension {
    Extends { vertex: usize },
    Fails {
        /// Largest `|N(v) ∩ S|` over outside vertices.
        max_overlap: usize,
        /// Outside vertices attaining it, ascending.
        vertices: Vec<usize>,
    },
}

pub fn clique_extension_check(
    g: &Graph,
    s: VertexSet,
) -> Result<CliqueExtension, StructureError> {
    if !s.is_subset_of(g.vertices()) || s.is_empty() {
        return Err(StructureError::NotProperSubset);
    }
    for u in s.iter() {
        let missing = s.0 & !g.neighbors(u) & !(1 << u);
        if let Some(v) = BitIter(missing).next() {
            return Err(StructureError::NotClique { u, v });
        }
    }
    if s == g.vertices() {
        return Err(StructureError::CliqueIsWholeGraph);
    }
    let outside = s.complement_in(g.n());
    if let Some(vertex) = outside.iter().find(|&v| s.0 & !g.neighbors(v) == 0) {
        return Err(StructureError::NotMaximalClique { vertex });
    }
    let need = s.len() - 1;
    let mut max_overlap = 0;
    let mut argmax = Vec::new();
    for v in outside.iter() {
        let overlap = (g.neighbors(v) & s.0).count_ones() as usize;
        if overlap >= need {
            return Ok(CliqueExtension::Extends { vertex: v });
        }
        if overlap > max_overlap {
            max_overlap = overlap;
            argmax.clear();
        }
        if overlap == max_overlap {
            argmax.push(v);
        }
    }
    Ok(CliqueExtension::Fails {
        max_overlap,
        vertices: argmax,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn cliques_of_fixtures() {
        assert_eq!(
            maximal_cliques(&Graph::complete(4).unwrap()),
            vec![VertexSet::full(4)]
        );

        let c5 = Graph::cycle(5).unwrap();
        let cliques = maximal_cliques(&c5);
        assert_eq!(cliques.len(), 5);
        for c in &cliques {
            assert_eq!(c.len(), 2); // triangle-free: maximal cliques are edges
        }

        // two triangles sharing the edge (0,1)
        let cliques = maximal_cliques(&diamond());
        assert_eq!(
            cliques,
            vec![VertexSet::from_iter([0, 1, 2]), VertexSet::from_iter([0, 1, 3])]
        );

        assert_eq!(maximal_cliques(&Graph::empty(0).unwrap()), vec![]);
        assert_eq!(
            maximal_cliques(&Graph::empty(3).unwrap()),
            (0..3).map(VertexSet::singleton).collect::<Vec<_>>()
        );
    }

    #[test]
    fn cliques_match_naive_enumeration() {
        for n in [4usize, 5, 6] {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let total = 1u64 << pairs.len();
            let step = if n <= 5 { 7 } else { 211 };
            let mut mask = 1;
            while mask < total {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                let mut naive = Vec::new();
                'subsets: for sub in 1u64..1 << n {
                    let s = VertexSet(sub);
                    for u in s.iter() {
                        if s.0 & !g.neighbors(u) & !(1 << u) != 0 {
                            continue 'subsets; // not a clique
                        }
                    }
                    for v in s.complement_in(n).iter() {
                        if s.0 & !g.neighbors(v) == 0 {
                            continue 'subsets; // extendable
                        }
                    }
                    naive.push(s);
                }
                naive.sort_unstable();
                assert_eq!(maximal_cliques(&g), naive, "n={n} mask={mask}");
                mask += step;
            }
        }
    }

    #[test]
    fn extension_via_degree_two_vertex() {
        // in the diamond, the triangle {0,1,2} extends through vertex 3
        let g = diamond();
        assert_eq!(
            clique_extension_check(&g, VertexSet::from_iter([0, 1, 2])).unwrap(),
            CliqueExtension::Extends { vertex: 3 }
        );
    }

    #[test]
    fn disjoint_triangles_fail_to_extend() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap();
        match clique_extension_check(&g, VertexSet::from_iter([0, 1, 2])).unwrap() {
            CliqueExtension::Fails {
                max_overlap,
                vertices,
            } => {
                assert_eq!(max_overlap, 0);
                assert_eq!(vertices, vec![3, 4, 5]);
            }
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn k6_minus_perfect_matching_extends_everywhere() {
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                edges.push((u, v));
            }
        }
        let matching = [(0, 1), (2, 3), (4, 5)];
        let kept: Vec<_> = edges
            .into_iter()
            .filter(|e| !matching.contains(e))
            .collect();
        let g = Graph::from_edges(6, &kept).unwrap();
        for clique in maximal_cliques(&g) {
            assert!(matches!(
                clique_extension_check(&g, clique).unwrap(),
                CliqueExtension::Extends { .. }
            ));
        }
    }

    #[test]
    fn extension_preconditions() {
        let g = Graph::complete(4).unwrap();
        assert!(matches!(
            clique_extension_check(&g, VertexSet::full(4)),
            Err(StructureError::CliqueIsWholeGraph)
        ));
        assert!(matches!(
            clique_extension_check(&g, VertexSet::from_iter([0, 1])),
            Err(StructureError::NotMaximalClique { .. })
        ));
        let c5 = Graph::cycle(5).unwrap();
        assert!(matches!(
            clique_extension_check(&c5, VertexSet::from_iter([0, 2])),
            Err(StructureError::NotClique { u: 0, v: 2 })
        ));
    }
}
