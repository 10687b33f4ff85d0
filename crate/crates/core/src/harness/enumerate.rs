//! Fallback input source: every labeled simple graph on `n` vertices, by
//! edge-subset mask in increasing numeric order. No isomorphism rejection —
//! canonical catalogs come from graph6 files when available.

use super::HarnessError;
use crate::graph::Graph;

/// 2^21 graphs at n = 7 is the practical ceiling for the fallback.
pub const LABELED_ENUMERATION_LIMIT: usize = 7;

pub fn labeled_enumeration(n: usize) -> Result<impl Iterator<Item = Graph>, HarnessError> {
    if n > LABELED_ENUMERATION_LIMIT {
        return Err(HarnessError::EnumerationTooLarge {
            n,
            limit: LABELED_ENUMERATION_LIMIT,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    Ok((0..total).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).expect("mask within capacity")
    }))
}
