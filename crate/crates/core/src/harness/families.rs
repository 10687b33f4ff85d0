//! Sweep of the sharp families `K_{r1,r1} ∨ … ∨ K_{rt,rt}`: every member
//! must sit exactly on the `4(alpha1 + tau) = n²` line.

use super::{compute_record, HarnessError, VerificationRecord};
use crate::graph::Graph;

/// All partitions of `total` into positive non-increasing parts, largest
/// first: `[k], [k-1,1], …, [1,…,1]`.
pub fn partitions(total: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, total, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone)]
pub struct FamilyRecord {
    /// Block sizes `r1 >= … >= rt`.
    pub blocks: Vec<usize>,
    pub record: VerificationRecord,
}

#[derive(Debug)]
pub struct FamilySweep {
    pub families: Vec<FamilyRecord>,
    /// Every family graph had `slack_egt == 0`, as the sharpness
    /// characterization demands; a false value is a solver bug.
    pub all_sharp: bool,
}

/// Enumerate every block multiset with `Σ 2·ri <= max_n` (ordered by total
/// size, then partition order) and verify each family graph.
pub fn family_sweep(max_n: usize, maxcut_limit: usize) -> Result<FamilySweep, HarnessError> {
    let mut families = Vec::new();
    let mut all_sharp = true;
    for half in 1..=max_n / 2 {
        for blocks in partitions(half) {
            let g = Graph::sharpness_family(&blocks)?;
            let graph6 = crate::graph6::encode_graph6(&g).expect("family within capacity");
            let record = compute_record(&g, graph6, maxcut_limit)?;
            all_sharp &= record.slack_egt == 0;
            families.push(FamilyRecord { blocks, record });
        }
    }
    Ok(FamilySweep {
        families,
        all_sharp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solve::DEFAULT_MAXCUT_LIMIT;

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(1), vec![vec![1]]);
        assert_eq!(partitions(2), vec![vec![2], vec![1, 1]]);
        assert_eq!(partitions(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(10).len(), 42);
    }

    #[test]
    fn partitions_are_non_increasing_and_sum_correctly() {
        for total in 1..=8 {
            for p in partitions(total) {
                assert_eq!(p.iter().sum::<usize>(), total);
                assert!(p.windows(2).all(|w| w[0] >= w[1]));
            }
        }
    }

    #[test]
    fn sweep_up_to_eight_vertices_is_all_sharp() {
        let sweep = family_sweep(8, DEFAULT_MAXCUT_LIMIT).unwrap();
        // partitions of 1..=4: 1 + 2 + 3 + 5 = 11 families
        assert_eq!(sweep.families.len(), 11);
        assert!(sweep.all_sharp);
        for f in &sweep.families {
            assert_eq!(f.record.slack_egt, 0, "blocks {:?}", f.blocks);
            assert_eq!(f.record.n, 2 * f.blocks.iter().sum::<usize>());
        }
    }

    #[test]
    fn singleton_block_families_are_complete_bipartite() {
        let sweep = family_sweep(6, DEFAULT_MAXCUT_LIMIT).unwrap();
        let k33 = sweep
            .families
            .iter()
            .find(|f| f.blocks == vec![3])
            .unwrap();
        assert_eq!((k33.record.alpha1, k33.record.tau, k33.record.taub), (9, 0, 0));
        let k4 = sweep
            .families
            .iter()
            .find(|f| f.blocks == vec![1, 1])
            .unwrap();
        assert_eq!(k4.record.graph6, "C~");
    }
}
