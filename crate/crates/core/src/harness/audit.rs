//! Full structural dump for one graph: invariants with witnesses, the
//! structure profile, and the per-singleton cut-subadditivity slacks.

use std::fmt;

use super::{compute_record, HarnessError, VerificationRecord};
use crate::edges::EdgeIndex;
use crate::graph::{Graph, VertexSet};
use crate::solve::{
    alpha1_exact, tau_exact, taub_exact_with_limit, validate_witness, InvariantKind,
};
use crate::structure::{
    check_denseboth, check_peel, structure_profile, CliqueExtension, DenseBothValues,
    DenseCutStatus, PeelValues, StructureProfile,
};

#[derive(Debug)]
pub struct AuditReport {
    pub record: VerificationRecord,
    pub profile: StructureProfile,
    pub alpha1_witness: Vec<(usize, usize)>,
    pub tau_witness: Vec<(usize, usize)>,
    pub taub_witness: Vec<(usize, usize)>,
    pub bipartition: VertexSet,
    /// Peel slack of `S = {v}` per vertex.
    pub singleton_peel: Vec<(usize, i64)>,
    /// Doubled denseboth slack of `S = {v}` per vertex, with `A` the alpha1
    /// witness above.
    pub singleton_denseboth: Vec<(usize, i64)>,
}

pub fn audit_graph(
    g: &Graph,
    graph6: String,
    maxcut_limit: usize,
) -> Result<AuditReport, HarnessError> {
    let record = compute_record(g, graph6, maxcut_limit)?;
    let profile = structure_profile(g);
    let index = EdgeIndex::new(g);

    let alpha1 = alpha1_exact(g);
    let tau = tau_exact(g);
    let taub = taub_exact_with_limit(g, maxcut_limit)?;
    for (kind, witness) in [
        (InvariantKind::Alpha1, &alpha1.witness),
        (InvariantKind::Tau, &tau.witness),
        (InvariantKind::TauB, &taub.witness),
    ] {
        assert!(
            validate_witness(g, &index, kind, witness).is_ok(),
            "{} witness failed validation",
            kind.name()
        );
    }
    let pairs_of = |w: &crate::edges::EdgeSet| w.iter().map(|id| index.pair(id)).collect();

    let mut singleton_peel = Vec::new();
    let mut singleton_denseboth = Vec::new();
    if g.n() >= 2 {
        for v in 0..g.n() {
            let s = VertexSet::singleton(v);
            let (rest, _) = g.induced_subgraph(s.complement_in(g.n()));
            let peel = check_peel(
                g,
                s,
                &PeelValues {
                    alpha1_whole: alpha1.value,
                    tau_whole: tau.value,
                    alpha1_side: 0,
                    tau_side: 0,
                    alpha1_rest: alpha1_exact(&rest).value,
                    tau_rest: tau_exact(&rest).value,
                },
            )
            .expect("singleton is a proper subset");
            singleton_peel.push((v, peel.slack));

            let both = check_denseboth(
                g,
                &index,
                s,
                &alpha1.witness,
                &DenseBothValues {
                    alpha1_whole: alpha1.value,
                    taub_whole: taub.value,
                    alpha1_side: 0,
                    taub_side: 0,
                    alpha1_rest: alpha1_exact(&rest).value,
                    taub_rest: taub_exact_with_limit(&rest, maxcut_limit)?.value,
                },
            )
            .expect("singleton is a proper subset");
            singleton_denseboth.push((v, both.scaled_slack));
        }
    }

    Ok(AuditReport {
        record,
        profile,
        alpha1_witness: pairs_of(&alpha1.witness),
        tau_witness: pairs_of(&tau.witness),
        taub_witness: pairs_of(&taub.witness),
        bipartition: taub.bipartition.expect("taub always certifies a side"),
        singleton_peel,
        singleton_denseboth,
    })
}

fn write_pairs(f: &mut fmt::Formatter<'_>, pairs: &[(usize, usize)]) -> fmt::Result {
    if pairs.is_empty() {
        return write!(f, "-");
    }
    for (i, (u, v)) in pairs.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        write!(f, "({u},{v})")?;
    }
    Ok(())
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.record;
        writeln!(f, "graph6: {}", r.graph6)?;
        writeln!(f, "n: {}  m: {}", r.n, r.m)?;
        write!(f, "alpha1: {}  witness: ", r.alpha1)?;
        write_pairs(f, &self.alpha1_witness)?;
        writeln!(f)?;
        write!(f, "tau: {}  witness: ", r.tau)?;
        write_pairs(f, &self.tau_witness)?;
        writeln!(f)?;
        write!(f, "taub: {}  witness: ", r.taub)?;
        write_pairs(f, &self.taub_witness)?;
        writeln!(f, "  bipartition: {:?}", self.bipartition)?;
        writeln!(f, "slack_egt: {}  slack_bip: {}", r.slack_egt, r.slack_bip)?;
        writeln!(f, "flags: {}", r.flags)?;
        let p = &self.profile;
        writeln!(
            f,
            "triangular: {}  min_degree: {}  mindeg_pass: {}",
            p.is_triangular, p.min_degree, p.passes_mindeg_filter
        )?;
        match p.induced_k4_minus {
            None => writeln!(f, "induced_k4_minus: none")?,
            Some(w) => writeln!(
                f,
                "induced_k4_minus: {:?} (missing edge ({},{}))",
                w.vertices(),
                w.nonadjacent.0,
                w.nonadjacent.1
            )?,
        }
        match &p.dense_cut_status {
            DenseCutStatus::VerifiedAll => writeln!(f, "dense_cuts: verified_all")?,
            DenseCutStatus::SkippedTooLarge => writeln!(f, "dense_cuts: skipped_too_large")?,
            DenseCutStatus::RefutedByCut(c) => writeln!(
                f,
                "dense_cuts: refuted_by_cut S={:?} (2*cut {} <= {})",
                c.s, c.scaled_cut, c.threshold
            )?,
        }
        writeln!(f, "maximal_cliques: {}", p.clique_extensions.len())?;
        for (clique, status) in &p.clique_extensions {
            match status {
                CliqueExtension::Extends { vertex } => {
                    writeln!(f, "  {clique:?}: extends via {vertex}")?
                }
                CliqueExtension::Fails {
                    max_overlap,
                    vertices,
                } => writeln!(
                    f,
                    "  {clique:?}: fails (max overlap {max_overlap} at {vertices:?})"
                )?,
            }
        }
        write!(f, "singleton_peel_slack:")?;
        for (v, slack) in &self.singleton_peel {
            write!(f, " v{v}={slack}")?;
        }
        writeln!(f)?;
        write!(f, "singleton_denseboth_slack_x2:")?;
        for (v, slack) in &self.singleton_denseboth {
            write!(f, " v{v}={slack}")?;
        }
        writeln!(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solve::DEFAULT_MAXCUT_LIMIT;

    #[test]
    fn audit_of_k4_composes_component_results() {
        let g = Graph::complete(4).unwrap();
        let a = audit_graph(&g, "C~".into(), DEFAULT_MAXCUT_LIMIT).unwrap();
        assert!(a.profile.is_triangular);
        assert!(a.profile.passes_mindeg_filter);
        assert!(!a.profile.has_induced_k4_minus());
        assert_eq!((a.record.slack_egt, a.record.slack_bip), (0, 0));
        assert_eq!(a.singleton_peel.len(), 4);
        // peel for S={v} in K4: 4 <= 0 + 2 + 3
        for &(_, slack) in &a.singleton_peel {
            assert_eq!(slack, 1);
        }
        let text = a.to_string();
        assert!(text.contains("dense_cuts: verified_all"));
        assert!(text.contains("flags: sharp_egt|sharp_bip"));
    }

    #[test]
    fn audit_of_c5_shows_refuting_cut() {
        let g = Graph::cycle(5).unwrap();
        let g6 = crate::graph6::encode_graph6(&g).unwrap();
        let a = audit_graph(&g, g6, DEFAULT_MAXCUT_LIMIT).unwrap();
        assert!(!a.profile.is_triangular);
        let text = a.to_string();
        assert!(text.contains("refuted_by_cut S={0}"));
        // peel slack 0 for every singleton of C5 by symmetry
        for &(_, slack) in &a.singleton_peel {
            assert_eq!(slack, 0);
        }
    }

    #[test]
    fn audit_of_diamond_reports_witness_quadruple() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let g6 = crate::graph6::encode_graph6(&g).unwrap();
        let a = audit_graph(&g, g6, DEFAULT_MAXCUT_LIMIT).unwrap();
        assert!(a.profile.has_induced_k4_minus());
        let text = a.to_string();
        assert!(text.contains("induced_k4_minus: [0, 1, 2, 3]"));
    }
}
