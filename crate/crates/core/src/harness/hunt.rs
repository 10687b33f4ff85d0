//! Counterexample-candidate hunting: screen graphs through the structural
//! prerequisites a minimal violator must satisfy, then fully verify the
//! survivors. Filters run cheapest first and solvers last.

use std::time::Instant;

use super::verify::{make_pool, run_batch, OracleCheck, SourceItem, WorkItem, BATCH_SIZE};
use super::{
    compute_record, HarnessError, RunManifest, Variant, VerificationRecord, ViolationReport,
};
use crate::graph::Graph;
use crate::solve::{brute_force, InvariantKind, SolverError, DEFAULT_MAXCUT_LIMIT};
use crate::structure::{
    clique_extension_check, dense_cut_audit, has_induced_k4_minus, is_triangular, maximal_cliques,
    mindeg_filter, CliqueExtension, DenseCutMode, DenseCutOutcome,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HuntFilter {
    /// Keep graphs with `2δ > n`.
    MinDeg,
    /// Keep graphs where every edge lies on a triangle.
    Triangular,
    /// Keep graphs containing an induced `K4^-` (bipartization variant).
    K4Minus,
    /// Keep graphs whose every maximal proper clique extends to an induced
    /// `K_{|S|+1}^-` (bipartization variant).
    CliqueExtension,
    /// Keep graphs whose sampled cuts are all strictly dense.
    DenseCutSampled,
}

/// Fixed cheapest-first execution order.
const PIPELINE: [HuntFilter; 5] = [
    HuntFilter::MinDeg,
    HuntFilter::Triangular,
    HuntFilter::K4Minus,
    HuntFilter::CliqueExtension,
    HuntFilter::DenseCutSampled,
];

impl HuntFilter {
    pub fn name(self) -> &'static str {
        match self {
            HuntFilter::MinDeg => "mindeg",
            HuntFilter::Triangular => "triangular",
            HuntFilter::K4Minus => "k4minus",
            HuntFilter::CliqueExtension => "clique-extension",
            HuntFilter::DenseCutSampled => "dense-cut-sampled",
        }
    }

    pub fn parse(s: &str) -> Option<HuntFilter> {
        PIPELINE.iter().copied().find(|f| f.name() == s)
    }

    /// Default filter set per hunted bound: the triangle-cover results give
    /// mindeg/triangular/dense cuts, the bipartization results give
    /// k4minus/clique-extension. Hunting both applies no structural filter
    /// by default.
    pub fn defaults_for(variant: Variant) -> Vec<HuntFilter> {
        match variant {
            Variant::Egt => vec![
                HuntFilter::MinDeg,
                HuntFilter::Triangular,
                HuntFilter::DenseCutSampled,
            ],
            Variant::Bip => vec![HuntFilter::K4Minus, HuntFilter::CliqueExtension],
            Variant::Both => Vec::new(),
        }
    }

    fn keeps(self, g: &Graph, sampled_cuts: usize) -> bool {
        match self {
            HuntFilter::MinDeg => mindeg_filter(g),
            HuntFilter::Triangular => is_triangular(g),
            HuntFilter::K4Minus => has_induced_k4_minus(g).is_some(),
            HuntFilter::CliqueExtension => maximal_cliques(g)
                .into_iter()
                .filter(|&c| c != g.vertices())
                .all(|c| {
                    matches!(
                        clique_extension_check(g, c),
                        Ok(CliqueExtension::Extends { .. })
                    )
                }),
            HuntFilter::DenseCutSampled => matches!(
                dense_cut_audit(
                    g,
                    DenseCutMode::Sampled {
                        max_cuts: sampled_cuts
                    }
                ),
                Ok(DenseCutOutcome::SampledClean { .. })
            ),
        }
    }
}

#[derive(Debug, Clone)]
pub struct HuntOptions {
    pub variant: Variant,
    pub filters: Vec<HuntFilter>,
    pub strict: bool,
    pub workers: usize,
    pub maxcut_limit: usize,
    /// Candidate cap for the sampled dense-cut filter.
    pub sampled_cuts: usize,
}

impl Default for HuntOptions {
    fn default() -> Self {
        HuntOptions {
            variant: Variant::Egt,
            filters: HuntFilter::defaults_for(Variant::Egt),
            strict: true,
            workers: 0,
            maxcut_limit: DEFAULT_MAXCUT_LIMIT,
            sampled_cuts: 512,
        }
    }
}

#[derive(Debug)]
pub struct HuntOutcome {
    /// Fully verified records of the graphs passing every filter, in input
    /// order.
    pub survivors: Vec<VerificationRecord>,
    /// Eliminated count per filter, in pipeline order.
    pub eliminated: Vec<(&'static str, u64)>,
    pub manifest: RunManifest,
    pub violations: Vec<ViolationReport>,
    pub skips: Vec<(u64, String)>,
}

enum Screened {
    Survivor(Result<VerificationRecord, SolverError>),
    Eliminated(usize), // pipeline slot
}

/// Screen a stream of graphs and verify the survivors.
pub fn hunt_graphs(
    mut items: impl Iterator<Item = SourceItem>,
    input_id: &str,
    opts: &HuntOptions,
) -> Result<HuntOutcome, HarnessError> {
    let started = Instant::now();
    let filters: Vec<HuntFilter> = PIPELINE
        .iter()
        .copied()
        .filter(|f| opts.filters.contains(f))
        .collect();
    let mut manifest = RunManifest::new("hunt", input_id);
    manifest.variant = opts.variant.name().to_string();
    manifest.strict = opts.strict;
    manifest.workers = opts.workers;
    manifest.filters = filters.iter().map(|f| f.name().to_string()).collect();

    let mut eliminated: Vec<(&'static str, u64)> =
        filters.iter().map(|f| (f.name(), 0u64)).collect();
    let mut survivors = Vec::new();
    let mut violations = Vec::new();
    let mut skips = Vec::new();
    let pool = make_pool(opts.workers);

    loop {
        let mut batch: Vec<WorkItem> = Vec::with_capacity(BATCH_SIZE);
        while batch.len() < BATCH_SIZE {
            match items.next() {
                None => break,
                Some(item) => match item? {
                    Ok(sg) => batch.push(WorkItem {
                        line: sg.line,
                        graph6: sg.text,
                        graph: sg.graph,
                    }),
                    Err(e) => {
                        if opts.strict {
                            return Err(HarnessError::Parse(e));
                        }
                        manifest.skipped += 1;
                        manifest.cursor = manifest.cursor.max(e.line);
                        skips.push((e.line, e.to_string()));
                    }
                },
            }
        }
        if batch.is_empty() {
            break;
        }

        let maxcut_limit = opts.maxcut_limit;
        let sampled_cuts = opts.sampled_cuts;
        let filters_ref = &filters;
        let results = run_batch(&pool, &batch, move |item| {
            for (slot, filter) in filters_ref.iter().enumerate() {
                if !filter.keeps(&item.graph, sampled_cuts) {
                    return Screened::Eliminated(slot);
                }
            }
            Screened::Survivor(compute_record(
                &item.graph,
                item.graph6.clone(),
                maxcut_limit,
            ))
        });

        for (item, screened) in batch.iter().zip(results) {
            match screened {
                Screened::Eliminated(slot) => {
                    eliminated[slot].1 += 1;
                    manifest.skipped += 1;
                }
                Screened::Survivor(Err(e)) => {
                    manifest.skipped += 1;
                    skips.push((item.line, e.to_string()));
                }
                Screened::Survivor(Ok(record)) => {
                    manifest.processed += 1;
                    if record.is_sharp(opts.variant) {
                        manifest.sharp += 1;
                    }
                    if record.is_near_sharp(opts.variant) {
                        manifest.near_sharp += 1;
                    }
                    if record.violates(opts.variant) {
                        manifest.violations += 1;
                        let oracle = oracle_check(&item.graph, &record);
                        violations.push(ViolationReport {
                            line: item.line,
                            record: record.clone(),
                            oracle,
                        });
                    }
                    survivors.push(record);
                }
            }
            manifest.cursor = manifest.cursor.max(item.line);
        }
    }

    manifest.wall_ms += started.elapsed().as_millis() as u64;
    Ok(HuntOutcome {
        survivors,
        eliminated,
        manifest,
        violations,
        skips,
    })
}

fn oracle_check(g: &Graph, record: &VerificationRecord) -> OracleCheck {
    for (kind, claimed) in [
        (InvariantKind::Alpha1, record.alpha1),
        (InvariantKind::Tau, record.tau),
        (InvariantKind::TauB, record.taub),
    ] {
        match brute_force(g, kind) {
            Ok(r) if r.value == claimed => {}
            Ok(_) => return OracleCheck::Mismatch,
            Err(_) => return OracleCheck::OutOfRange,
        }
    }
    OracleCheck::Confirmed
}

/// Hunt over the labeled enumeration of all graphs on `n` vertices.
pub fn hunt_enumeration(n: usize, opts: &HuntOptions) -> Result<HuntOutcome, HarnessError> {
    let graphs = super::labeled_enumeration(n)?;
    let items = graphs.enumerate().map(|(i, graph)| {
        let text = crate::graph6::encode_graph6(&graph).expect("within encodable capacity");
        Ok(Ok(crate::graph6::StreamedGraph {
            line: i as u64 + 1,
            text,
            graph,
        }))
    });
    hunt_graphs(items, &format!("labeled-{n}"), opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mindeg_alone_prunes_n5_to_min_degree_3() {
        let opts = HuntOptions {
            filters: vec![HuntFilter::MinDeg],
            ..HuntOptions::default()
        };
        let outcome = hunt_enumeration(5, &opts).unwrap();
        // survivors are exactly the labeled graphs with δ >= 3
        let expected = crate::harness::labeled_enumeration(5)
            .unwrap()
            .filter(|g| g.min_degree() >= 3)
            .count() as u64;
        assert_eq!(outcome.manifest.processed, expected);
        assert!(expected > 0);
        assert_eq!(outcome.manifest.violations, 0);
        for r in &outcome.survivors {
            assert!(r.slack_egt >= 0);
        }
        assert_eq!(outcome.eliminated[0].0, "mindeg");
        assert_eq!(
            outcome.eliminated[0].1 + outcome.manifest.processed,
            1 << 10
        );
    }

    #[test]
    fn c5_is_eliminated_by_mindeg_before_any_solver() {
        let g6 = crate::graph6::encode_graph6(&Graph::cycle(5).unwrap()).unwrap();
        let items = [Ok(Ok(crate::graph6::StreamedGraph {
            line: 1,
            text: g6,
            graph: Graph::cycle(5).unwrap(),
        }))];
        let outcome = hunt_graphs(items.into_iter(), "c5", &HuntOptions::default()).unwrap();
        assert!(outcome.survivors.is_empty());
        assert_eq!(outcome.eliminated[0], ("mindeg", 1));
    }

    #[test]
    fn k6_passes_all_default_filters_and_is_sharp() {
        let g = Graph::complete(6).unwrap();
        let g6 = crate::graph6::encode_graph6(&g).unwrap();
        let items = [Ok(Ok(crate::graph6::StreamedGraph {
            line: 1,
            text: g6,
            graph: g,
        }))];
        let outcome = hunt_graphs(items.into_iter(), "k6", &HuntOptions::default()).unwrap();
        assert_eq!(outcome.survivors.len(), 1);
        assert_eq!(outcome.survivors[0].slack_egt, 0);
        assert_eq!(outcome.manifest.sharp, 1);
    }

    #[test]
    fn bip_defaults_require_an_induced_k4_minus()
    {
        let opts = HuntOptions {
            variant: Variant::Bip,
            filters: HuntFilter::defaults_for(Variant::Bip),
            ..HuntOptions::default()
        };
        // K4 has no induced K4^-: eliminated. The diamond itself has one and
        // its maximal cliques extend.
        let k4 = Graph::complete(4).unwrap();
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let items = [&k4, &diamond].into_iter().enumerate().map(|(i, g)| {
            Ok(Ok(crate::graph6::StreamedGraph {
                line: i as u64 + 1,
                text: crate::graph6::encode_graph6(g).unwrap(),
                graph: g.clone(),
            }))
        });
        let outcome = hunt_graphs(items, "pair", &opts).unwrap();
        assert_eq!(outcome.survivors.len(), 1);
        assert_eq!(outcome.eliminated[0], ("k4minus", 1));
    }

    #[test]
    fn filter_pipeline_order_is_fixed() {
        let opts = HuntOptions {
            filters: vec![
                HuntFilter::DenseCutSampled,
                HuntFilter::MinDeg,
                HuntFilter::Triangular,
            ],
            ..HuntOptions::default()
        };
        let outcome = hunt_enumeration(3, &opts).unwrap();
        let order: Vec<&str> = outcome.eliminated.iter().map(|&(n, _)| n).collect();
        assert_eq!(order, vec!["mindeg", "triangular", "dense-cut-sampled"]);
    }
}
