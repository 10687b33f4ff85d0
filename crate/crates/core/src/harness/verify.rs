//! The verify pipeline: stream graphs, solve, flag, report.
//!
//! Work is batched and solved on a bounded rayon pool, then merged back in
//! input order before any byte is written, so reports are identical for any
//! worker count. A reported violation is a two-stage event: it is re-solved
//! with the brute-force oracles before being surfaced, since a genuine one
//! would be remarkable and a false alarm must be self-screened.

use std::io::{BufRead, Write};
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;

use super::{compute_record, HarnessError, RunManifest, Variant, VerificationRecord};
use crate::graph::Graph;
use crate::graph6::{Graph6Reader, Graph6StreamError, StreamedGraph};
use crate::report::{format_record, ReportFormat, CSV_HEADER};
use crate::solve::{brute_force, InvariantKind, DEFAULT_MAXCUT_LIMIT};

pub(crate) const BATCH_SIZE: usize = 256;

/// Item shape shared by the stream reader and prepared sources.
pub(crate) type SourceItem = std::io::Result<Result<StreamedGraph, Graph6StreamError>>;

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub variant: Variant,
    /// Abort on the first malformed line instead of recording and skipping.
    pub strict: bool,
    /// Worker threads; 0 uses the process-wide default.
    pub workers: usize,
    pub maxcut_limit: usize,
    pub format: ReportFormat,
    /// Stop gracefully after this many processed graphs (the manifest cursor
    /// then allows a byte-identical resume).
    pub limit: Option<u64>,
    /// Re-solve any violation with the exhaustive oracles before reporting.
    pub oracle_recheck: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            variant: Variant::Both,
            strict: true,
            workers: 0,
            maxcut_limit: DEFAULT_MAXCUT_LIMIT,
            format: ReportFormat::Csv,
            limit: None,
            oracle_recheck: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleCheck {
    /// Brute force agrees with the branch-and-bound values.
    Confirmed,
    /// Brute force disagrees: a solver bug, not a counterexample.
    Mismatch,
    /// Graph too large for the oracles (or recheck disabled).
    OutOfRange,
}

#[derive(Debug, Clone)]
pub struct ViolationReport {
    pub line: u64,
    pub record: VerificationRecord,
    pub oracle: OracleCheck,
}

#[derive(Debug)]
pub struct VerifyOutcome {
    pub manifest: RunManifest,
    pub violations: Vec<ViolationReport>,
    /// Graphs skipped with the reason (solver capacity, parse error in
    /// lenient mode), by input line.
    pub skips: Vec<(u64, String)>,
}

pub(crate) struct WorkItem {
    pub line: u64,
    pub graph6: String,
    pub graph: Graph,
}

pub(crate) fn make_pool(workers: usize) -> Option<rayon::ThreadPool> {
    if workers == 0 {
        None
    } else {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .expect("pool construction"),
        )
    }
}

pub(crate) fn run_batch<T: Send, F: Fn(&WorkItem) -> T + Sync>(
    pool: &Option<rayon::ThreadPool>,
    batch: &[WorkItem],
    job: F,
) -> Vec<T> {
    match pool {
        Some(p) => p.install(|| batch.par_iter().map(&job).collect()),
        None => batch.par_iter().map(&job).collect(),
    }
}

fn oracle_check(g: &Graph, record: &VerificationRecord) -> OracleCheck {
    let checks = [
        (InvariantKind::Alpha1, record.alpha1),
        (InvariantKind::Tau, record.tau),
        (InvariantKind::TauB, record.taub),
    ];
    for (kind, claimed) in checks {
        match brute_force(g, kind) {
            Ok(r) if r.value == claimed => {}
            Ok(_) => return OracleCheck::Mismatch,
            Err(_) => return OracleCheck::OutOfRange,
        }
    }
    OracleCheck::Confirmed
}

/// Verify a graph6 stream, writing report rows to `report`.
///
/// With `resume` the reader skips to the manifest cursor, no csv header is
/// emitted, and all counters accumulate; appending the output to the
/// original report reproduces an uninterrupted run byte for byte.
pub fn verify_stream<R: BufRead, W: Write>(
    source: R,
    input_id: &str,
    report: &mut W,
    opts: &VerifyOptions,
    resume: Option<RunManifest>,
) -> Result<VerifyOutcome, HarnessError> {
    let mut reader = Graph6Reader::new(source, opts.strict);
    if let Some(m) = &resume {
        reader.skip_to(m.cursor)?;
    }
    drive(reader, input_id, report, opts, resume)
}

/// Verify an in-memory graph collection (the labeled-enumeration fallback),
/// encoding each graph for its report row.
pub fn verify_graphs<W: Write>(
    graphs: impl Iterator<Item = Graph>,
    input_id: &str,
    report: &mut W,
    opts: &VerifyOptions,
) -> Result<VerifyOutcome, HarnessError> {
    let items = graphs.enumerate().map(|(i, graph)| {
        let text = crate::graph6::encode_graph6(&graph).expect("within encodable capacity");
        Ok(Ok(StreamedGraph {
            line: i as u64 + 1,
            text,
            graph,
        }))
    });
    drive(items, input_id, report, opts, None)
}

fn drive<W: Write>(
    mut items: impl Iterator<Item = SourceItem>,
    input_id: &str,
    report: &mut W,
    opts: &VerifyOptions,
    resume: Option<RunManifest>,
) -> Result<VerifyOutcome, HarnessError> {
    let started = Instant::now();
    let mut manifest = match resume {
        Some(m) => m,
        None => {
            if opts.format == ReportFormat::Csv {
                writeln!(report, "{CSV_HEADER}")?;
            }
            RunManifest::new("verify", input_id)
        }
    };
    manifest.variant = opts.variant.name().to_string();
    manifest.format = opts.format.name().to_string();
    manifest.strict = opts.strict;
    manifest.workers = opts.workers;

    let mut violations = Vec::new();
    let mut skips = Vec::new();
    let pool = make_pool(opts.workers);
    let mut done = 0u64;

    'stream: loop {
        let mut batch: Vec<WorkItem> = Vec::with_capacity(BATCH_SIZE);
        while batch.len() < BATCH_SIZE {
            if opts.limit.is_some_and(|l| done + batch.len() as u64 >= l) {
                break;
            }
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
            break 'stream;
        }

        let maxcut_limit = opts.maxcut_limit;
        let results = run_batch(&pool, &batch, |item| {
            compute_record(&item.graph, item.graph6.clone(), maxcut_limit)
        });
        for (item, result) in batch.iter().zip(results) {
            match result {
                Ok(record) => {
                    writeln!(report, "{}", format_record(&record, opts.format))?;
                    manifest.processed += 1;
                    done += 1;
                    if record.is_sharp(opts.variant) {
                        manifest.sharp += 1;
                    }
                    if record.is_near_sharp(opts.variant) {
                        manifest.near_sharp += 1;
                    }
                    if record.violates(opts.variant) {
                        manifest.violations += 1;
                        let oracle = if opts.oracle_recheck {
                            oracle_check(&item.graph, &record)
                        } else {
                            OracleCheck::OutOfRange
                        };
                        violations.push(ViolationReport {
                            line: item.line,
                            record,
                            oracle,
                        });
                    }
                }
                Err(e) => {
                    manifest.skipped += 1;
                    skips.push((item.line, e.to_string()));
                }
            }
            manifest.cursor = manifest.cursor.max(item.line);
        }
        if opts.limit.is_some_and(|l| done >= l) {
            break 'stream;
        }
    }

    manifest.wall_ms += started.elapsed().as_millis() as u64;
    Ok(VerifyOutcome {
        manifest,
        violations,
        skips,
    })
}

/// File-based verify with a persisted manifest beside the report.
///
/// `resume = true` loads `<output>.manifest`, skips past its cursor, and
/// appends; otherwise both files start fresh.
pub fn verify_file(
    input: &Path,
    output: &Path,
    opts: &VerifyOptions,
    resume: bool,
) -> Result<VerifyOutcome, HarnessError> {
    let manifest_path = RunManifest::path_for(output);
    let prior = if resume {
        Some(RunManifest::load(&manifest_path)?)
    } else {
        None
    };
    let source = std::io::BufReader::new(std::fs::File::open(input)?);
    let mut report = std::io::BufWriter::new(
        std::fs::OpenOptions::new()
            .create(true)
            .write(true)
            .append(resume)
            .truncate(!resume)
            .open(output)?,
    );
    let outcome = verify_stream(source, &input.display().to_string(), &mut report, opts, prior)?;
    report.flush()?;
    outcome.manifest.save(&manifest_path)?;
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_input() -> &'static str {
        ">>graph6<<\nBw\nC~\n\nDQc\nA_\n"
    }

    fn run(input: &str, opts: &VerifyOptions) -> (String, VerifyOutcome) {
        let mut buf = Vec::new();
        let outcome = verify_stream(input.as_bytes(), "test", &mut buf, opts, None).unwrap();
        (String::from_utf8(buf).unwrap(), outcome)
    }

    #[test]
    fn verify_writes_rows_in_input_order() {
        let (report, outcome) = run(sample_input(), &VerifyOptions::default());
        let lines: Vec<&str> = report.lines().collect();
        assert_eq!(lines.len(), 5); // header + 4 records
        assert_eq!(lines[0], CSV_HEADER);
        assert!(lines[1].starts_with("Bw,3,3,1,1,1,"));
        assert!(lines[2].starts_with("C~,4,6,2,2,2,0,0,"));
        assert!(lines[3].starts_with("DQc,5,"));
        assert!(lines[4].starts_with("A_,2,1,1,0,0,"));
        assert_eq!(outcome.manifest.processed, 4);
        assert_eq!(outcome.manifest.skipped, 0);
        assert_eq!(outcome.manifest.violations, 0);
        assert_eq!(outcome.manifest.cursor, 6);
        assert!(outcome.violations.is_empty());
    }

    #[test]
    fn identical_reports_for_any_worker_count() {
        let mut reports = Vec::new();
        for workers in [1usize, 2, 4] {
            let opts = VerifyOptions {
                workers,
                ..VerifyOptions::default()
            };
            reports.push(run(sample_input(), &opts).0);
        }
        assert_eq!(reports[0], reports[1]);
        assert_eq!(reports[1], reports[2]);
    }

    #[test]
    fn lenient_mode_records_bad_lines_and_continues() {
        let input = "Bw\nB\nC~\n";
        let opts = VerifyOptions {
            strict: false,
            ..VerifyOptions::default()
        };
        let (report, outcome) = run(input, &opts);
        assert_eq!(report.lines().count(), 3); // header + 2 good rows
        assert_eq!(outcome.manifest.processed, 2);
        assert_eq!(outcome.manifest.skipped, 1);
        assert_eq!(outcome.skips.len(), 1);
        assert_eq!(outcome.skips[0].0, 2);
        // processed + skipped = graph-bearing lines consumed
        assert_eq!(outcome.manifest.processed + outcome.manifest.skipped, 3);
    }

    #[test]
    fn strict_mode_aborts_on_bad_line() {
        let input = "Bw\nB\nC~\n";
        let mut buf = Vec::new();
        let err = verify_stream(
            input.as_bytes(),
            "test",
            &mut buf,
            &VerifyOptions::default(),
            None,
        )
        .unwrap_err();
        assert!(matches!(err, HarnessError::Parse(e) if e.line == 2));
    }

    #[test]
    fn capacity_limited_graphs_are_skipped_with_reason() {
        // 30-vertex empty graph: beyond the default exact max-cut limit
        let big = crate::graph6::encode_graph6(&Graph::empty(30).unwrap()).unwrap();
        let input = format!("Bw\n{big}\n");
        let (report, outcome) = run(&input, &VerifyOptions::default());
        assert_eq!(report.lines().count(), 2);
        assert_eq!(outcome.manifest.processed, 1);
        assert_eq!(outcome.manifest.skipped, 1);
        assert!(outcome.skips[0].1.contains("max-cut"));
    }

    #[test]
    fn limit_and_resume_reproduce_the_full_report() {
        let input = sample_input();
        let full = run(input, &VerifyOptions::default()).0;

        let opts = VerifyOptions {
            limit: Some(2),
            ..VerifyOptions::default()
        };
        let mut part1 = Vec::new();
        let first = verify_stream(input.as_bytes(), "test", &mut part1, &opts, None).unwrap();
        assert_eq!(first.manifest.processed, 2);

        let mut part2 = Vec::new();
        let second = verify_stream(
            input.as_bytes(),
            "test",
            &mut part2,
            &VerifyOptions::default(),
            Some(first.manifest),
        )
        .unwrap();
        assert_eq!(second.manifest.processed, 4); // accumulated
        let stitched = format!(
            "{}{}",
            String::from_utf8(part1).unwrap(),
            String::from_utf8(part2).unwrap()
        );
        assert_eq!(stitched, full);
    }

    #[test]
    fn verify_graphs_covers_small_enumeration() {
        let graphs = crate::harness::labeled_enumeration(4).unwrap();
        let mut buf = Vec::new();
        let outcome =
            verify_graphs(graphs, "labeled-4", &mut buf, &VerifyOptions::default()).unwrap();
        assert_eq!(outcome.manifest.processed, 64);
        assert_eq!(outcome.manifest.violations, 0);
        // K4 is among them and is sharp for both sums
        assert!(outcome.manifest.sharp >= 1);
    }
}
