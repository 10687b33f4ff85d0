//! Command-line front end: per-graph invariants and audits, streaming
//! verification of graph6 catalogs, sharp-family sweeps, and candidate
//! hunting.
//!
//! Exit codes: 0 clean, 1 violations found, 2 input error, 3 capacity error.

use std::io::{BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use alphatau::edges::EdgeIndex;
use alphatau::graph::Graph;
use alphatau::graph6::parse_graph6;
use alphatau::harness::{
    audit_graph, family_sweep, hunt_enumeration, hunt_graphs, verify_file, verify_stream,
    HarnessError, HuntFilter, HuntOptions, HuntOutcome, RunManifest, Variant, VerifyOptions,
    VerifyOutcome, ViolationReport,
};
use alphatau::report::{emit_report, format_record, ReportFormat};
use alphatau::solve::{
    alpha1_exact, tau_exact, taub_exact_with_limit, DEFAULT_MAXCUT_LIMIT,
};

const WORKERS_ENV: &str = "ALPHATAU_WORKERS";

#[derive(Parser)]
#[command(
    name = "alphatau",
    version,
    about = "Exact triangle-independence, triangle-cover, and bipartization invariants of small graphs, with bound verification over graph6 streams"
)]
struct Cli {
    /// Worker threads for streaming commands (overrides ALPHATAU_WORKERS;
    /// 0 = one per core). Output is identical for any worker count.
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the three invariants of one graph, with witnesses
    Invariants {
        /// graph6-encoded graph
        graph6: String,
        #[arg(long, default_value_t = DEFAULT_MAXCUT_LIMIT)]
        maxcut_limit: usize,
    },
    /// Verify the conjectured bounds over a graph6 stream
    Verify {
        /// Input file ("-" for stdin)
        #[arg(long)]
        input: PathBuf,
        /// Which bound to enforce: egt, bip, or both
        #[arg(long, default_value = "both", value_parser = parse_variant)]
        variant: Variant,
        /// Report format: csv or text
        #[arg(long, default_value = "csv", value_parser = parse_format)]
        format: ReportFormat,
        /// Report file (stdout when omitted; required for --resume).
        /// A manifest is written beside it as <output>.manifest
        #[arg(long)]
        output: Option<PathBuf>,
        /// Continue an interrupted run from the manifest cursor
        #[arg(long, requires = "output")]
        resume: bool,
        /// Abort on the first malformed line (the default)
        #[arg(long, conflicts_with = "lenient")]
        strict: bool,
        /// Record malformed lines and keep going instead of aborting
        #[arg(long)]
        lenient: bool,
        /// Stop after this many graphs (resume later from the manifest)
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_MAXCUT_LIMIT)]
        maxcut_limit: usize,
    },
    /// Screen graphs through minimal-counterexample prerequisites, then
    /// verify the survivors
    Hunt {
        /// Enumerate all labeled graphs on this many vertices (≤ 7)
        #[arg(long, required_unless_present = "input", conflicts_with = "input")]
        n: Option<usize>,
        /// graph6 stream to screen instead of the enumeration
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value = "egt", value_parser = parse_variant)]
        variant: Variant,
        /// Comma-separated filters: mindeg, triangular, k4minus,
        /// clique-extension, dense-cut-sampled (defaults depend on variant)
        #[arg(long, value_delimiter = ',')]
        filters: Option<Vec<String>>,
        #[arg(long, default_value = "csv", value_parser = parse_format)]
        format: ReportFormat,
        /// Survivor report file (stdout when omitted)
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        lenient: bool,
        #[arg(long, default_value_t = DEFAULT_MAXCUT_LIMIT)]
        maxcut_limit: usize,
        /// Candidate cap for the sampled dense-cut filter
        #[arg(long, default_value_t = 512)]
        sampled_cuts: usize,
    },
    /// Verify that every sharp family graph meets the bound with equality
    Families {
        /// Largest family vertex count to sweep
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value = "csv", value_parser = parse_format)]
        format: ReportFormat,
        #[arg(long, default_value_t = DEFAULT_MAXCUT_LIMIT)]
        maxcut_limit: usize,
    },
    /// Full structural dump of one graph
    Audit {
        /// graph6-encoded graph
        graph6: String,
        #[arg(long, default_value_t = DEFAULT_MAXCUT_LIMIT)]
        maxcut_limit: usize,
    },
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    Variant::parse(s).ok_or_else(|| format!("unknown variant {s:?} (egt, bip, both)"))
}

fn parse_format(s: &str) -> Result<ReportFormat, String> {
    ReportFormat::parse(s).ok_or_else(|| format!("unknown format {s:?} (csv, text)"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match &e {
                HarnessError::Solver(_) | HarnessError::EnumerationTooLarge { .. } => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}

fn workers_from(cli_value: Option<usize>) -> Result<usize, HarnessError> {
    if let Some(w) = cli_value {
        return Ok(w);
    }
    match std::env::var(WORKERS_ENV) {
        Err(_) => Ok(0),
        Ok(text) => text.parse().map_err(|_| HarnessError::Manifest {
            path: WORKERS_ENV.to_string(),
            detail: format!("not a worker count: {text:?}"),
        }),
    }
}

fn run(cli: Cli) -> Result<ExitCode, HarnessError> {
    let workers = workers_from(cli.workers)?;
    match cli.command {
        Command::Invariants {
            graph6,
            maxcut_limit,
        } => {
            let g = parse_graph6(&graph6).map_err(|kind| {
                HarnessError::Parse(alphatau::graph6::Graph6StreamError { line: 1, kind })
            })?;
            print_invariants(&g, &graph6, maxcut_limit)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            input,
            variant,
            format,
            output,
            resume,
            strict: _,
            lenient,
            limit,
            maxcut_limit,
        } => {
            let opts = VerifyOptions {
                variant,
                strict: !lenient,
                workers,
                maxcut_limit,
                format,
                limit,
                oracle_recheck: true,
            };
            let outcome = match &output {
                Some(path) => verify_file(&input, path, &opts, resume)?,
                None => {
                    let stdout = std::io::stdout();
                    let mut report = std::io::BufWriter::new(stdout.lock());
                    let outcome = if input.as_os_str() == "-" {
                        let stdin = std::io::stdin();
                        verify_stream(stdin.lock(), "stdin", &mut report, &opts, None)?
                    } else {
                        let file = BufReader::new(std::fs::File::open(&input)?);
                        verify_stream(
                            file,
                            &input.display().to_string(),
                            &mut report,
                            &opts,
                            None,
                        )?
                    };
                    report.flush()?;
                    outcome
                }
            };
            report_summary(&outcome, maxcut_limit);
            Ok(exit_for_violations(outcome.manifest.violations))
        }
        Command::Hunt {
            n,
            input,
            variant,
            filters,
            format,
            output,
            lenient,
            maxcut_limit,
            sampled_cuts,
        } => {
            let filters = match filters {
                None => HuntFilter::defaults_for(variant),
                Some(names) => names
                    .iter()
                    .map(|name| {
                        HuntFilter::parse(name).ok_or_else(|| HarnessError::Manifest {
                            path: "--filters".to_string(),
                            detail: format!("unknown filter {name:?}"),
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            };
            let opts = HuntOptions {
                variant,
                filters,
                strict: !lenient,
                workers,
                maxcut_limit,
                sampled_cuts,
            };
            let outcome = match (n, input) {
                (Some(n), None) => hunt_enumeration(n, &opts)?,
                (None, Some(path)) => {
                    let file = BufReader::new(std::fs::File::open(&path)?);
                    let reader = alphatau::graph6::Graph6Reader::new(file, opts.strict);
                    hunt_graphs(reader, &path.display().to_string(), &opts)?
                }
                _ => unreachable!("clap enforces exactly one source"),
            };
            emit_hunt(&outcome, format, output.as_deref(), maxcut_limit)?;
            Ok(exit_for_violations(outcome.manifest.violations))
        }
        Command::Families {
            max_n,
            format,
            maxcut_limit,
        } => {
            let sweep = family_sweep(max_n, maxcut_limit)?;
            let stdout = std::io::stdout();
            let mut out = std::io::BufWriter::new(stdout.lock());
            emit_report(
                &mut out,
                sweep.families.iter().map(|f| &f.record),
                format,
            )?;
            out.flush()?;
            for f in &sweep.families {
                let blocks = f
                    .blocks
                    .iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join("+");
                eprintln!(
                    "family {blocks}: n={} slack_egt={} {}",
                    f.record.n,
                    f.record.slack_egt,
                    if f.record.slack_egt == 0 { "sharp" } else { "NOT SHARP" }
                );
            }
            if sweep.all_sharp {
                eprintln!("all {} families sharp", sweep.families.len());
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("sharpness failure: solver bug");
                Ok(ExitCode::from(1))
            }
        }
        Command::Audit {
            graph6,
            maxcut_limit,
        } => {
            let g = parse_graph6(&graph6).map_err(|kind| {
                HarnessError::Parse(alphatau::graph6::Graph6StreamError { line: 1, kind })
            })?;
            let report = audit_graph(&g, graph6, maxcut_limit)?;
            print!("{report}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn exit_for_violations(violations: u64) -> ExitCode {
    if violations > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn print_invariants(g: &Graph, graph6: &str, maxcut_limit: usize) -> Result<(), HarnessError> {
    let index = EdgeIndex::new(g);
    let alpha1 = alpha1_exact(g);
    let tau = tau_exact(g);
    let taub = taub_exact_with_limit(g, maxcut_limit)?;
    let pairs = |w: &alphatau::EdgeSet| {
        if w.is_empty() {
            return "-".to_string();
        }
        w.iter()
            .map(|id| {
                let (u, v) = index.pair(id);
                format!("({u},{v})")
            })
            .collect::<Vec<_>>()
            .join(" ")
    };
    let n2 = (g.n() * g.n()) as i64;
    println!("graph6: {graph6}");
    println!("n: {}  m: {}", g.n(), g.edge_count());
    println!("alpha1: {}  witness: {}", alpha1.value, pairs(&alpha1.witness));
    println!("tau: {}  witness: {}", tau.value, pairs(&tau.witness));
    println!(
        "taub: {}  witness: {}  bipartition: {:?}",
        taub.value,
        pairs(&taub.witness),
        taub.bipartition.expect("taub certifies a side")
    );
    println!(
        "slack_egt: {}  slack_bip: {}",
        n2 - 4 * (alpha1.value + tau.value) as i64,
        n2 - 4 * (alpha1.value + taub.value) as i64
    );
    Ok(())
}

fn report_summary(outcome: &VerifyOutcome, maxcut_limit: usize) {
    let m = &outcome.manifest;
    eprintln!(
        "processed {} skipped {} violations {} sharp {} near-sharp {} ({} ms)",
        m.processed, m.skipped, m.violations, m.sharp, m.near_sharp, m.wall_ms
    );
    for (line, reason) in &outcome.skips {
        eprintln!("skipped line {line}: {reason}");
    }
    dump_violations(&outcome.violations, maxcut_limit);
}

fn dump_violations(violations: &[ViolationReport], maxcut_limit: usize) {
    for v in violations {
        eprintln!(
            "VIOLATION line {}: {} (oracle: {})",
            v.line,
            format_record(&v.record, ReportFormat::Text),
            match v.oracle {
                alphatau::harness::OracleCheck::Confirmed => "confirmed by brute force",
                alphatau::harness::OracleCheck::Mismatch =>
                    "BRUTE FORCE DISAGREES - solver bug, not a counterexample",
                alphatau::harness::OracleCheck::OutOfRange => "beyond brute-force limits",
            }
        );
        // a violation warrants the full structural picture
        if let Ok(g) = parse_graph6(&v.record.graph6) {
            match audit_graph(&g, v.record.graph6.clone(), maxcut_limit) {
                Ok(audit) => eprintln!("{audit}"),
                Err(e) => eprintln!("audit failed: {e}"),
            }
        }
    }
}

fn emit_hunt(
    outcome: &HuntOutcome,
    format: ReportFormat,
    output: Option<&std::path::Path>,
    maxcut_limit: usize,
) -> Result<(), HarnessError> {
    match output {
        Some(path) => {
            let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
            emit_report(&mut file, outcome.survivors.iter(), format)?;
            file.flush()?;
            outcome.manifest.save(&RunManifest::path_for(path))?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut out = std::io::BufWriter::new(stdout.lock());
            emit_report(&mut out, outcome.survivors.iter(), format)?;
            out.flush()?;
        }
    }
    let m = &outcome.manifest;
    for (name, count) in &outcome.eliminated {
        eprintln!("filter {name}: eliminated {count}");
    }
    eprintln!(
        "survivors {} skipped {} violations {} sharp {} ({} ms)",
        m.processed, m.skipped, m.violations, m.sharp, m.wall_ms
    );
    for (line, reason) in &outcome.skips {
        eprintln!("skipped line {line}: {reason}");
    }
    dump_violations(&outcome.violations, maxcut_limit);
    Ok(())
}
