//! Streaming verification: compute the invariants of every graph in a
//! collection, evaluate the conjectured bounds in scaled integers, flag
//! sharp and violating cases, and emit deterministic reports with resumable
//! manifests.

mod audit;
mod enumerate;
mod families;
mod hunt;
mod manifest;
mod verify;

pub use audit::{audit_graph, AuditReport};
pub use enumerate::{labeled_enumeration, LABELED_ENUMERATION_LIMIT};
pub use families::{family_sweep, partitions, FamilyRecord, FamilySweep};
pub use hunt::{hunt_enumeration, hunt_graphs, HuntFilter, HuntOptions, HuntOutcome};
pub use manifest::RunManifest;
pub use verify::{
    verify_file, verify_graphs, verify_stream, OracleCheck, VerifyOptions, VerifyOutcome,
    ViolationReport,
};

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::graph6::Graph6StreamError;
use crate::solve::{invariants, SolverError};
use crate::structure::{has_induced_k4_minus, is_triangular, mindeg_filter};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Parse(#[from] Graph6StreamError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("labeled enumeration is limited to {limit} vertices, requested {n}")]
    EnumerationTooLarge { n: usize, limit: usize },
    #[error("manifest {path}: {detail}")]
    Manifest { path: String, detail: String },
}

/// Which conjectured bound a run checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// `4(alpha1 + tau) <= n²`
    Egt,
    /// `4(alpha1 + taub) <= n²`
    Bip,
    Both,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Egt => "egt",
            Variant::Bip => "bip",
            Variant::Both => "both",
        }
    }

    pub fn parse(s: &str) -> Option<Variant> {
        match s {
            "egt" => Some(Variant::Egt),
            "bip" => Some(Variant::Bip),
            "both" => Some(Variant::Both),
            _ => None,
        }
    }
}

/// Per-record flag set, reported as `|`-joined names in fixed order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct RecordFlags(u16);

impl RecordFlags {
    pub const EGT_VIOLATION: RecordFlags = RecordFlags(1 << 0);
    pub const BIP_VIOLATION: RecordFlags = RecordFlags(1 << 1);
    pub const SHARP_EGT: RecordFlags = RecordFlags(1 << 2);
    pub const SHARP_BIP: RecordFlags = RecordFlags(1 << 3);
    pub const NEAR_SHARP_EGT: RecordFlags = RecordFlags(1 << 4);
    pub const NEAR_SHARP_BIP: RecordFlags = RecordFlags(1 << 5);
    pub const TRIANGULAR: RecordFlags = RecordFlags(1 << 6);
    pub const MINDEG_PASS: RecordFlags = RecordFlags(1 << 7);
    pub const K4MINUS_FREE: RecordFlags = RecordFlags(1 << 8);

    const ALL: [(RecordFlags, &'static str); 9] = [
        (Self::EGT_VIOLATION, "egt_violation"),
        (Self::BIP_VIOLATION, "bip_violation"),
        (Self::SHARP_EGT, "sharp_egt"),
        (Self::SHARP_BIP, "sharp_bip"),
        (Self::NEAR_SHARP_EGT, "near_sharp_egt"),
        (Self::NEAR_SHARP_BIP, "near_sharp_bip"),
        (Self::TRIANGULAR, "triangular"),
        (Self::MINDEG_PASS, "mindeg_pass"),
        (Self::K4MINUS_FREE, "k4minus_free"),
    ];

    pub fn contains(self, other: RecordFlags) -> bool {
        self.0 & other.0 == other.0
    }

    pub fn insert(&mut self, other: RecordFlags) {
        self.0 |= other.0;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn names(self) -> impl Iterator<Item = &'static str> {
        Self::ALL
            .iter()
            .filter(move |(f, _)| self.contains(*f))
            .map(|&(_, name)| name)
    }

    pub fn parse(text: &str) -> Option<RecordFlags> {
        let mut flags = RecordFlags::default();
        if text.is_empty() {
            return Some(flags);
        }
        for part in text.split('|') {
            let (f, _) = Self::ALL.iter().find(|(_, name)| *name == part)?;
            flags.insert(*f);
        }
        Some(flags)
    }
}

impl std::fmt::Display for RecordFlags {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, name) in self.names().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{name}")?;
        }
        Ok(())
    }
}

/// One verified graph: invariants, scaled slacks against `n²/4`, and flags.
///
/// `slack_egt = n² − 4(alpha1 + tau)` and `slack_bip = n² − 4(alpha1 +
/// taub)`; zero marks a sharp case, negative a violation. Since `tau <=
/// taub`, `slack_bip <= slack_egt` always.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub alpha1: u64,
    pub tau: u64,
    pub taub: u64,
    pub slack_egt: i64,
    pub slack_bip: i64,
    pub flags: RecordFlags,
}

/// Slack within this distance of zero (but not zero) gets a near-sharp flag.
const NEAR_SHARP_WINDOW: i64 = 3;

pub fn compute_record(
    g: &Graph,
    graph6: String,
    maxcut_limit: usize,
) -> Result<VerificationRecord, SolverError> {
    let inv = invariants(g, maxcut_limit)?;
    let n2 = (g.n() * g.n()) as i64;
    let slack_egt = n2 - 4 * (inv.alpha1 + inv.tau) as i64;
    let slack_bip = n2 - 4 * (inv.alpha1 + inv.taub) as i64;
    let mut flags = RecordFlags::default();
    for (slack, violation, sharp, near) in [
        (
            slack_egt,
            RecordFlags::EGT_VIOLATION,
            RecordFlags::SHARP_EGT,
            RecordFlags::NEAR_SHARP_EGT,
        ),
        (
            slack_bip,
            RecordFlags::BIP_VIOLATION,
            RecordFlags::SHARP_BIP,
            RecordFlags::NEAR_SHARP_BIP,
        ),
    ] {
        if slack < 0 {
            flags.insert(violation);
        } else if slack == 0 {
            flags.insert(sharp);
        } else if slack <= NEAR_SHARP_WINDOW {
            flags.insert(near);
        }
    }
    if is_triangular(g) {
        flags.insert(RecordFlags::TRIANGULAR);
    }
    if mindeg_filter(g) {
        flags.insert(RecordFlags::MINDEG_PASS);
    }
    if has_induced_k4_minus(g).is_none() {
        flags.insert(RecordFlags::K4MINUS_FREE);
    }
    Ok(VerificationRecord {
        graph6,
        n: g.n(),
        m: g.edge_count(),
        alpha1: inv.alpha1,
        tau: inv.tau,
        taub: inv.taub,
        slack_egt,
        slack_bip,
        flags,
    })
}

impl VerificationRecord {
    /// Whether this record violates the bound selected by `variant`.
    pub fn violates(&self, variant: Variant) -> bool {
        match variant {
            Variant::Egt => self.flags.contains(RecordFlags::EGT_VIOLATION),
            Variant::Bip => self.flags.contains(RecordFlags::BIP_VIOLATION),
            Variant::Both => {
                self.flags.contains(RecordFlags::EGT_VIOLATION)
                    || self.flags.contains(RecordFlags::BIP_VIOLATION)
            }
        }
    }

    pub fn is_sharp(&self, variant: Variant) -> bool {
        match variant {
            Variant::Egt => self.flags.contains(RecordFlags::SHARP_EGT),
            Variant::Bip => self.flags.contains(RecordFlags::SHARP_BIP),
            Variant::Both => {
                self.flags.contains(RecordFlags::SHARP_EGT)
                    || self.flags.contains(RecordFlags::SHARP_BIP)
            }
        }
    }

    pub fn is_near_sharp(&self, variant: Variant) -> bool {
        match variant {
            Variant::Egt => self.flags.contains(RecordFlags::NEAR_SHARP_EGT),
            Variant::Bip => self.flags.contains(RecordFlags::NEAR_SHARP_BIP),
            Variant::Both => {
                self.flags.contains(RecordFlags::NEAR_SHARP_EGT)
                    || self.flags.contains(RecordFlags::NEAR_SHARP_BIP)
            }
        }
    }
}
