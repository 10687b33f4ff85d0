//! Report rows: one line per verified graph, in csv or structured text.
//!
//! Field order is fixed — graph6, n, m, alpha1, tau, taub, slack_egt,
//! slack_bip, flags — and both encodings round-trip losslessly. graph6 text
//! never contains a comma, a space, or `=`, so no quoting is needed.

use std::io::Write;

use thiserror::Error;

use crate::harness::{RecordFlags, VerificationRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Text,
}

impl ReportFormat {
    pub fn name(self) -> &'static str {
        match self {
            ReportFormat::Csv => "csv",
            ReportFormat::Text => "text",
        }
    }

    pub fn parse(s: &str) -> Option<ReportFormat> {
        match s {
            "csv" => Some(ReportFormat::Csv),
            "text" => Some(ReportFormat::Text),
            _ => None,
        }
    }
}

pub const CSV_HEADER: &str = "graph6,n,m,alpha1,tau,taub,slack_egt,slack_bip,flags";

const FIELDS: usize = 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReportParseError {
    #[error("expected {FIELDS} fields, found {found}")]
    FieldCount { found: usize },
    #[error("field {field}: bad value {value:?}")]
    BadValue { field: &'static str, value: String },
}

/// Serialize one record as a report row (no trailing newline).
pub fn format_record(r: &VerificationRecord, format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => format!(
            "{},{},{},{},{},{},{},{},{}",
            r.graph6, r.n, r.m, r.alpha1, r.tau, r.taub, r.slack_egt, r.slack_bip, r.flags
        ),
        ReportFormat::Text => format!(
            "graph6={} n={} m={} alpha1={} tau={} taub={} slack_egt={} slack_bip={} flags={}",
            r.graph6, r.n, r.m, r.alpha1, r.tau, r.taub, r.slack_egt, r.slack_bip, r.flags
        ),
    }
}

/// Parse one report row back into a record.
pub fn parse_record(
    line: &str,
    format: ReportFormat,
) -> Result<VerificationRecord, ReportParseError> {
    let fields: Vec<&str> = match format {
        ReportFormat::Csv => line.split(',').collect(),
        ReportFormat::Text => line
            .split_whitespace()
            .map(|tok| tok.split_once('=').map_or(tok, |(_, v)| v))
            .collect(),
    };
    if fields.len() != FIELDS {
        return Err(ReportParseError::FieldCount {
            found: fields.len(),
        });
    }
    fn num<T: std::str::FromStr>(
        field: &'static str,
        value: &str,
    ) -> Result<T, ReportParseError> {
        value.parse().map_err(|_| ReportParseError::BadValue {
            field,
            value: value.to_string(),
        })
    }
    Ok(VerificationRecord {
        graph6: fields[0].to_string(),
        n: num("n", fields[1])?,
        m: num("m", fields[2])?,
        alpha1: num("alpha1", fields[3])?,
        tau: num("tau", fields[4])?,
        taub: num("taub", fields[5])?,
        slack_egt: num("slack_egt", fields[6])?,
        slack_bip: num("slack_bip", fields[7])?,
        flags: RecordFlags::parse(fields[8]).ok_or_else(|| ReportParseError::BadValue {
            field: "flags",
            value: fields[8].to_string(),
        })?,
    })
}

/// Write a whole report: header row in csv mode, then one line per record in
/// input order.
pub fn emit_report<'a, W: Write>(
    out: &mut W,
    records: impl IntoIterator<Item = &'a VerificationRecord>,
    format: ReportFormat,
) -> std::io::Result<()> {
    if format == ReportFormat::Csv {
        writeln!(out, "{CSV_HEADER}")?;
    }
    for r in records {
        writeln!(out, "{}", format_record(r, format))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::harness::compute_record;
    use crate::solve::DEFAULT_MAXCUT_LIMIT;

    fn k4_record() -> VerificationRecord {
        let g = Graph::complete(4).unwrap();
        compute_record(&g, "C~".to_string(), DEFAULT_MAXCUT_LIMIT).unwrap()
    }

    #[test]
    fn k4_csv_row() {
        let line = format_record(&k4_record(), ReportFormat::Csv);
        assert_eq!(
            line,
            "C~,4,6,2,2,2,0,0,sharp_egt|sharp_bip|triangular|mindeg_pass|k4minus_free"
        );
    }

    #[test]
    fn rows_round_trip_both_formats() {
        let graphs = [
            Graph::complete(4).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::empty(2).unwrap(),
            Graph::sharpness_family(&[2, 1]).unwrap(),
        ];
        for g in &graphs {
            let g6 = crate::graph6::encode_graph6(g).unwrap();
            let r = compute_record(g, g6, DEFAULT_MAXCUT_LIMIT).unwrap();
            for format in [ReportFormat::Csv, ReportFormat::Text] {
                let line = format_record(&r, format);
                assert_eq!(parse_record(&line, format).unwrap(), r, "{line}");
            }
        }
    }

    #[test]
    fn emit_report_shapes() {
        let record = k4_record();
        let mut csv = Vec::new();
        emit_report(&mut csv, [&record, &record], ReportFormat::Csv).unwrap();
        let text = String::from_utf8(csv).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines[1], lines[2]);

        // empty sequence: header only in csv mode, nothing in text mode
        let mut empty_csv = Vec::new();
        emit_report(&mut empty_csv, [], ReportFormat::Csv).unwrap();
        assert_eq!(String::from_utf8(empty_csv).unwrap(), format!("{CSV_HEADER}\n"));
        let mut empty_text = Vec::new();
        emit_report(&mut empty_text, [], ReportFormat::Text).unwrap();
        assert!(empty_text.is_empty());
    }

    #[test]
    fn malformed_rows_are_rejected() {
        assert!(matches!(
            parse_record("C~,4,6", ReportFormat::Csv),
            Err(ReportParseError::FieldCount { found: 3 })
        ));
        assert!(matches!(
            parse_record("C~,4,6,x,2,2,0,0,", ReportFormat::Csv),
            Err(ReportParseError::BadValue { field: "alpha1", .. })
        ));
        assert!(matches!(
            parse_record("C~,4,6,2,2,2,0,0,nonsense", ReportFormat::Csv),
            Err(ReportParseError::BadValue { field: "flags", .. })
        ));
    }
}
