//! JSON, CSV and plain-text renderings of a record list.

use std::io::Write;

use serde::Serialize;

use crate::record::{Record, Summary};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "txt",
        }
    }
}

#[derive(Serialize)]
struct Document<'a> {
    command: &'a str,
    summary: Summary,
    records: &'a [Record],
}

#[derive(Serialize)]
struct CsvRow<'a> {
    kind: &'a str,
    subject: &'a str,
    params: String,
    lhs: String,
    rhs: String,
    sum: String,
    expected: &'a str,
    modulus: &'a str,
    residue: &'a str,
    status: &'a str,
    claim: &'a str,
    asserted: bool,
    detail: &'a str,
    elapsed_ms: String,
}

fn opt_text<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map(ToString::to_string).unwrap_or_default()
}

pub fn write_json<W: Write>(out: W, command: &str, records: &[Record]) -> Result<(), CliError> {
    let doc = Document {
        command,
        summary: Summary::of(records),
        records,
    };
    let mut out = out;
    serde_json::to_writer_pretty(&mut out, &doc)?;
    writeln!(out)?;
    Ok(())
}

pub fn write_csv<W: Write>(out: W, records: &[Record]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(CsvRow {
            kind: r.kind,
            subject: &r.subject,
            params: r.params_text(),
            lhs: opt_text(&r.lhs),
            rhs: opt_text(&r.rhs),
            sum: opt_text(&r.sum),
            expected: r.expected.as_deref().unwrap_or(""),
            modulus: r.modulus.as_deref().unwrap_or(""),
            residue: r.residue.as_deref().unwrap_or(""),
            status: r.status.as_str(),
            claim: r.claim.unwrap_or(""),
            asserted: r.asserted,
            detail: r.detail.as_deref().unwrap_or(""),
            elapsed_ms: opt_text(&r.elapsed_ms),
        })?;
    }
    w.flush()?;
    Ok(())
}

fn abbreviate(s: String, max: usize) -> String {
    if s.len() <= max {
        s
    } else {
        format!("{}...({} chars)", &s[..max.min(s.len())], s.len())
    }
}

pub fn write_text<W: Write>(mut out: W, command: &str, records: &[Record]) -> Result<(), CliError> {
    writeln!(out, "{command}")?;
    for r in records {
        let mut line = format!(
            "{:<15} {:<14} {:<24} {}",
            r.status.as_str(),
            r.kind,
            r.subject,
            r.params_text()
        );
        if let (Some(l), Some(rh)) = (&r.lhs, &r.rhs) {
            line.push_str(&format!(
                "  lhs={} rhs={}",
                abbreviate(l.to_string(), 40),
                abbreviate(rh.to_string(), 40)
            ));
        }
        if let (Some(res), Some(exp), Some(m)) = (&r.residue, &r.expected, &r.modulus) {
            line.push_str(&format!("  residue={res} expected={exp} mod {m}"));
        }
        if let Some(c) = r.claim {
            line.push_str(&format!("  [{c}]"));
        }
        if !r.asserted {
            line.push_str("  (report only)");
        }
        if let Some(d) = &r.detail {
            line.push_str(&format!("  {d}"));
        }
        writeln!(out, "{line}")?;
    }
    let s = Summary::of(records);
    writeln!(
        out,
        "total {}  pass {}  fail {} ({} asserted)  skip {}  not-applicable {}",
        s.total, s.passed, s.failed, s.asserted_failures, s.skipped, s.not_applicable
    )?;
    Ok(())
}

pub fn write<W: Write>(
    out: W,
    format: Format,
    command: &str,
    records: &[Record],
) -> Result<(), CliError> {
    match format {
        Format::Json => write_json(out, command, records),
        Format::Csv => write_csv(out, records),
        Format::Text => write_text(out, command, records),
    }
}
