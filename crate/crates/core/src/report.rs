//! CSV and JSON emission for check reports and conciseness tables.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use crate::lab::{CheckReport, ConcisenessRow};
use crate::Result;

pub const REPORT_HEADER: [&str; 8] =
    ["group_id", "order", "check_id", "params", "status", "m", "subgroup_order", "witness"];
pub const TABLE_HEADER: [&str; 6] = ["group_id", "order", "variant", "k", "m", "subgroup_order"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected csv or json)")),
        }
    }
}

fn metric(r: &CheckReport, key: &str) -> String {
    r.metrics.get(key).map(u64::to_string).unwrap_or_default()
}

pub fn write_reports_csv<W: Write>(reports: &[CheckReport], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(REPORT_HEADER)?;
    for r in reports {
        w.write_record([
            r.group_id.clone(),
            r.order.to_string(),
            r.check_id.clone(),
            r.params_string(),
            r.status.to_string(),
            metric(r, "m"),
            metric(r, "subgroup_order"),
            r.witness.clone().unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_reports_json<W: Write>(reports: &[CheckReport], mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, reports)?;
    out.write_all(b"\n")?;
    Ok(())
}

pub fn write_table_csv<W: Write>(rows: &[ConcisenessRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(TABLE_HEADER)?;
    for r in rows {
        w.write_record([
            r.group_id.clone(),
            r.order.to_string(),
            r.variant.to_string(),
            r.k.to_string(),
            r.m.to_string(),
            r.subgroup_order.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn destination(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

/// Writes `reports` to `path`, or to stdout when `path` is `None`.
pub fn emit_report(reports: &[CheckReport], format: Format, path: Option<&Path>) -> Result<()> {
    let mut out = destination(path)?;
    match format {
        Format::Csv => write_reports_csv(reports, &mut out)?,
        Format::Json => write_reports_json(reports, &mut out)?,
    }
    out.flush()?;
    Ok(())
}

pub fn emit_table(rows: &[ConcisenessRow], path: Option<&Path>) -> Result<()> {
    let mut out = destination(path)?;
    write_table_csv(rows, &mut out)?;
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::lab::{CheckId, CorpusEntry};

    fn csv_of(reports: &[CheckReport]) -> String {
        let mut buf = Vec::new();
        write_reports_csv(reports, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn empty_is_header_only() {
        assert_eq!(csv_of(&[]), "group_id,order,check_id,params,status,m,subgroup_order,witness\n");
    }

    #[test]
    fn skipped_row_carries_reason() {
        let e = CorpusEntry::new("t", FiniteGroup::trivial(1));
        let r = CheckReport::new(CheckId::CoprimeOre, &e).skip("not simple, trivial");
        let text = csv_of(&[r]);
        assert_eq!(text.lines().nth(1).unwrap(), "t,1,check_coprime_ore,,skipped,,,\"not simple, trivial\"");
        assert!(!text.contains('\r'));
    }

    #[test]
    fn metrics_fill_columns() {
        let e = CorpusEntry::new("t", FiniteGroup::trivial(1));
        let r = CheckReport::new(CheckId::DeltaRecursion, &e).param("k", 1).metric("m", 1).metric("subgroup_order", 1);
        assert_eq!(csv_of(&[r]).lines().nth(1).unwrap(), "t,1,check_delta_recursion,k=1,pass,1,1,");
    }
}
