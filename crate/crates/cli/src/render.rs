//! Text, CSV and JSON writers for pattern reports, table rows and suite checks.

use std::io::Write;

use serde::Serialize;

use regmap_core::suites::{Check, Outcome};
use regmap_core::tables::{PatternEntry, TableId, TableRow};

use crate::{Format, MapReport};

/// Left-aligned columns separated by two spaces.
fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c + 1 == row.len() {
                line.push_str(cell);
            } else {
                line.push_str(&format!("{cell:<w$}  ", w = widths[c]));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn cells(entries: &[PatternEntry]) -> String {
    entries
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn json<W: Write, T: Serialize + ?Sized>(out: &mut W, value: &T) -> anyhow::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct PatternCsvRow<'a> {
    family: &'a str,
    m: u32,
    n: u32,
    class: String,
    link: String,
    index: String,
    pattern: &'a str,
    count: Option<u64>,
    length: Option<f64>,
}

pub fn write_map_report<W: Write>(
    out: &mut W,
    report: &MapReport,
    format: Format,
) -> anyhow::Result<()> {
    match format {
        Format::Json => json(out, report),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for m in &report.mirrors {
                w.serialize(PatternCsvRow {
                    family: &report.family,
                    m: report.map_type[0],
                    n: report.map_type[1],
                    class: m.class.to_string(),
                    link: m.link.to_string(),
                    index: m.index.to_string(),
                    pattern: &m.pattern,
                    count: m.count,
                    length: m.length,
                })?;
            }
            if report.mirrors.is_empty() {
                w.write_record([
                    "family", "m", "n", "class", "link", "index", "pattern", "count", "length",
                ])?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Table => {
            let [m, n] = report.map_type;
            writeln!(out, "family: {}", report.family)?;
            writeln!(
                out,
                "type {{{m},{n}}}  rotation group order {}  genus {}",
                report.group_order,
                report.genus.map_or("-".to_string(), |g| g.to_string())
            )?;
            if report.mirrors.is_empty() {
                writeln!(out, "no map of this type: the group is too small")?;
                return Ok(());
            }
            let mut rows = vec![["class", "link", "index", "notation", "count", "length"]
                .map(String::from)
                .to_vec()];
            for r in &report.mirrors {
                rows.push(vec![
                    r.class.to_string(),
                    r.link.to_string(),
                    r.index.to_string(),
                    format!("({})^{}", r.link, r.index),
                    opt(r.count),
                    r.length.map(|l| format!("{l:.10}")).unwrap_or_default(),
                ]);
            }
            write!(out, "{}", aligned(&rows))?;
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct TableCsvRow<'a> {
    table: &'a str,
    row: &'a str,
    source: &'a str,
    m: u32,
    n: u32,
    group_order: Option<u64>,
    genus: Option<u64>,
    published: String,
    computed: String,
    status: &'a str,
    detail: &'a str,
}

pub fn write_table<W: Write>(
    out: &mut W,
    table: TableId,
    rows: &[TableRow],
    format: Format,
) -> anyhow::Result<()> {
    match format {
        Format::Json => json(out, rows),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in rows {
                w.serialize(TableCsvRow {
                    table: table.as_str(),
                    row: &r.label,
                    source: &r.source,
                    m: r.map_type.m(),
                    n: r.map_type.n(),
                    group_order: r.group_order,
                    genus: r.genus,
                    published: cells(&r.published),
                    computed: cells(&r.computed),
                    status: r.status.as_str(),
                    detail: r.detail.as_deref().unwrap_or(""),
                })?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Table => {
            writeln!(out, "Table {table}: {}", table.title())?;
            let mut lines = vec![[
                "row",
                "type",
                "order",
                "genus",
                "published",
                "computed",
                "status",
            ]
            .map(String::from)
            .to_vec()];
            for r in rows {
                lines.push(vec![
                    r.label.clone(),
                    r.map_type.to_string(),
                    opt(r.group_order),
                    opt(r.genus),
                    cells(&r.published),
                    cells(&r.computed),
                    r.status.to_string(),
                ]);
            }
            write!(out, "{}", aligned(&lines))?;
            for r in rows.iter().filter(|r| r.detail.is_some()) {
                writeln!(out, "  {}: {}", r.label, r.detail.as_deref().unwrap_or(""))?;
            }
            Ok(())
        }
    }
}

/// Tally of suite outcomes.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub budget: usize,
}

impl Summary {
    pub fn of(checks: &[Check]) -> Self {
        let mut s = Self::default();
        for c in checks {
            match c.outcome {
                Outcome::Pass(_) => s.passed += 1,
                Outcome::Fail(_) => s.failed += 1,
                Outcome::Skip(_) => s.skipped += 1,
                Outcome::Budget(_) => s.budget += 1,
            }
        }
        s
    }
}

#[derive(Serialize)]
struct CheckCsvRow<'a> {
    suite: &'a str,
    check: &'a str,
    outcome: &'a str,
    detail: &'a str,
}

pub fn write_checks<W: Write>(out: &mut W, checks: &[Check], format: Format) -> anyhow::Result<()> {
    let summary = Summary::of(checks);
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                checks: &'a [Check],
                summary: Summary,
            }
            json(out, &Doc { checks, summary })
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for c in checks {
                w.serialize(CheckCsvRow {
                    suite: c.suite.as_str(),
                    check: &c.name,
                    outcome: c.outcome.label(),
                    detail: c.outcome.detail(),
                })?;
            }
            w.flush()?;
            Ok(())
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = checks
                .iter()
                .map(|c| {
                    vec![
                        c.outcome.label().to_string(),
                        c.suite.to_string(),
                        c.name.clone(),
                        c.outcome.detail().to_string(),
                    ]
                })
                .collect();
            write!(out, "{}", aligned(&rows))?;
            writeln!(
                out,
                "{} passed, {} failed, {} skipped, {} over budget",
                summary.passed, summary.failed, summary.skipped, summary.budget
            )?;
            Ok(())
        }
    }
}
