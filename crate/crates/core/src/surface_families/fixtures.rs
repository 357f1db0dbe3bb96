//! Presentation fixtures on disk: `<dir>/<name>.pres` files plus a `manifest`.
//!
//! Manifest lines read `name m n order [link:index ...] [strategy=felsch]`; `#`
//! starts a comment. `order` is the order of the rotation group.

use std::path::Path;

use super::FamilyError;
use crate::patterns::{report_from_table, Link, MapType, PatternReport};
use crate::presentations::{
    element_order, enumerate_cosets_with, parse_presentation, EnumerationOptions, Presentation,
    Strategy, Word,
};

pub const MANIFEST_FILE: &str = "manifest";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureEntry {
    pub name: String,
    pub map_type: MapType,
    /// Order of the rotation group.
    pub order: u64,
    /// Link indices the fixture is expected to produce.
    pub expected: Vec<(Link, u64)>,
    /// Enumeration strategy the fixture asks for; `None` means the caller's choice.
    pub strategy: Option<Strategy>,
}

impl FixtureEntry {
    /// `<dir>/<name>.pres`
    pub fn path(&self, dir: &Path) -> std::path::PathBuf {
        dir.join(format!("{}.pres", self.name))
    }
}

#[derive(Debug, Clone)]
pub struct FixtureReport {
    pub presentation: Presentation,
    pub map_type: MapType,
    pub order: u64,
    pub reports: Vec<PatternReport>,
}

pub fn parse_manifest(text: &str) -> Result<Vec<FixtureEntry>, FamilyError> {
    let mut entries = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |message: String| FamilyError::Manifest {
            line: i + 1,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() < 4 {
            return Err(bad(format!(
                "expected `name m n order [link:index ...]`, got `{line}`"
            )));
        }
        let num = |s: &str, what: &str| -> Result<u64, FamilyError> {
            s.parse::<u64>()
                .map_err(|_| bad(format!("{what} `{s}` is not a non-negative integer")))
        };
        let m = num(fields[1], "m")? as u32;
        let n = num(fields[2], "n")? as u32;
        let map_type = MapType::new(m, n).map_err(|e| bad(e.to_string()))?;
        let order = num(fields[3], "order")?;
        let mut strategy = None;
        let mut expected = Vec::new();
        for f in &fields[4..] {
            if let Some(name) = f.strip_prefix("strategy=") {
                strategy = Some(match name {
                    "hlt" => Strategy::Hlt,
                    "felsch" => Strategy::Felsch,
                    other => return Err(bad(format!("unknown strategy `{other}`"))),
                });
                continue;
            }
            expected.push({
                let (l, k) = f
                    .split_once(':')
                    .ok_or_else(|| bad(format!("expected link:index, got `{f}`")))?;
                let link: Link = l.parse().map_err(|_| bad(format!("unknown link `{l}`")))?;
                (link, num(k, "index")?)
            });
        }
        entries.push(FixtureEntry {
            name: fields[0].to_string(),
            map_type,
            order,
            expected,
            strategy,
        });
    }
    Ok(entries)
}

/// Read `<dir>/manifest`; a missing directory or manifest yields no entries.
pub fn load_manifest(dir: &Path) -> Result<Vec<FixtureEntry>, FamilyError> {
    let path = dir.join(MANIFEST_FILE);
    match std::fs::read_to_string(&path) {
        Ok(text) => parse_manifest(&text),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(Vec::new()),
        Err(source) => Err(FamilyError::Io {
            path: path.display().to_string(),
            source,
        }),
    }
}

pub(crate) fn read_presentation(path: &Path) -> Result<Presentation, FamilyError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| FamilyError::Io {
        path: shown.clone(),
        source,
    })?;
    parse_presentation(&text).map_err(|source| FamilyError::Parse {
        path: shown,
        source,
    })
}

/// Enumerate a fixture's rotation group and report its patterns. The declared type
/// must match the actual orders of `A`, `B`, `C` in the group.
pub fn fixture_map(
    path: &Path,
    map_type: MapType,
    options: EnumerationOptions,
) -> Result<FixtureReport, FamilyError> {
    let presentation = read_presentation(path)?;
    let gens = presentation
        .require_generators(&["A", "B", "C"])
        .map_err(crate::patterns::PatternError::from)?;
    let table = enumerate_cosets_with(&presentation, &[], options)?;
    let mut orders = [0u64; 3];
    for (o, &g) in orders.iter_mut().zip(&gens) {
        *o = element_order(&table, &Word::generator(g))?;
    }
    if orders != [2, map_type.m() as u64, map_type.n() as u64] {
        return Err(FamilyError::InconsistentType {
            name: path.display().to_string(),
            declared: map_type,
            orders,
        });
    }
    let reports = report_from_table(&table, &presentation, map_type)?;
    Ok(FixtureReport {
        order: table.len() as u64,
        presentation,
        map_type,
        reports,
    })
}
