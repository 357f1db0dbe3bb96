//! Reproduction of the published tables: each row pairs the published values with a
//! way to recompute them, and evaluates to a [`TableRow`] with a status.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::flag_tracer::verify_against_patterns;
use crate::lattice_tori::{toroidal_patterns, ToroidalMapId, TorusFamily, TorusVariant};
use crate::patterns::{classify_type, Link, LinkIndex, MapType, PatternReport};
use crate::presentations::{EnumerationOptions, Strategy, DEFAULT_BUDGET};
use crate::surface_families::{
    accola_maclachlan, bolza, dihedron, fermat, fixture_map, genus_from_order, hosohedron, hurwitz,
    hurwitz_quotient, load_manifest, platonic, torus, wiman_i, wiman_ii, FamilyMap, FixtureEntry,
    Solid,
};
use crate::Error;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Budget, fixture directory and the fixture manifest, shared by table rows and suites.
#[derive(Debug, Clone)]
pub struct RunContext {
    pub budget: usize,
    pub fixtures: Option<PathBuf>,
    /// Strategy for fixtures whose manifest line names none.
    pub strategy: Strategy,
    /// Opt in to checks that need far more than desk-scale time and memory.
    pub long_run: bool,
    /// Absolute tolerance for length comparisons.
    pub tolerance: f64,
    pub(crate) manifest: Vec<FixtureEntry>,
}

impl Default for RunContext {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            fixtures: None,
            strategy: Strategy::Hlt,
            long_run: false,
            tolerance: DEFAULT_TOLERANCE,
            manifest: Vec::new(),
        }
    }
}

impl RunContext {
    /// Load the manifest under `fixtures`, if given.
    pub fn new(
        budget: usize,
        fixtures: Option<PathBuf>,
        strategy: Strategy,
    ) -> Result<Self, Error> {
        let manifest = match &fixtures {
            Some(dir) => load_manifest(dir)?,
            None => Vec::new(),
        };
        Ok(Self {
            budget,
            fixtures,
            strategy,
            long_run: false,
            tolerance: DEFAULT_TOLERANCE,
            manifest,
        })
    }

    pub fn manifest(&self) -> &[FixtureEntry] {
        &self.manifest
    }

    /// Manifest entry and its directory, when the fixture exists on disk.
    pub fn fixture(&self, name: &str) -> Option<(&FixtureEntry, &Path)> {
        let dir = self.fixtures.as_deref()?;
        let entry = self.manifest.iter().find(|e| e.name == name)?;
        entry.path(dir).is_file().then_some((entry, dir))
    }

    pub fn options_for(&self, entry: &FixtureEntry) -> EnumerationOptions {
        EnumerationOptions {
            budget: self.budget,
            strategy: entry.strategy.unwrap_or(self.strategy),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableId {
    /// Spherical maps.
    #[serde(rename = "1")]
    Spherical,
    /// Links of universal maps by parity.
    #[serde(rename = "2")]
    Universal,
    #[serde(rename = "4")]
    GenusTwo,
    #[serde(rename = "5")]
    GenusThree,
    /// Hurwitz maps.
    #[serde(rename = "7")]
    Hurwitz,
    /// `{4,4}` tori for a given `b`.
    #[serde(rename = "t41")]
    SquareTori,
    /// `{3,6}` tori for a given `b`.
    #[serde(rename = "t42")]
    TriangularTori,
}

impl TableId {
    pub const ALL: [TableId; 7] = [
        Self::Spherical,
        Self::Universal,
        Self::GenusTwo,
        Self::GenusThree,
        Self::Hurwitz,
        Self::SquareTori,
        Self::TriangularTori,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Spherical => "1",
            Self::Universal => "2",
            Self::GenusTwo => "4",
            Self::GenusThree => "5",
            Self::Hurwitz => "7",
            Self::SquareTori => "t41",
            Self::TriangularTori => "t42",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            Self::Spherical => "spherical maps and patterns",
            Self::Universal => "links of universal maps",
            Self::GenusTwo => "patterns of mirrors, genus 2",
            Self::GenusThree => "patterns of mirrors, genus 3",
            Self::Hurwitz => "link indices of Hurwitz maps",
            Self::SquareTori => "square tori {4,4}",
            Self::TriangularTori => "triangular tori {3,6}",
        }
    }

    /// Whether the table is parametrised by `b`.
    pub fn takes_b(self) -> bool {
        matches!(self, Self::SquareTori | Self::TriangularTori)
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown table `{0}`; expected one of 1, 2, 4, 5, 7, t41, t42")]
pub struct UnknownTable(pub String);

impl FromStr for TableId {
    type Err = UnknownTable;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| UnknownTable(s.to_string()))
    }
}

/// One `(link, index)` cell of a table, with the mirror count when the table gives one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PatternEntry {
    pub link: Link,
    pub index: LinkIndex,
    pub count: Option<u64>,
}

impl PatternEntry {
    pub fn new(link: Link, index: u64) -> Self {
        Self {
            link,
            index: LinkIndex::Finite(index),
            count: None,
        }
    }

    pub fn counted(link: Link, index: u64, count: u64) -> Self {
        Self {
            count: Some(count),
            ..Self::new(link, index)
        }
    }
}

impl fmt::Display for PatternEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.count {
            write!(f, "{c} x ")?;
        }
        write!(f, "({})^{}", self.link, self.index)
    }
}

/// Distinct cells of a report, sorted; classes with equal cells merge.
pub fn entries_of(reports: &[PatternReport], with_counts: bool) -> Vec<PatternEntry> {
    let mut out: Vec<PatternEntry> = reports
        .iter()
        .map(|r| PatternEntry {
            link: r.link,
            index: r.index,
            count: if with_counts { r.mirror_count } else { None },
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

fn sorted(mut v: Vec<PatternEntry>) -> Vec<PatternEntry> {
    v.sort();
    v.dedup();
    v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowStatus {
    Verified,
    FixtureMissing,
    Optional,
    Mismatch,
}

impl RowStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Verified => "verified",
            Self::FixtureMissing => "fixture-missing",
            Self::Optional => "optional",
            Self::Mismatch => "mismatch",
        }
    }
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An evaluated table row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub table: TableId,
    pub label: String,
    /// Where the computed values came from.
    pub source: String,
    pub map_type: MapType,
    /// The order printed in the table (full group for genus 2/3, rotation group otherwise).
    pub group_order: Option<u64>,
    pub genus: Option<u64>,
    pub published: Vec<PatternEntry>,
    pub computed: Vec<PatternEntry>,
    /// Per-class computed reports; empty when nothing was computed.
    #[serde(skip)]
    pub reports: Vec<PatternReport>,
    pub status: RowStatus,
    /// Explanation for any status other than `verified`.
    pub detail: Option<String>,
}

#[derive(Debug, Clone)]
enum Source {
    /// Traced and compared with the word-derived patterns; counts included when `counts`.
    Traced {
        map: FamilyMap,
        counts: bool,
    },
    /// Universal link assignment of a parity class, traced on a representative map.
    Universal(FamilyMap),
    Fixture(&'static str),
    HurwitzQuotient(u32),
    /// Lattice computation, traced as well when `trace`.
    Torus {
        id: ToroidalMapId,
        trace: bool,
    },
}

/// A row before evaluation: the published values and how to recompute them.
#[derive(Debug, Clone)]
pub struct RowSpec {
    pub table: TableId,
    pub label: String,
    pub map_type: MapType,
    pub published: Vec<PatternEntry>,
    pub published_order: Option<u64>,
    pub published_genus: Option<u64>,
    source: Source,
}

fn mt(m: u32, n: u32) -> MapType {
    MapType::new(m, n).expect("table types are valid")
}

impl RowSpec {
    fn new(table: TableId, label: impl Into<String>, map_type: MapType, source: Source) -> Self {
        Self {
            table,
            label: label.into(),
            map_type,
            published: Vec::new(),
            published_order: None,
            published_genus: None,
            source,
        }
    }

    fn publish(mut self, entries: impl IntoIterator<Item = PatternEntry>) -> Self {
        self.published = sorted(entries.into_iter().collect());
        self
    }

    fn order(mut self, order: u64) -> Self {
        self.published_order = Some(order);
        self
    }

    fn genus(mut self, genus: u64) -> Self {
        self.published_genus = Some(genus);
        self
    }

    pub fn source_name(&self) -> String {
        match &self.source {
            Source::Traced { map, .. } | Source::Universal(map) => map.name.clone(),
            Source::Fixture(name) => format!("fixture {name}"),
            Source::HurwitzQuotient(k) => format!("hurwitz K={k}"),
            Source::Torus { id, .. } => format!("lattice {id}"),
        }
    }

    fn row(&self, source: String) -> TableRow {
        TableRow {
            table: self.table,
            label: self.label.clone(),
            source,
            map_type: self.map_type,
            group_order: None,
            genus: None,
            published: self.published.clone(),
            computed: Vec::new(),
            reports: Vec::new(),
            status: RowStatus::Verified,
            detail: None,
        }
    }

    /// Recompute the row. Enumeration and tracing failures are errors; disagreement
    /// with the published values is a `mismatch` status.
    pub fn evaluate(&self, ctx: &RunContext) -> Result<TableRow, Error> {
        let mut row = self.row(self.source_name());
        let mut problems = Vec::new();
        // order column: full group for genus 2 and 3 tables
        let full = matches!(self.table, TableId::GenusTwo | TableId::GenusThree);
        match &self.source {
            Source::Traced { map, counts } => {
                let v = verify_against_patterns(&map.presentation, map.map_type, ctx.budget)?;
                if !v.agrees() {
                    problems.push("tracer and mirror-automorphism words disagree".to_string());
                }
                row.reports = v.reports();
                row.computed = entries_of(&row.reports, *counts);
                row.genus = Some(v.genus);
                row.group_order = Some(v.rotation_order as u64 * if full { 2 } else { 1 });
            }
            Source::Universal(map) => {
                let v = verify_against_patterns(&map.presentation, map.map_type, ctx.budget)?;
                let universal = classify_type(map.map_type);
                for c in &v.classes {
                    if c.traced.0 != universal[c.class.index()].1 {
                        problems.push(format!(
                            "class {} traces link {} on {}",
                            c.class, c.traced.0, map.name
                        ));
                    }
                }
                row.reports = v.reports();
                // the table lists links only
                row.computed = sorted(
                    v.classes
                        .iter()
                        .map(|c| PatternEntry {
                            link: c.traced.0,
                            index: LinkIndex::Infinite,
                            count: None,
                        })
                        .collect(),
                );
            }
            Source::Fixture(name) => {
                let Some((entry, dir)) = ctx.fixture(name) else {
                    row.status = RowStatus::FixtureMissing;
                    row.detail = Some(format!("no fixture `{name}` in the manifest"));
                    return Ok(row);
                };
                if entry.map_type != self.map_type {
                    problems.push(format!(
                        "fixture declares type {}, table row has {}",
                        entry.map_type, self.map_type
                    ));
                }
                let r = fixture_map(&entry.path(dir), entry.map_type, ctx.options_for(entry))?;
                row.reports = r.reports;
                row.computed = entries_of(&row.reports, false);
                row.genus = genus_from_order(r.map_type, r.order).ok();
                row.group_order = Some(r.order * if full { 2 } else { 1 });
            }
            Source::HurwitzQuotient(k) => {
                let q = hurwitz_quotient(*k, ctx.budget)?;
                row.reports = q.reports;
                row.computed = entries_of(&row.reports, false);
                row.genus = q.genus;
                row.group_order = Some(q.order);
            }
            Source::Torus { id, trace } => {
                row.reports = toroidal_patterns(*id)?;
                row.computed = entries_of(&row.reports, false);
                row.genus = Some(1);
                row.group_order = Some(id.rotation_order());
                if *trace {
                    let map = torus(*id)?;
                    let v = verify_against_patterns(&map.presentation, map.map_type, ctx.budget)?;
                    if !v.agrees() {
                        problems.push("tracer and mirror-automorphism words disagree".to_string());
                    }
                    if entries_of(&v.reports(), false) != row.computed {
                        problems.push("lattice and enumeration disagree".to_string());
                    }
                    if v.rotation_order as u64 != id.rotation_order() {
                        problems.push(format!(
                            "enumerated rotation order {} differs from {}",
                            v.rotation_order,
                            id.rotation_order()
                        ));
                    }
                }
            }
        }
        if row.computed != self.published {
            problems.push(format!(
                "published {} computed {}",
                join(&self.published),
                join(&row.computed)
            ));
        }
        if let (Some(p), Some(c)) = (self.published_order, row.group_order) {
            if p != c {
                problems.push(format!("published order {p}, computed {c}"));
            }
        }
        if let Some(p) = self.published_genus {
            if row.genus != Some(p) {
                problems.push(format!("published genus {p}, computed {:?}", row.genus));
            }
        }
        if !problems.is_empty() {
            row.status = RowStatus::Mismatch;
            row.detail = Some(problems.join("; "));
        }
        Ok(row)
    }
}

fn join(entries: &[PatternEntry]) -> String {
    let parts: Vec<String> = entries.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

/// Rows of a table in published order. `b` is used by the torus tables only.
pub fn table_rows(table: TableId, b: u32) -> Result<Vec<RowSpec>, Error> {
    use Link::*;
    let e = PatternEntry::new;
    let c = PatternEntry::counted;
    let traced = |map: FamilyMap| Source::Traced { map, counts: false };
    let rows = match table {
        TableId::Spherical => {
            let mut rows = Vec::new();
            let solid = |s: Solid, entries: Vec<PatternEntry>| {
                let map = platonic(s);
                RowSpec::new(
                    table,
                    s.name(),
                    map.map_type,
                    Source::Traced { map, counts: true },
                )
                .publish(entries)
                .genus(0)
            };
            rows.push(solid(Solid::Tetrahedron, vec![c(L010212, 1, 6)]));
            rows.push(solid(Solid::Octahedron, vec![c(L01, 4, 3), c(L0212, 2, 6)]));
            rows.push(solid(Solid::Cube, vec![c(L12, 4, 3), c(L0102, 2, 6)]));
            rows.push(solid(Solid::Icosahedron, vec![c(L010212, 2, 15)]));
            rows.push(solid(Solid::Dodecahedron, vec![c(L010212, 2, 15)]));
            for n in 2..=8u32 {
                let k = n as u64;
                let entries = if n % 2 == 1 {
                    vec![c(L12, k, 1), c(L0102, 1, k)]
                } else {
                    vec![c(L01, 2, k / 2), c(L02, 2, k / 2), c(L12, k, 1)]
                };
                let map = hosohedron(n)?;
                rows.push(
                    RowSpec::new(
                        table,
                        format!("hosohedron n={n}"),
                        map.map_type,
                        Source::Traced { map, counts: true },
                    )
                    .publish(entries)
                    .genus(0),
                );
            }
            for n in 2..=8u32 {
                let k = n as u64;
                let entries = if n % 2 == 1 {
                    vec![c(L01, k, 1), c(L0212, 1, k)]
                } else {
                    vec![c(L01, k, 1), c(L02, 2, k / 2), c(L12, 2, k / 2)]
                };
                let map = dihedron(n)?;
                rows.push(
                    RowSpec::new(
                        table,
                        format!("dihedron n={n}"),
                        map.map_type,
                        Source::Traced { map, counts: true },
                    )
                    .publish(entries)
                    .genus(0),
                );
            }
            rows
        }
        TableId::Universal => {
            let any = |l: Link| PatternEntry {
                link: l,
                index: LinkIndex::Infinite,
                count: None,
            };
            let row = |label: &str, map: FamilyMap, links: &[Link]| {
                RowSpec::new(table, label, map.map_type, Source::Universal(map.clone()))
                    .publish(links.iter().map(|&l| any(l)))
            };
            vec![
                row("m, n odd", platonic(Solid::Tetrahedron), &[L010212]),
                row("m odd, n even", platonic(Solid::Octahedron), &[L01, L0212]),
                row(
                    "m, n even",
                    torus(ToroidalMapId::new(
                        TorusFamily::Square,
                        TorusVariant::B0,
                        2,
                    )?)?,
                    &[L01, L12, L02],
                ),
                row("m even, n odd", platonic(Solid::Cube), &[L0102, L12]),
            ]
        }
        TableId::GenusTwo => vec![
            RowSpec::new(table, "M.2.1", mt(3, 8), traced(bolza()))
                .publish([e(L01, 2), e(L0212, 2)])
                .order(96),
            RowSpec::new(
                table,
                "M.2.2",
                mt(4, 6),
                traced(accola_maclachlan(2)?.dual()),
            )
            .publish([e(L01, 4), e(L02, 2), e(L12, 2)])
            .order(48),
            RowSpec::new(table, "M.2.3", mt(4, 8), Source::Fixture("m.2.3"))
                .publish([e(L01, 2), e(L02, 1), e(L12, 2)])
                .order(32),
            RowSpec::new(table, "M.2.4", mt(6, 6), Source::Fixture("m.2.4"))
                .publish([e(L01, 2), e(L02, 2), e(L12, 2)])
                .order(24),
            RowSpec::new(table, "M.2.5", mt(5, 10), traced(wiman_i(2)?.dual()))
                .publish([e(L01, 1), e(L0212, 1)])
                .order(20),
            RowSpec::new(table, "M.2.6", mt(8, 8), Source::Fixture("m.2.6"))
                .publish([e(L01, 1), e(L02, 1), e(L12, 1)])
                .order(16),
        ]
        .into_iter()
        .map(|r| r.genus(2))
        .collect(),
        TableId::GenusThree => {
            let three = |label: &str, m, n, source, k: [u64; 3], order| {
                RowSpec::new(table, label, mt(m, n), source)
                    .publish([e(L01, k[0]), e(L02, k[1]), e(L12, k[2])])
                    .order(order)
            };
            vec![
                RowSpec::new(table, "M.3.1", mt(3, 7), traced(hurwitz(3)?))
                    .publish([e(L010212, 3)])
                    .order(336),
                RowSpec::new(table, "M.3.2", mt(3, 8), traced(fermat(4)?))
                    .publish([e(L01, 4), e(L0212, 2)])
                    .order(192),
                RowSpec::new(table, "M.3.3", mt(3, 12), Source::Fixture("m.3.3"))
                    .publish([e(L01, 2), e(L0212, 2)])
                    .order(96),
                three("M.3.4", 4, 6, Source::Fixture("m.3.4"), [2, 2, 4], 96),
                three(
                    "M.3.5",
                    4,
                    8,
                    traced(accola_maclachlan(3)?.dual()),
                    [2, 2, 2],
                    64,
                ),
                three("M.3.6", 4, 8, Source::Fixture("m.3.6"), [2, 2, 4], 64),
                three("M.3.7", 4, 12, traced(wiman_ii(3)?.dual()), [2, 1, 2], 48),
                three("M.3.8", 6, 6, Source::Fixture("m.3.8"), [2, 1, 2], 48),
                three("M.3.9", 8, 8, Source::Fixture("m.3.9"), [2, 1, 2], 32),
                three("M.3.10", 8, 8, Source::Fixture("m.3.10"), [2, 1, 2], 32),
                RowSpec::new(table, "M.3.11", mt(7, 14), traced(wiman_i(3)?.dual()))
                    .publish([e(L01, 1), e(L0212, 1)])
                    .order(28),
                three("M.3.12", 12, 12, Source::Fixture("m.3.12"), [1, 1, 1], 24),
            ]
            .into_iter()
            .map(|r| r.genus(3))
            .collect()
        }
        TableId::Hurwitz => {
            let published: [(&str, u64, u64, u64); 10] = [
                ("H1", 3, 168, 3),
                ("H2", 7, 504, 2),
                ("H3", 14, 1092, 7),
                ("H4", 14, 1092, 7),
                ("H5", 14, 1092, 6),
                ("H6", 118, 9828, 13),
                ("H7", 129, 10752, 6),
                ("H8", 146, 12180, 15),
                ("H9", 146, 12180, 15),
                ("H10", 146, 12180, 14),
            ];
            const FIXTURES: [&str; 8] = ["h3", "h4", "h5", "h6", "h7", "h8", "h9", "h10"];
            published
                .into_iter()
                .enumerate()
                .map(|(i, (label, genus, order, k))| {
                    let source = match i {
                        0 => Source::HurwitzQuotient(3),
                        1 => Source::HurwitzQuotient(2),
                        _ => Source::Fixture(FIXTURES[i - 2]),
                    };
                    RowSpec::new(table, label, mt(3, 7), source)
                        .publish([e(L010212, k)])
                        .order(order)
                        .genus(genus)
                })
                .collect()
        }
        TableId::SquareTori | TableId::TriangularTori => {
            if b == 0 {
                return Err(crate::lattice_tori::LatticeError::ZeroParameter.into());
            }
            let k = b as u64;
            let family = if table == TableId::SquareTori {
                TorusFamily::Square
            } else {
                TorusFamily::Triangular
            };
            [TorusVariant::B0, TorusVariant::BB]
                .into_iter()
                .map(|variant| {
                    let id = ToroidalMapId::new(family, variant, b)?;
                    let published = match (family, variant) {
                        (TorusFamily::Square, TorusVariant::B0) => {
                            vec![e(L01, k), e(L02, k), e(L12, k)]
                        }
                        (TorusFamily::Square, _) => vec![e(L01, 2 * k), e(L02, k), e(L12, 2 * k)],
                        (_, TorusVariant::B0) => vec![e(L01, k), e(L0212, k)],
                        (_, _) => vec![e(L01, 3 * k), e(L0212, k)],
                    };
                    Ok(RowSpec::new(
                        table,
                        id.to_string(),
                        id.map_type(),
                        Source::Torus { id, trace: b <= 3 },
                    )
                    .publish(published)
                    .order(id.rotation_order())
                    .genus(1))
                })
                .collect::<Result<Vec<_>, Error>>()?
        }
    };
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixtures_dir() -> PathBuf {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
    }

    fn eval_all(table: TableId, b: u32, ctx: &RunContext) -> Vec<TableRow> {
        table_rows(table, b)
            .unwrap()
            .iter()
            .map(|r| r.evaluate(ctx).unwrap())
            .collect()
    }

    #[test]
    fn table_ids_round_trip() {
        for t in TableId::ALL {
            assert_eq!(t.as_str().parse::<TableId>().unwrap(), t);
        }
        assert!("3".parse::<TableId>().is_err());
    }

    #[test]
    fn spherical_rows_all_verified() {
        for row in eval_all(TableId::Spherical, 0, &RunContext::default()) {
            assert_eq!(
                row.status,
                RowStatus::Verified,
                "{}: {:?}",
                row.label,
                row.detail
            );
        }
    }

    #[test]
    fn universal_rows_verified() {
        for row in eval_all(TableId::Universal, 0, &RunContext::default()) {
            assert_eq!(
                row.status,
                RowStatus::Verified,
                "{}: {:?}",
                row.label,
                row.detail
            );
        }
    }

    #[test]
    fn genus_tables_without_fixtures() {
        for table in [TableId::GenusTwo, TableId::GenusThree] {
            for row in eval_all(table, 0, &RunContext::default()) {
                assert_ne!(
                    row.status,
                    RowStatus::Mismatch,
                    "{}: {:?}",
                    row.label,
                    row.detail
                );
            }
        }
    }

    #[test]
    fn genus_tables_with_shipped_fixtures() {
        let ctx = RunContext::new(DEFAULT_BUDGET, Some(fixtures_dir()), Strategy::Hlt).unwrap();
        let rows = eval_all(TableId::GenusTwo, 0, &ctx);
        assert!(
            rows.iter().all(|r| r.status == RowStatus::Verified),
            "{rows:#?}"
        );
        let rows = eval_all(TableId::GenusThree, 0, &ctx);
        let missing: Vec<&str> = rows
            .iter()
            .filter(|r| r.status == RowStatus::FixtureMissing)
            .map(|r| r.label.as_str())
            .collect();
        assert!(rows.iter().all(|r| r.status != RowStatus::Mismatch));
        assert_eq!(
            missing,
            ["M.3.3", "M.3.4", "M.3.6", "M.3.8", "M.3.9", "M.3.10"]
        );
    }

    #[test]
    fn hurwitz_table_first_rows() {
        let rows = eval_all(TableId::Hurwitz, 0, &RunContext::default());
        assert_eq!(rows[0].status, RowStatus::Verified);
        assert_eq!(rows[1].status, RowStatus::Verified);
        assert!(rows[2..]
            .iter()
            .all(|r| r.status == RowStatus::FixtureMissing));
    }

    #[test]
    fn torus_tables() {
        for b in 1..=6 {
            for t in [TableId::SquareTori, TableId::TriangularTori] {
                for row in eval_all(t, b, &RunContext::default()) {
                    assert_eq!(
                        row.status,
                        RowStatus::Verified,
                        "{}: {:?}",
                        row.label,
                        row.detail
                    );
                }
            }
        }
        assert!(table_rows(TableId::SquareTori, 0).is_err());
    }

    #[test]
    fn mismatch_is_reported() {
        let mut spec = table_rows(TableId::GenusTwo, 0).unwrap().remove(0);
        spec.published = vec![PatternEntry::new(Link::L01, 3)];
        let row = spec.evaluate(&RunContext::default()).unwrap();
        assert_eq!(row.status, RowStatus::Mismatch);
        assert!(row.detail.unwrap().contains("published"));
    }
}
