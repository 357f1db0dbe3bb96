//! Report schema and output formatting for the `regmap` binary.

pub mod render;

use serde::{Deserialize, Serialize};

use regmap_core::{Link, LinkIndex, MapType, PatternReport, ReflectionClass};

/// Output format selected on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

/// One reflection class of a [`MapReport`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MirrorRecord {
    pub class: ReflectionClass,
    pub link: Link,
    pub index: LinkIndex,
    pub pattern: String,
    pub count: Option<u64>,
    pub length: Option<f64>,
}

impl From<&PatternReport> for MirrorRecord {
    fn from(r: &PatternReport) -> Self {
        Self {
            class: r.class,
            link: r.link,
            index: r.index,
            pattern: r.pattern(),
            count: r.mirror_count,
            length: r.length,
        }
    }
}

impl From<&MirrorRecord> for PatternReport {
    fn from(m: &MirrorRecord) -> Self {
        let mut r = PatternReport::new(m.class, m.link, m.index);
        r.mirror_count = m.count;
        r.length = m.length;
        r
    }
}

/// Everything `regmap pattern` prints about one map.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MapReport {
    pub family: String,
    #[serde(rename = "type")]
    pub map_type: [u32; 2],
    /// Order of the rotation group.
    pub group_order: u64,
    pub genus: Option<u64>,
    pub mirrors: Vec<MirrorRecord>,
}

impl MapReport {
    pub fn new(
        family: impl Into<String>,
        map_type: MapType,
        group_order: u64,
        genus: Option<u64>,
        reports: &[PatternReport],
    ) -> Self {
        Self {
            family: family.into(),
            map_type: [map_type.m(), map_type.n()],
            group_order,
            genus,
            mirrors: reports.iter().map(MirrorRecord::from).collect(),
        }
    }

    pub fn pattern_reports(&self) -> Vec<PatternReport> {
        self.mirrors.iter().map(PatternReport::from).collect()
    }
}
