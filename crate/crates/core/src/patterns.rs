//! Parity classification of mirror links, mirror-automorphism words, and link indices.
//!
//! For a map of type `{m, n}` the reflections `P`, `Q`, `R` in the sides of a
//! `(2, m, n)`-triangle fix its `01`-, `12`- and `02`-sides. Which link a mirror
//! repeats depends only on the parities of `m` and `n`; the link index is the order
//! of the corresponding mirror automorphism in the rotation group.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hyperbolic_metrics;
use crate::presentations::{
    element_order, enumerate_cosets, Alphabet, CosetTable, EnumerationError, Presentation,
    PresentationError, Word,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("map type {{{m},{n}}} is invalid: both entries must be at least 2")]
    InvalidType { m: u32, n: u32 },
    #[error("link {link} does not occur on maps of type {map_type}")]
    Inadmissible { link: Link, map_type: MapType },
    #[error("unknown link `{0}`")]
    UnknownLink(String),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

/// Map type `{m, n}`: faces are `m`-gons, `n` faces meet at each vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MapType {
    m: u32,
    n: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    OddOdd,
    OddEven,
    EvenEven,
    EvenOdd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Geometry {
    Spherical,
    Euclidean,
    Hyperbolic,
}

impl MapType {
    pub fn new(m: u32, n: u32) -> Result<Self, PatternError> {
        if m < 2 || n < 2 {
            return Err(PatternError::InvalidType { m, n });
        }
        Ok(Self { m, n })
    }

    pub fn m(self) -> u32 {
        self.m
    }

    pub fn n(self) -> u32 {
        self.n
    }

    pub fn dual(self) -> Self {
        Self {
            m: self.n,
            n: self.m,
        }
    }

    pub fn parity(self) -> Parity {
        match (self.m % 2 == 0, self.n % 2 == 0) {
            (false, false) => Parity::OddOdd,
            (false, true) => Parity::OddEven,
            (true, true) => Parity::EvenEven,
            (true, false) => Parity::EvenOdd,
        }
    }

    /// Sign of `1/2 + 1/m + 1/n - 1`, decided in integers: `mn` against `2(m + n)`.
    pub fn geometry(self) -> Geometry {
        let (m, n) = (self.m as u64, self.n as u64);
        match (m * n).cmp(&(2 * (m + n))) {
            std::cmp::Ordering::Less => Geometry::Spherical,
            std::cmp::Ordering::Equal => Geometry::Euclidean,
            std::cmp::Ordering::Greater => Geometry::Hyperbolic,
        }
    }
}

impl fmt::Display for MapType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.m, self.n)
    }
}

/// Which side of the base triangle a reflection fixes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ReflectionClass {
    P,
    Q,
    R,
}

impl ReflectionClass {
    pub const ALL: [ReflectionClass; 3] = [Self::P, Self::Q, Self::R];

    /// Index of the generator in the `P, Q, R` alphabet.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Self {
        Self::ALL[i]
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::P => "P",
            Self::Q => "Q",
            Self::R => "R",
        }
    }

    /// Corner labels at the ends of the fixed side: `P` joins 0 and 1, `Q` joins 1
    /// and 2, `R` joins 0 and 2.
    pub fn side(self) -> [u8; 2] {
        match self {
            Self::P => [0, 1],
            Self::Q => [1, 2],
            Self::R => [0, 2],
        }
    }

    /// Dualizing swaps the roles of `P` and `Q`.
    pub fn dual(self) -> Self {
        match self {
            Self::P => Self::Q,
            Self::Q => Self::P,
            Self::R => Self::R,
        }
    }
}

impl fmt::Display for ReflectionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ReflectionClass {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "P" => Ok(Self::P),
            "Q" => Ok(Self::Q),
            "R" => Ok(Self::R),
            other => Err(PatternError::UnknownLink(other.to_string())),
        }
    }
}

/// The six possible links, named by their canonical label sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Link {
    #[serde(rename = "01")]
    L01,
    #[serde(rename = "02")]
    L02,
    #[serde(rename = "12")]
    L12,
    #[serde(rename = "0102")]
    L0102,
    #[serde(rename = "0212")]
    L0212,
    #[serde(rename = "010212")]
    L010212,
}

impl Link {
    pub const ALL: [Link; 6] = [
        Self::L01,
        Self::L02,
        Self::L12,
        Self::L0102,
        Self::L0212,
        Self::L010212,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::L01 => "01",
            Self::L02 => "02",
            Self::L12 => "12",
            Self::L0102 => "0102",
            Self::L0212 => "0212",
            Self::L010212 => "010212",
        }
    }

    pub fn labels(self) -> Vec<u8> {
        self.as_str().bytes().map(|b| b - b'0').collect()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(self) -> usize {
        self.as_str().len()
    }

    /// The link whose canonical form matches a cyclic label sequence, if any.
    pub fn from_cycle(labels: &[u8]) -> Option<Self> {
        let canon = canonical_rotation(labels);
        Self::ALL.into_iter().find(|l| l.labels() == canon)
    }

    /// Swap 0 and 2, then re-canonicalize.
    pub fn dual(self) -> Self {
        let swapped: Vec<u8> = self.labels().into_iter().map(|c| 2 - c).collect();
        Self::from_cycle(&swapped).expect("the link set is closed under duality")
    }
}

impl fmt::Display for Link {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Link {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| PatternError::UnknownLink(s.to_string()))
    }
}

/// Lexicographically least rotation of a cyclic sequence, over both directions.
pub fn canonical_rotation(labels: &[u8]) -> Vec<u8> {
    let n = labels.len();
    let reversed: Vec<u8> = labels.iter().rev().copied().collect();
    let mut best: Option<Vec<u8>> = None;
    for seq in [labels, &reversed[..]] {
        for k in 0..n {
            let rotated: Vec<u8> = seq[k..].iter().chain(&seq[..k]).copied().collect();
            if best.as_ref().map_or(true, |b| rotated < *b) {
                best = Some(rotated);
            }
        }
    }
    best.unwrap_or_default()
}

/// Number of repetitions of the link; infinite on the universal (non-compact) maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LinkIndex {
    Finite(u64),
    Infinite,
}

impl LinkIndex {
    pub fn finite(self) -> Option<u64> {
        match self {
            Self::Finite(k) => Some(k),
            Self::Infinite => None,
        }
    }
}

impl Serialize for LinkIndex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Self::Finite(k) => s.serialize_u64(*k),
            Self::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Accepts a non-negative integer or the string `"inf"`.
impl<'de> Deserialize<'de> for LinkIndex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Finite(u64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Finite(k) => Ok(Self::Finite(k)),
            Raw::Text(t) if t == "inf" => Ok(Self::Infinite),
            Raw::Text(t) => Err(serde::de::Error::custom(format!("bad link index `{t}`"))),
        }
    }
}

impl fmt::Display for LinkIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(k) => write!(f, "{k}"),
            Self::Infinite => f.write_str("inf"),
        }
    }
}

/// Pattern of the mirrors of one reflection class.
#[derive(Debug, Clone, PartialEq)]
pub struct PatternReport {
    pub class: ReflectionClass,
    pub link: Link,
    pub index: LinkIndex,
    /// Number of disjoint mirrors of reflections in this class, when counted.
    pub mirror_count: Option<u64>,
    /// Hyperbolic length of one mirror, when the type is hyperbolic and the index finite.
    pub length: Option<f64>,
}

impl PatternReport {
    pub fn new(class: ReflectionClass, link: Link, index: LinkIndex) -> Self {
        Self {
            class,
            link,
            index,
            mirror_count: None,
            length: None,
        }
    }

    /// The link written out `index` times, e.g. `01010101`; `(01)^inf` when infinite.
    pub fn pattern(&self) -> String {
        match self.index {
            LinkIndex::Finite(k) => self.link.as_str().repeat(k as usize),
            LinkIndex::Infinite => format!("({})^inf", self.link),
        }
    }

    /// Compact notation, e.g. `(0212)^2`.
    pub fn notation(&self) -> String {
        format!("({})^{}", self.link, self.index)
    }

    /// Fill `length` from the triangle side lengths of a hyperbolic type.
    pub fn with_length_for(mut self, map_type: MapType) -> Self {
        self.length = match self.index {
            LinkIndex::Finite(k) => hyperbolic_metrics::mirror_length(self.link, k, map_type).ok(),
            LinkIndex::Infinite => None,
        };
        self
    }
}

/// The link carried by each of `P`, `Q`, `R` for maps of this type.
pub fn classify_type(map_type: MapType) -> [(ReflectionClass, Link); 3] {
    use Link::*;
    use ReflectionClass::*;
    match map_type.parity() {
        Parity::OddOdd => [(P, L010212), (Q, L010212), (R, L010212)],
        Parity::OddEven => [(P, L01), (Q, L0212), (R, L0212)],
        Parity::EvenEven => [(P, L01), (Q, L12), (R, L02)],
        Parity::EvenOdd => [(P, L0102), (Q, L12), (R, L0102)],
    }
}

/// Patterns of the universal map of this type: every index is infinite.
pub fn universal_patterns(map_type: MapType) -> Vec<PatternReport> {
    classify_type(map_type)
        .into_iter()
        .map(|(c, l)| PatternReport::new(c, l, LinkIndex::Infinite))
        .collect()
}

/// The mirror automorphism of a `link`-mirror as a word in `A, B, C`
/// (generator indices 0, 1, 2).
pub fn mirror_automorphism_word(link: Link, map_type: MapType) -> Result<Word, PatternError> {
    if !classify_type(map_type).iter().any(|&(_, l)| l == link) {
        return Err(PatternError::Inadmissible { link, map_type });
    }
    let (m, n) = (map_type.m() as i64, map_type.n() as i64);
    let a = Word::generator(0);
    let b = |k: i64| Word::power_of(1, k);
    let c = |k: i64| Word::power_of(2, k);
    let parts: Vec<Word> = match link {
        Link::L01 => vec![c(n / 2), a],
        Link::L02 => vec![b(m / 2), c(n / 2)],
        Link::L12 => vec![b(m / 2), a],
        Link::L0102 => vec![c((n + 1) / 2), b(1), c((n + 1) / 2), b(m / 2)],
        Link::L0212 => vec![c(n / 2), b((m + 1) / 2), c(1), b((m + 1) / 2)],
        Link::L010212 => vec![
            b((m + 1) / 2),
            c(1),
            b((m + 1) / 2),
            c((n + 1) / 2),
            b(1),
            c((n + 1) / 2),
        ],
    };
    Ok(parts.iter().fold(Word::identity(), |acc, w| &acc * w))
}

/// Order of the mirror automorphism of `link` in the group whose regular
/// representation is `table` (generators `A, B, C` in positions 0, 1, 2).
pub fn link_index(
    table: &CosetTable,
    link: Link,
    map_type: MapType,
) -> Result<LinkIndex, PatternError> {
    let word = mirror_automorphism_word(link, map_type)?;
    Ok(LinkIndex::Finite(element_order(table, &word)?))
}

/// Rewrite a word over the standard `A, B, C` alphabet onto `presentation`'s.
fn onto_alphabet(word: &Word, presentation: &Presentation) -> Result<Word, PatternError> {
    presentation.require_generators(&["A", "B", "C"])?;
    Ok(word
        .rename(&Alphabet::rotation(), presentation.alphabet())
        .expect("generators checked above"))
}

/// Link index of every reflection class from a rotation presentation over `A, B, C`.
/// Lengths are attached for hyperbolic types; mirror counts are left empty.
pub fn full_pattern_report(
    presentation: &Presentation,
    map_type: MapType,
    budget: usize,
) -> Result<Vec<PatternReport>, PatternError> {
    presentation.require_generators(&["A", "B", "C"])?;
    let table = enumerate_cosets(presentation, &[], budget)?;
    report_from_table(&table, presentation, map_type)
}

/// As [`full_pattern_report`], reusing an enumerated regular representation.
pub fn report_from_table(
    table: &CosetTable,
    presentation: &Presentation,
    map_type: MapType,
) -> Result<Vec<PatternReport>, PatternError> {
    classify_type(map_type)
        .into_iter()
        .map(|(class, link)| {
            let word = onto_alphabet(&mirror_automorphism_word(link, map_type)?, presentation)?;
            let index = LinkIndex::Finite(element_order(table, &word)?);
            Ok(PatternReport::new(class, link, index).with_length_for(map_type))
        })
        .collect()
}

/// Patterns of the dual map: 0 and 2 swap in every link, `P` and `Q` swap roles.
/// Rows come back sorted by class.
pub fn dualize(reports: &[PatternReport]) -> Vec<PatternReport> {
    let mut out: Vec<PatternReport> = reports
        .iter()
        .map(|r| PatternReport {
            class: r.class.dual(),
            link: r.link.dual(),
            ..r.clone()
        })
        .collect();
    out.sort_by_key(|r| r.class);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{parse_presentation, DEFAULT_BUDGET};
    use Link::*;
    use ReflectionClass::*;

    fn t(m: u32, n: u32) -> MapType {
        MapType::new(m, n).unwrap()
    }

    fn abc(w: &Word) -> String {
        w.display(&Alphabet::rotation()).to_string()
    }

    #[test]
    fn classification_by_parity() {
        assert_eq!(classify_type(t(4, 4)), [(P, L01), (Q, L12), (R, L02)]);
        assert_eq!(
            classify_type(t(3, 7)),
            [(P, L010212), (Q, L010212), (R, L010212)]
        );
        assert_eq!(classify_type(t(3, 8)), [(P, L01), (Q, L0212), (R, L0212)]);
        assert_eq!(classify_type(t(6, 3)), [(P, L0102), (Q, L12), (R, L0102)]);
    }

    #[test]
    fn classification_commutes_with_duality() {
        for m in 2..12 {
            for n in 2..12 {
                let mut dual: Vec<(ReflectionClass, Link)> = classify_type(t(m, n))
                    .into_iter()
                    .map(|(c, l)| (c.dual(), l.dual()))
                    .collect();
                dual.sort();
                assert_eq!(dual, classify_type(t(n, m)).to_vec(), "{{{m},{n}}}");
            }
        }
    }

    #[test]
    fn invalid_type() {
        assert_eq!(
            MapType::new(1, 5).unwrap_err(),
            PatternError::InvalidType { m: 1, n: 5 }
        );
    }

    #[test]
    fn geometry_of_types() {
        assert_eq!(t(3, 5).geometry(), Geometry::Spherical);
        assert_eq!(t(2, 9).geometry(), Geometry::Spherical);
        assert_eq!(t(4, 4).geometry(), Geometry::Euclidean);
        assert_eq!(t(3, 6).geometry(), Geometry::Euclidean);
        assert_eq!(t(3, 7).geometry(), Geometry::Hyperbolic);
    }

    #[test]
    fn link_duals() {
        assert_eq!(L01.dual(), L12);
        assert_eq!(L12.dual(), L01);
        assert_eq!(L02.dual(), L02);
        assert_eq!(L0102.dual(), L0212);
        assert_eq!(L0212.dual(), L0102);
        assert_eq!(L010212.dual(), L010212);
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(Link::from_cycle(&[2, 1, 2, 0]), Some(L0212));
        assert_eq!(Link::from_cycle(&[1, 0]), Some(L01));
        assert_eq!(Link::from_cycle(&[2, 1, 2, 0, 1, 0]), Some(L010212));
        assert_eq!(Link::from_cycle(&[0, 1, 1]), None);
    }

    #[test]
    fn mirror_automorphism_words() {
        assert_eq!(
            abc(&mirror_automorphism_word(L12, t(6, 3)).unwrap()),
            "B^3A"
        );
        assert_eq!(
            abc(&mirror_automorphism_word(L010212, t(3, 7)).unwrap()),
            "B^2CB^2C^4BC^4"
        );
        assert_eq!(
            abc(&mirror_automorphism_word(L0212, t(3, 8)).unwrap()),
            "C^4B^2CB^2"
        );
        assert_eq!(
            abc(&mirror_automorphism_word(L01, t(6, 4)).unwrap()),
            "C^2A"
        );
        assert_eq!(
            abc(&mirror_automorphism_word(L02, t(6, 4)).unwrap()),
            "B^3C^2"
        );
        assert_eq!(
            abc(&mirror_automorphism_word(L0102, t(4, 3)).unwrap()),
            "C^2BC^2B^2"
        );
    }

    #[test]
    fn inadmissible_words_are_errors() {
        assert_eq!(
            mirror_automorphism_word(L01, t(3, 7)).unwrap_err(),
            PatternError::Inadmissible {
                link: L01,
                map_type: t(3, 7)
            }
        );
        assert!(mirror_automorphism_word(L12, t(3, 8)).is_err());
        assert!(mirror_automorphism_word(L010212, t(4, 4)).is_err());
    }

    #[test]
    fn hurwitz_link_indices() {
        let klein =
            parse_presentation("gens A B C; rels A^2 B^3 C^7 ABC (B^2CB^2C^4BC^4)^3").unwrap();
        let reports = full_pattern_report(&klein, t(3, 7), DEFAULT_BUDGET).unwrap();
        assert!(reports
            .iter()
            .all(|r| r.link == L010212 && r.index == LinkIndex::Finite(3)));
        let macbeath =
            parse_presentation("gens A B C; rels A^2 B^3 C^7 ABC (B^2CB^2C^4BC^4)^2").unwrap();
        let table = enumerate_cosets(&macbeath, &[], DEFAULT_BUDGET).unwrap();
        assert_eq!(
            link_index(&table, L010212, t(3, 7)).unwrap(),
            LinkIndex::Finite(2)
        );
    }

    #[test]
    fn bolza_link_indices() {
        let bolza = parse_presentation("gens A B C; rels A^2 B^3 C^8 ABC [C^4, B]").unwrap();
        let reports = full_pattern_report(&bolza, t(3, 8), DEFAULT_BUDGET).unwrap();
        let got: Vec<(Link, LinkIndex)> = reports.iter().map(|r| (r.link, r.index)).collect();
        assert_eq!(
            got,
            vec![
                (L01, LinkIndex::Finite(2)),
                (L0212, LinkIndex::Finite(2)),
                (L0212, LinkIndex::Finite(2))
            ]
        );
    }

    #[test]
    fn wiman_one_dual_indices() {
        // {5,10}: the dual of the genus-2 Wiman type I map, a cyclic group of order 10
        let p = parse_presentation("gens A B C; rels A^2 B^5 C^10 ABC [B,C]").unwrap();
        let reports = full_pattern_report(&p, t(5, 10), DEFAULT_BUDGET).unwrap();
        assert!(reports.iter().all(|r| r.index == LinkIndex::Finite(1)));
        assert_eq!(reports[0].link, L01);
        assert_eq!(reports[1].link, L0212);
    }

    #[test]
    fn report_strings() {
        let r = PatternReport::new(Q, L0212, LinkIndex::Finite(2));
        assert_eq!(r.pattern(), "02120212");
        assert_eq!(r.notation(), "(0212)^2");
        let u = PatternReport::new(P, L01, LinkIndex::Infinite);
        assert_eq!(u.notation(), "(01)^inf");
    }

    #[test]
    fn dualize_cube_to_octahedron() {
        let cube = vec![
            PatternReport::new(P, L0102, LinkIndex::Finite(2)),
            PatternReport::new(Q, L12, LinkIndex::Finite(4)),
            PatternReport::new(R, L0102, LinkIndex::Finite(2)),
        ];
        let octa = dualize(&cube);
        assert_eq!(
            octa,
            vec![
                PatternReport::new(P, L01, LinkIndex::Finite(4)),
                PatternReport::new(Q, L0212, LinkIndex::Finite(2)),
                PatternReport::new(R, L0212, LinkIndex::Finite(2)),
            ]
        );
        assert_eq!(dualize(&octa), cube);
    }

    #[test]
    fn universal_patterns_are_infinite() {
        let u = universal_patterns(t(4, 6));
        assert!(u
            .iter()
            .all(|r| r.index == LinkIndex::Infinite && r.length.is_none()));
    }
}
