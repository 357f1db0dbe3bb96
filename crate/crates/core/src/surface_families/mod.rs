//! Named families of regular maps with their presentations and expected mirror patterns.

mod fixtures;
mod matrices;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use fixtures::{
    fixture_map, load_manifest, parse_manifest, FixtureEntry, FixtureReport, MANIFEST_FILE,
};
pub use matrices::{
    bolza_generators, closure_size, evaluate, fermat_generators, GroupElement, MatrixModP,
    MonomialMatrix,
};

use crate::lattice_tori::{LatticeError, ToroidalMapId, TorusFamily, TorusVariant};
use crate::patterns::{
    full_pattern_report, mirror_automorphism_word, Link, LinkIndex, MapType, PatternError,
    PatternReport, ReflectionClass,
};
use crate::presentations::{
    element_order, enumerate_cosets, EnumerationError, ParseError, Presentation, Word,
};

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("{family} needs {requirement}, got {value}")]
    InvalidParameter {
        family: &'static str,
        requirement: &'static str,
        value: u32,
    },
    #[error("group order {order} is incompatible with type {map_type}: V, E, F must be integers and the Euler characteristic even and at most 2")]
    GenusDivisibility { map_type: MapType, order: u64 },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("manifest line {line}: {message}")]
    Manifest { line: usize, message: String },
    #[error(
        "fixture {name}: declared type {declared} but the group has A, B, C of orders {orders:?}"
    )]
    InconsistentType {
        name: String,
        declared: MapType,
        orders: [u64; 3],
    },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

impl FamilyError {
    /// Whether the failure is the coset budget running out rather than bad input.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            FamilyError::Enumeration(EnumerationError::BudgetExceeded { .. })
                | FamilyError::Pattern(PatternError::Enumeration(
                    EnumerationError::BudgetExceeded { .. }
                ))
        )
    }
}

/// Genus from the Euler characteristic `V − E + F` with `V = o/n`, `E = o/2`, `F = o/m`.
pub fn genus_from_order(map_type: MapType, rotation_order: u64) -> Result<u64, FamilyError> {
    let o = rotation_order;
    let (m, n) = (map_type.m() as u64, map_type.n() as u64);
    let err = || FamilyError::GenusDivisibility {
        map_type,
        order: rotation_order,
    };
    if o == 0 || o % m != 0 || o % n != 0 || o % 2 != 0 {
        return Err(err());
    }
    let chi = (o / n + o / m) as i64 - (o / 2) as i64;
    if chi > 2 || chi % 2 != 0 {
        return Err(err());
    }
    Ok(((2 - chi) / 2) as u64)
}

/// A regular map given by a presentation of its rotation group, with the
/// patterns it is known to have (empty when no closed form is known).
#[derive(Debug, Clone)]
pub struct FamilyMap {
    pub name: String,
    pub presentation: Presentation,
    pub map_type: MapType,
    pub expected: Vec<PatternReport>,
}

impl FamilyMap {
    fn new(
        name: impl Into<String>,
        presentation: Presentation,
        map_type: MapType,
        expected: [(Link, u64); 3],
    ) -> Self {
        let expected = ReflectionClass::ALL
            .into_iter()
            .zip(expected)
            .map(|(c, (l, k))| {
                PatternReport::new(c, l, LinkIndex::Finite(k)).with_length_for(map_type)
            })
            .collect();
        Self {
            name: name.into(),
            presentation,
            map_type,
            expected,
        }
    }

    /// The dual map: dual presentation, dual type, dualized expectations.
    pub fn dual(&self) -> Self {
        Self {
            name: format!("dual {}", self.name),
            presentation: self
                .presentation
                .dual_rotation()
                .expect("family presentations are over A, B, C"),
            map_type: self.map_type.dual(),
            expected: crate::patterns::dualize(&self.expected)
                .into_iter()
                .map(|r| r.with_length_for(self.map_type.dual()))
                .collect(),
        }
    }

    /// Patterns computed from the presentation by coset enumeration.
    pub fn computed(&self, budget: usize) -> Result<Vec<PatternReport>, FamilyError> {
        Ok(full_pattern_report(
            &self.presentation,
            self.map_type,
            budget,
        )?)
    }

    /// Presentation of the full automorphism group over `P, Q, R`.
    pub fn extended(&self) -> Presentation {
        self.presentation
            .extend_to_reflections(self.map_type.m(), self.map_type.n())
            .expect("family presentations are over A, B, C")
    }
}

fn type_of(m: u32, n: u32) -> MapType {
    MapType::new(m, n).expect("family types are valid")
}

fn rotation(m: u32, n: u32, extra: &[Word]) -> Presentation {
    Presentation::triangle_rotation(m, n)
        .with_relators(extra.iter().cloned())
        .expect("family relators are non-empty")
}

fn abc(text: &str) -> Word {
    crate::presentations::parse_word(text, &crate::presentations::Alphabet::rotation())
        .expect("built-in words parse")
}

fn require(
    family: &'static str,
    requirement: &'static str,
    ok: bool,
    value: u32,
) -> Result<(), FamilyError> {
    if ok {
        Ok(())
    } else {
        Err(FamilyError::InvalidParameter {
            family,
            requirement,
            value,
        })
    }
}

/// Type `{2g+2, 4}`, rotation group of order `8(g+1)` with the extra relator `(C⁻¹B)²`.
pub fn accola_maclachlan(g: u32) -> Result<FamilyMap, FamilyError> {
    require("accola-maclachlan", "genus >= 2", g >= 2, g)?;
    let t = type_of(2 * g + 2, 4);
    let q = if g % 2 == 1 { 2 } else { 4 };
    Ok(FamilyMap::new(
        format!("accola-maclachlan g={g}"),
        rotation(t.m(), t.n(), &[abc("(C^-1B)^2")]),
        t,
        [(Link::L01, 2), (Link::L12, q), (Link::L02, 2)],
    ))
}

/// Type `{4g+2, 2g+1}` with cyclic rotation group of order `4g+2`, forced by `[B, C]`.
pub fn wiman_i(g: u32) -> Result<FamilyMap, FamilyError> {
    require("wiman-i", "genus >= 2", g >= 2, g)?;
    let t = type_of(4 * g + 2, 2 * g + 1);
    Ok(FamilyMap::new(
        format!("wiman-i g={g}"),
        rotation(t.m(), t.n(), &[abc("[B,C]")]),
        t,
        [(Link::L0102, 1), (Link::L12, 1), (Link::L0102, 1)],
    ))
}

/// Type `{4g, 4}`, rotation group of order `8g` with the extra relator `C²B^{2g}`.
pub fn wiman_ii(g: u32) -> Result<FamilyMap, FamilyError> {
    require("wiman-ii", "genus >= 3", g >= 3, g)?;
    let t = type_of(4 * g, 4);
    let extra = &Word::power_of(2, 2) * &Word::power_of(1, 2 * g as i64);
    Ok(FamilyMap::new(
        format!("wiman-ii g={g}"),
        rotation(t.m(), t.n(), &[extra]),
        t,
        [(Link::L01, 2), (Link::L12, 2), (Link::L02, 1)],
    ))
}

/// The genus-2 map of type `{3,8}` with rotation group `GL(2,3)`. The extra relator
/// says `C⁴` is central.
pub fn bolza() -> FamilyMap {
    FamilyMap::new(
        "bolza",
        rotation(3, 8, &[abc("[C^4,B]")]),
        type_of(3, 8),
        [(Link::L01, 2), (Link::L0212, 2), (Link::L0212, 2)],
    )
}

/// Map of type `{3,2n}` on the Fermat curve of degree `n`, rotation group of order
/// `6n²`. The extra relator says `C²` and `AC²A` commute.
pub fn fermat(n: u32) -> Result<FamilyMap, FamilyError> {
    require("fermat", "degree >= 2", n >= 2, n)?;
    let (k01, k0212) = if n % 2 == 1 { (3, n as u64) } else { (4, 2) };
    Ok(FamilyMap::new(
        format!("fermat n={n}"),
        rotation(3, 2 * n, &[abc("[C^2,AC^2A]")]),
        type_of(3, 2 * n),
        [(Link::L01, k01), (Link::L0212, k0212), (Link::L0212, k0212)],
    ))
}

/// The Hurwitz mirror automorphism `S = B²CB²C⁴BC⁴`.
pub fn hurwitz_word() -> Word {
    mirror_automorphism_word(Link::L010212, type_of(3, 7)).expect("{3,7} admits 010212")
}

/// `⟨A, B, C | A², B³, C⁷, ABC, S^K⟩`.
pub fn hurwitz_presentation(k: u32) -> Presentation {
    rotation(3, 7, &[hurwitz_word().pow(k as i64)])
}

/// Hurwitz map with link index `k`, for the two values where the quotient is known
/// to have `S` of order exactly `k`.
pub fn hurwitz(k: u32) -> Result<FamilyMap, FamilyError> {
    require("hurwitz", "relator power 2 or 3", k == 2 || k == 3, k)?;
    let l = (Link::L010212, k as u64);
    let name = if k == 3 { "klein" } else { "macbeath" };
    Ok(FamilyMap::new(
        name,
        hurwitz_presentation(k),
        type_of(3, 7),
        [l, l, l],
    ))
}

#[derive(Debug, Clone, PartialEq)]
pub struct HurwitzQuotient {
    pub k: u32,
    pub order: u64,
    /// `None` when the quotient is too small to carry a map of type `{3,7}`.
    pub genus: Option<u64>,
    pub s_order: u64,
    pub reports: Vec<PatternReport>,
}

/// Enumerate the quotient of the `(2,3,7)` triangle group by `S^K`.
pub fn hurwitz_quotient(k: u32, budget: usize) -> Result<HurwitzQuotient, FamilyError> {
    require("hurwitz", "relator power >= 1", k >= 1, k)?;
    let t = type_of(3, 7);
    let table = enumerate_cosets(&hurwitz_presentation(k), &[], budget)?;
    let order = table.len() as u64;
    let s_order = element_order(&table, &hurwitz_word())?;
    let genus = genus_from_order(t, order).ok();
    let reports = if genus.is_some() {
        ReflectionClass::ALL
            .into_iter()
            .map(|c| {
                PatternReport::new(c, Link::L010212, LinkIndex::Finite(s_order)).with_length_for(t)
            })
            .collect()
    } else {
        Vec::new()
    };
    Ok(HurwitzQuotient {
        k,
        order,
        genus,
        s_order,
        reports,
    })
}

/// The five Platonic solids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Solid {
    Tetrahedron,
    Octahedron,
    Cube,
    Icosahedron,
    Dodecahedron,
}

impl Solid {
    pub const ALL: [Solid; 5] = [
        Self::Tetrahedron,
        Self::Octahedron,
        Self::Cube,
        Self::Icosahedron,
        Self::Dodecahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Tetrahedron => "tetrahedron",
            Self::Octahedron => "octahedron",
            Self::Cube => "cube",
            Self::Icosahedron => "icosahedron",
            Self::Dodecahedron => "dodecahedron",
        }
    }
}

/// One of the Platonic solids; the rotation group is the bare triangle group.
pub fn platonic(solid: Solid) -> FamilyMap {
    use Link::*;
    let (m, n, expected) = match solid {
        Solid::Tetrahedron => (3, 3, [(L010212, 1); 3]),
        Solid::Octahedron => (3, 4, [(L01, 4), (L0212, 2), (L0212, 2)]),
        Solid::Cube => (4, 3, [(L0102, 2), (L12, 4), (L0102, 2)]),
        Solid::Icosahedron => (3, 5, [(L010212, 2); 3]),
        Solid::Dodecahedron => (5, 3, [(L010212, 2); 3]),
    };
    FamilyMap::new(solid.name(), rotation(m, n, &[]), type_of(m, n), expected)
}

/// The hosohedron `{2, n}`: two vertices joined by `n` edges.
pub fn hosohedron(n: u32) -> Result<FamilyMap, FamilyError> {
    require("hosohedron", "n >= 2", n >= 2, n)?;
    let expected = if n % 2 == 1 {
        [(Link::L0102, 1), (Link::L12, n as u64), (Link::L0102, 1)]
    } else {
        [(Link::L01, 2), (Link::L12, n as u64), (Link::L02, 2)]
    };
    Ok(FamilyMap::new(
        format!("hosohedron n={n}"),
        rotation(2, n, &[]),
        type_of(2, n),
        expected,
    ))
}

/// The dihedron `{n, 2}`: an `n`-gon on each hemisphere.
pub fn dihedron(n: u32) -> Result<FamilyMap, FamilyError> {
    require("dihedron", "n >= 2", n >= 2, n)?;
    let expected = if n % 2 == 1 {
        [(Link::L01, n as u64), (Link::L0212, 1), (Link::L0212, 1)]
    } else {
        [(Link::L01, n as u64), (Link::L12, 2), (Link::L02, 2)]
    };
    Ok(FamilyMap::new(
        format!("dihedron n={n}"),
        rotation(n, 2, &[]),
        type_of(n, 2),
        expected,
    ))
}

/// A toroidal map, with expectations from the lattice computation.
pub fn torus(id: ToroidalMapId) -> Result<FamilyMap, FamilyError> {
    let reports = crate::lattice_tori::toroidal_patterns(id)?;
    Ok(FamilyMap {
        name: id.to_string(),
        presentation: id.presentation(),
        map_type: id.map_type(),
        expected: reports,
    })
}

/// Family names accepted by [`FamilyRequest`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    AccolaMaclachlan,
    WimanI,
    WimanII,
    Bolza,
    Fermat,
    Hurwitz,
    Platonic(Solid),
    Hosohedron,
    Dihedron,
    Torus(TorusFamily, TorusVariant),
}

impl FamilyKind {
    pub fn needs_param(self) -> bool {
        !matches!(self, Self::Bolza | Self::Platonic(_))
    }
}

impl FromStr for FamilyKind {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let kind = match s {
            "accola-maclachlan" | "am" => Self::AccolaMaclachlan,
            "wiman-i" | "wiman1" => Self::WimanI,
            "wiman-ii" | "wiman2" => Self::WimanII,
            "bolza" => Self::Bolza,
            "fermat" => Self::Fermat,
            "hurwitz" => Self::Hurwitz,
            "hosohedron" => Self::Hosohedron,
            "dihedron" => Self::Dihedron,
            other => {
                if let Some(solid) = Solid::ALL.into_iter().find(|s| s.name() == other) {
                    Self::Platonic(solid)
                } else if let Some(torus) = other.strip_prefix("torus-") {
                    let id: ToroidalMapId = torus
                        .parse()
                        .map_err(|_| FamilyError::UnknownFamily(s.to_string()))?;
                    Self::Torus(id.family, id.variant)
                } else {
                    return Err(FamilyError::UnknownFamily(s.to_string()));
                }
            }
        };
        Ok(kind)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::AccolaMaclachlan => f.write_str("accola-maclachlan"),
            Self::WimanI => f.write_str("wiman-i"),
            Self::WimanII => f.write_str("wiman-ii"),
            Self::Bolza => f.write_str("bolza"),
            Self::Fermat => f.write_str("fermat"),
            Self::Hurwitz => f.write_str("hurwitz"),
            Self::Platonic(s) => f.write_str(s.name()),
            Self::Hosohedron => f.write_str("hosohedron"),
            Self::Dihedron => f.write_str("dihedron"),
            Self::Torus(fam, var) => {
                let fam = match fam {
                    TorusFamily::Square => "44",
                    TorusFamily::Triangular => "36",
                    TorusFamily::Hexagonal => "63",
                };
                let var = match var {
                    TorusVariant::B0 => "b0",
                    TorusVariant::BB => "bb",
                };
                write!(f, "torus-{fam}-{var}")
            }
        }
    }
}

/// A family name plus its numeric parameter (genus, degree, relator power, `n` or `b`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyRequest {
    pub kind: FamilyKind,
    pub param: Option<u32>,
}

impl FamilyRequest {
    pub fn resolve(&self) -> Result<FamilyMap, FamilyError> {
        let p = || {
            self.param.ok_or(FamilyError::InvalidParameter {
                family: "family",
                requirement: "a --param value",
                value: 0,
            })
        };
        match self.kind {
            FamilyKind::AccolaMaclachlan => accola_maclachlan(p()?),
            FamilyKind::WimanI => wiman_i(p()?),
            FamilyKind::WimanII => wiman_ii(p()?),
            FamilyKind::Bolza => Ok(bolza()),
            FamilyKind::Fermat => fermat(p()?),
            FamilyKind::Hurwitz => {
                let k = p()?;
                require("hurwitz", "relator power >= 1", k >= 1, k)?;
                let known = hurwitz(k).ok();
                Ok(known.unwrap_or_else(|| FamilyMap {
                    name: format!("hurwitz K={k}"),
                    presentation: hurwitz_presentation(k),
                    map_type: type_of(3, 7),
                    expected: Vec::new(),
                }))
            }
            FamilyKind::Platonic(s) => Ok(platonic(s)),
            FamilyKind::Hosohedron => hosohedron(p()?),
            FamilyKind::Dihedron => dihedron(p()?),
            FamilyKind::Torus(family, variant) => torus(ToroidalMapId::new(family, variant, p()?)?),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{group_order, DEFAULT_BUDGET};

    fn links(reports: &[PatternReport]) -> Vec<(Link, LinkIndex)> {
        reports.iter().map(|r| (r.link, r.index)).collect()
    }

    fn assert_family(map: &FamilyMap) {
        let computed = map.computed(DEFAULT_BUDGET).unwrap();
        assert_eq!(links(&computed), links(&map.expected), "{}", map.name);
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus_from_order(type_of(3, 7), 168).unwrap(), 3);
        assert_eq!(genus_from_order(type_of(3, 8), 48).unwrap(), 2);
        assert_eq!(genus_from_order(type_of(5, 3), 60).unwrap(), 0);
        assert_eq!(genus_from_order(type_of(4, 4), 16).unwrap(), 1);
        assert!(genus_from_order(type_of(3, 7), 1).is_err());
        assert!(genus_from_order(type_of(3, 7), 42).is_err());
    }

    #[test]
    fn genus_is_duality_invariant() {
        for (m, n, o) in [(3, 7, 168u64), (3, 8, 48), (6, 4, 24), (10, 5, 10)] {
            assert_eq!(
                genus_from_order(type_of(m, n), o).unwrap(),
                genus_from_order(type_of(n, m), o).unwrap()
            );
        }
    }

    #[test]
    fn accola_maclachlan_orders_and_patterns() {
        for g in 2..=5 {
            let map = accola_maclachlan(g).unwrap();
            let o = group_order(&map.presentation, DEFAULT_BUDGET).unwrap() as u64;
            assert_eq!(o, 8 * (g as u64 + 1));
            assert_eq!(genus_from_order(map.map_type, o).unwrap(), g as u64);
            assert_family(&map);
            assert_family(&map.dual());
        }
    }

    #[test]
    fn wiman_orders_and_patterns() {
        for g in 2..=5 {
            let map = wiman_i(g).unwrap();
            let o = group_order(&map.presentation, DEFAULT_BUDGET).unwrap() as u64;
            assert_eq!(o, 4 * g as u64 + 2);
            assert_eq!(genus_from_order(map.map_type, o).unwrap(), g as u64);
            assert_family(&map);
        }
        for g in 3..=5 {
            let map = wiman_ii(g).unwrap();
            let o = group_order(&map.presentation, DEFAULT_BUDGET).unwrap() as u64;
            assert_eq!(o, 8 * g as u64);
            assert_eq!(genus_from_order(map.map_type, o).unwrap(), g as u64);
            assert_family(&map);
        }
        assert!(wiman_ii(2).is_err());
    }

    #[test]
    fn bolza_and_fermat() {
        let b = bolza();
        assert_eq!(group_order(&b.presentation, DEFAULT_BUDGET).unwrap(), 48);
        assert_family(&b);
        for n in 3..=6u32 {
            let f = fermat(n).unwrap();
            let o = group_order(&f.presentation, DEFAULT_BUDGET).unwrap() as u64;
            assert_eq!(o, 6 * (n * n) as u64);
            assert_eq!(
                genus_from_order(f.map_type, o).unwrap(),
                ((n - 1) * (n - 2) / 2) as u64
            );
            assert_family(&f);
        }
    }

    #[test]
    fn matrices_satisfy_the_family_relators() {
        let gens = bolza_generators();
        for rel in bolza().presentation.relators() {
            assert!(evaluate(rel, &gens).is_identity());
        }
        for n in 3..=6 {
            let gens = fermat_generators(n);
            for rel in fermat(n).unwrap().presentation.relators() {
                assert!(evaluate(rel, &gens).is_identity(), "n={n}");
            }
        }
    }

    #[test]
    fn hurwitz_quotients() {
        let q1 = hurwitz_quotient(1, DEFAULT_BUDGET).unwrap();
        assert_eq!((q1.order, q1.genus), (1, None));
        assert!(q1.reports.is_empty());
        let q2 = hurwitz_quotient(2, DEFAULT_BUDGET).unwrap();
        assert_eq!((q2.order, q2.genus, q2.s_order), (504, Some(7), 2));
        let q3 = hurwitz_quotient(3, DEFAULT_BUDGET).unwrap();
        assert_eq!((q3.order, q3.genus, q3.s_order), (168, Some(3), 3));
    }

    #[test]
    fn platonic_and_dihedral_patterns() {
        for s in Solid::ALL {
            assert_family(&platonic(s));
        }
        for n in 2..=8 {
            assert_family(&hosohedron(n).unwrap());
            assert_family(&dihedron(n).unwrap());
        }
    }

    #[test]
    fn requests_resolve() {
        let r = FamilyRequest {
            kind: "fermat".parse().unwrap(),
            param: Some(4),
        };
        assert_eq!(r.resolve().unwrap().map_type, type_of(3, 8));
        let t: FamilyKind = "torus-36-bb".parse().unwrap();
        assert_eq!(t.to_string(), "torus-36-bb");
        assert!("sphere".parse::<FamilyKind>().is_err());
        let missing = FamilyRequest {
            kind: FamilyKind::Fermat,
            param: None,
        };
        assert!(missing.resolve().is_err());
    }
}
