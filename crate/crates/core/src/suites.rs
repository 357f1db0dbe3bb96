//! Verification suites: named checks over tables, families, tori and the tracer.
//! Items are independent, so callers may run them in parallel and keep their order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::flag_tracer::verify_against_patterns;
use crate::hyperbolic_metrics::{mirror_length, triangle_sides};
use crate::lattice_tori::{toroidal_patterns, ToroidalMapId, TorusFamily, TorusVariant};
use crate::patterns::{dualize, Link, MapType};
use crate::presentations::{group_order, parse_word, Alphabet};
use crate::surface_families::{
    accola_maclachlan, bolza, bolza_generators, closure_size, dihedron, evaluate, fermat,
    fermat_generators, genus_from_order, hosohedron, hurwitz, hurwitz_quotient, platonic, torus,
    wiman_i, wiman_ii, FamilyMap, GroupElement, Solid,
};
use crate::tables::{entries_of, table_rows, PatternEntry, RowStatus, RunContext, TableId};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Spherical,
    Tori,
    Families,
    Oracle,
    All,
}

impl Suite {
    pub const PARTS: [Suite; 4] = [Self::Spherical, Self::Tori, Self::Families, Self::Oracle];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Spherical => "spherical",
            Self::Tori => "tori",
            Self::Families => "families",
            Self::Oracle => "oracle",
            Self::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::PARTS
            .into_iter()
            .chain([Self::All])
            .find(|x| x.as_str() == s)
            .ok_or_else(|| {
                format!("unknown suite `{s}`; expected spherical, tori, families, oracle or all")
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", content = "detail", rename_all = "lowercase")]
pub enum Outcome {
    Pass(String),
    Fail(String),
    /// Not run: a missing fixture or an opt-in long run.
    Skip(String),
    /// The coset budget ran out before the check could finish.
    Budget(String),
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Self::Pass(_) => "PASS",
            Self::Fail(_) => "FAIL",
            Self::Skip(_) => "SKIP",
            Self::Budget(_) => "BUDGET",
        }
    }

    pub fn detail(&self) -> &str {
        match self {
            Self::Pass(d) | Self::Fail(d) | Self::Skip(d) | Self::Budget(d) => d,
        }
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, Self::Fail(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    #[serde(flatten)]
    pub outcome: Outcome,
}

type Runner = Box<dyn Fn(&RunContext) -> Result<Outcome, Error> + Send + Sync>;

/// One named check, not yet run.
pub struct SuiteItem {
    pub suite: Suite,
    pub name: String,
    run: Runner,
}

impl fmt::Debug for SuiteItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuiteItem({}: {})", self.suite, self.name)
    }
}

impl SuiteItem {
    fn new(
        suite: Suite,
        name: impl Into<String>,
        run: impl Fn(&RunContext) -> Result<Outcome, Error> + Send + Sync + 'static,
    ) -> Self {
        Self {
            suite,
            name: name.into(),
            run: Box::new(run),
        }
    }

    pub fn run(&self, ctx: &RunContext) -> Check {
        let outcome = match (self.run)(ctx) {
            Ok(o) => o,
            Err(e) if e.is_budget() => Outcome::Budget(e.to_string()),
            Err(e) => Outcome::Fail(e.to_string()),
        };
        Check {
            suite: self.suite,
            name: self.name.clone(),
            outcome,
        }
    }
}

fn verdict(ok: bool, detail: String) -> Outcome {
    if ok {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn shown(entries: &[PatternEntry]) -> String {
    entries
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

/// Each table row becomes a check; missing fixtures skip, mismatches fail.
fn table_items(suite: Suite, table: TableId, b: u32) -> Vec<SuiteItem> {
    let specs = table_rows(table, b).expect("built-in table rows construct");
    specs
        .into_iter()
        .map(|spec| {
            let name = format!("table {table} {}", spec.label);
            SuiteItem::new(suite, name, move |ctx| {
                let row = spec.evaluate(ctx)?;
                let shown = shown(&row.computed);
                Ok(match row.status {
                    RowStatus::Verified => Outcome::Pass(shown),
                    RowStatus::FixtureMissing | RowStatus::Optional => {
                        Outcome::Skip(row.detail.unwrap_or_default())
                    }
                    RowStatus::Mismatch => Outcome::Fail(row.detail.unwrap_or_default()),
                })
            })
        })
        .collect()
}

/// Enumerated patterns equal the closed-form ones, and the order gives the stated genus.
fn family_item(map: FamilyMap, order: u64, genus: u64) -> SuiteItem {
    SuiteItem::new(Suite::Families, map.name.clone(), move |ctx| {
        let computed = map.computed(ctx.budget)?;
        let o = group_order(&map.presentation, ctx.budget)? as u64;
        let g = genus_from_order(map.map_type, o)?;
        let same = entries_of(&computed, false) == entries_of(&map.expected, false);
        Ok(verdict(
            same && o == order && g == genus,
            format!("order {o} (want {order}), genus {g} (want {genus}), patterns agree: {same}"),
        ))
    })
}

fn oracle_item(map: FamilyMap) -> SuiteItem {
    SuiteItem::new(Suite::Oracle, map.name.clone(), move |ctx| {
        let v = verify_against_patterns(&map.presentation, map.map_type, ctx.budget)?;
        let mut problems = Vec::new();
        for c in v.classes.iter().filter(|c| !c.agrees()) {
            problems.push(format!(
                "class {} traced ({})^{} derived ({})^{}",
                c.class, c.traced.0, c.traced.1, c.derived.0, c.derived.1
            ));
        }
        if !v.respects_harnack() {
            problems.push(format!("more than g+1 = {} curves", v.genus + 1));
        }
        if !map.expected.is_empty()
            && entries_of(&v.reports(), false) != entries_of(&map.expected, false)
        {
            problems.push("traced patterns differ from the closed form".to_string());
        }
        Ok(if problems.is_empty() {
            Outcome::Pass(format!("{} flags, genus {}", 2 * v.rotation_order, v.genus))
        } else {
            Outcome::Fail(problems.join("; "))
        })
    })
}

/// Every finite map with a built-in presentation.
pub fn builtin_maps() -> Vec<FamilyMap> {
    let mut maps: Vec<FamilyMap> = Solid::ALL.into_iter().map(platonic).collect();
    for n in 2..=8 {
        maps.push(hosohedron(n).expect("n >= 2"));
        maps.push(dihedron(n).expect("n >= 2"));
    }
    for family in [
        TorusFamily::Square,
        TorusFamily::Triangular,
        TorusFamily::Hexagonal,
    ] {
        for variant in [TorusVariant::B0, TorusVariant::BB] {
            for b in 1..=3 {
                let id = ToroidalMapId::new(family, variant, b).expect("b >= 1");
                maps.push(torus(id).expect("lattice patterns exist"));
            }
        }
    }
    let mut hyperbolic = vec![bolza()];
    hyperbolic.extend((2..=8).map(|g| accola_maclachlan(g).expect("g >= 2")));
    hyperbolic.extend((2..=8).map(|g| wiman_i(g).expect("g >= 2")));
    hyperbolic.extend((3..=8).map(|g| wiman_ii(g).expect("g >= 3")));
    hyperbolic.extend((3..=6).map(|n| fermat(n).expect("n >= 2")));
    hyperbolic.extend([2, 3].map(|k| hurwitz(k).expect("K is 2 or 3")));
    let duals: Vec<FamilyMap> = hyperbolic.iter().map(FamilyMap::dual).collect();
    maps.extend(hyperbolic);
    maps.extend(duals);
    maps
}

fn spherical_items() -> Vec<SuiteItem> {
    let mut items = table_items(Suite::Spherical, TableId::Spherical, 0);
    items.extend(table_items(Suite::Spherical, TableId::Universal, 0));
    items
}

fn tori_items() -> Vec<SuiteItem> {
    let mut items = Vec::new();
    for b in 1..=6 {
        items.extend(table_items(Suite::Tori, TableId::SquareTori, b));
        items.extend(table_items(Suite::Tori, TableId::TriangularTori, b));
        for variant in [TorusVariant::B0, TorusVariant::BB] {
            let tri = ToroidalMapId::new(TorusFamily::Triangular, variant, b).expect("b >= 1");
            let hex = ToroidalMapId::new(TorusFamily::Hexagonal, variant, b).expect("b >= 1");
            items.push(SuiteItem::new(
                Suite::Tori,
                format!("{hex} is dual to {tri}"),
                move |_| {
                    let h = entries_of(&toroidal_patterns(hex)?, false);
                    let t = entries_of(&dualize(&toroidal_patterns(tri)?), false);
                    Ok(verdict(
                        h == t && hex.rotation_order() == tri.rotation_order(),
                        shown(&h),
                    ))
                },
            ));
        }
    }
    items
}

fn families_items() -> Vec<SuiteItem> {
    let s = Suite::Families;
    let mut items = Vec::new();
    // Hurwitz quotients by S^K: (K, order, genus, index)
    for (k, order, genus) in [(1u32, 1u64, None), (2, 504, Some(7u64)), (3, 168, Some(3))] {
        items.push(SuiteItem::new(s, format!("hurwitz K={k}"), move |ctx| {
            let q = hurwitz_quotient(k, ctx.budget)?;
            let index_ok = genus.is_none() || q.s_order == k as u64;
            Ok(verdict(
                q.order == order && q.genus == genus && index_ok,
                format!(
                    "order {}, genus {}, S of order {}",
                    q.order,
                    q.genus.map_or("-".to_string(), |g| g.to_string()),
                    q.s_order
                ),
            ))
        }));
    }
    items.push(SuiteItem::new(s, "hurwitz K=4", |ctx| {
        if !ctx.long_run {
            return Ok(Outcome::Skip("long run not requested".to_string()));
        }
        let q = hurwitz_quotient(4, ctx.budget)?;
        Ok(verdict(q.order == 16_515_072, format!("order {}", q.order)))
    }));
    for g in 2..=8 {
        let map = accola_maclachlan(g).expect("g >= 2");
        items.push(family_item(map, 8 * (g as u64 + 1), g as u64));
    }
    for g in 2..=8 {
        let map = wiman_i(g).expect("g >= 2");
        items.push(family_item(map, 4 * g as u64 + 2, g as u64));
    }
    for g in 3..=8 {
        let map = wiman_ii(g).expect("g >= 3");
        items.push(family_item(map, 8 * g as u64, g as u64));
    }
    items.push(family_item(bolza(), 48, 2));
    items.push(SuiteItem::new(s, "bolza matrices mod 3", |_| {
        let gens = bolza_generators();
        let abc = Alphabet::rotation();
        let s1 = evaluate(&parse_word("C^4B^2CB^2", &abc)?, &gens);
        let s2 = evaluate(&parse_word("C^4A", &abc)?, &gens);
        let size = closure_size(&gens, 1000);
        Ok(verdict(
            (s1.order(), s2.order()) == (2, 2) && size == Some(48),
            format!(
                "S1 {s1} order {}, S2 {s2} order {}, group of order {size:?}",
                s1.order(),
                s2.order()
            ),
        ))
    }));
    for n in 3..=6u32 {
        let map = fermat(n).expect("n >= 2");
        let genus = ((n - 1) * (n - 2) / 2) as u64;
        items.push(family_item(map, 6 * (n * n) as u64, genus));
        items.push(SuiteItem::new(
            s,
            format!("fermat n={n} matrices"),
            move |_| {
                let gens = fermat_generators(n);
                let abc = Alphabet::rotation();
                let s1 = evaluate(&parse_word(&format!("C^{n}B^2CB^2"), &abc)?, &gens);
                let s2 = evaluate(&parse_word(&format!("C^{n}A"), &abc)?, &gens);
                let want = if n % 2 == 1 { (n as u64, 3) } else { (2, 4) };
                let size = closure_size(&gens, 10_000);
                Ok(verdict(
                    (s1.order(), s2.order()) == want && size == Some(6 * (n * n) as usize),
                    format!(
                        "S1 order {}, S2 order {}, group of order {size:?}",
                        s1.order(),
                        s2.order()
                    ),
                ))
            },
        ));
    }
    items.push(SuiteItem::new(s, "fermat n=3 is {3,6}_{3,0}", |ctx| {
        let f = entries_of(&fermat(3)?.computed(ctx.budget)?, false);
        let id = ToroidalMapId::new(TorusFamily::Triangular, TorusVariant::B0, 3)?;
        let t = entries_of(&toroidal_patterns(id)?, false);
        Ok(verdict(f == t, shown(&f)))
    }));
    items.push(SuiteItem::new(s, "lengths {3,7}", |ctx| {
        let t = MapType::new(3, 7)?;
        let sides = triangle_sides(t)?;
        let k2 = mirror_length(Link::L010212, 2, t)?;
        let k3 = mirror_length(Link::L010212, 3, t)?;
        let close = |a: f64, b: f64| (a - b).abs() < ctx.tolerance;
        Ok(verdict(
            close(sides.len12, 0.2831281533)
                && close(sides.len01, 0.5452748317)
                && close(sides.len02, 0.6206717375)
                && close(k2, 5.7962988904)
                && close(k3, 8.6944483356),
            format!(
                "sides {:.10} {:.10} {:.10}, K=2 {k2:.10}, K=3 {k3:.10}",
                sides.len12, sides.len01, sides.len02
            ),
        ))
    }));
    for table in [TableId::GenusTwo, TableId::GenusThree, TableId::Hurwitz] {
        items.extend(table_items(s, table, 0));
    }
    items
}

fn oracle_items() -> Vec<SuiteItem> {
    builtin_maps().into_iter().map(oracle_item).collect()
}

/// Items of a suite in a fixed order.
pub fn suite_items(suite: Suite) -> Vec<SuiteItem> {
    match suite {
        Suite::Spherical => spherical_items(),
        Suite::Tori => tori_items(),
        Suite::Families => families_items(),
        Suite::Oracle => oracle_items(),
        Suite::All => Suite::PARTS.into_iter().flat_map(suite_items).collect(),
    }
}

/// Run items one after another.
pub fn run_suite(suite: Suite, ctx: &RunContext) -> Vec<Check> {
    suite_items(suite).iter().map(|i| i.run(ctx)).collect()
}
