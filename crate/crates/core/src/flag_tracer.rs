//! Brute-force mirror tracing on the flag complex of a finite regular map.
//!
//! Flags are the elements of the extended group in its right regular
//! representation; flag `g` and flag `g·s` share their `s`-side. A reflection `t`
//! fixes the `s`-side of `g` exactly when `t·g = g·s`. Tracing never consults the
//! mirror-automorphism words, so it checks them independently.

use std::collections::VecDeque;
use std::fmt::Write as _;

use thiserror::Error;

use crate::patterns::{
    report_from_table, Link, LinkIndex, MapType, PatternError, PatternReport, ReflectionClass,
};
use crate::presentations::{
    enumerate_cosets, Alphabet, CosetTable, EnumerationError, Presentation, PresentationError, Word,
};
use crate::surface_families::genus_from_order;

#[derive(Debug, Error)]
pub enum TraceError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error("the word is not an involution in the extended group")]
    NotInvolution,
    #[error("the word is orientation-preserving, so it fixes no mirror")]
    OrientationPreserving,
    #[error("the reflection fixes no side of any flag")]
    NoMirror,
    #[error("{corner} corner {id} meets {degree} on-mirror sides, expected 2")]
    BadCorner {
        corner: &'static str,
        id: usize,
        degree: usize,
    },
    #[error("traced cycle {labels:?} does not repeat any link")]
    UnknownPattern { labels: Vec<u8> },
    #[error("the map is not reflexible: the extended group has order {extended}, the rotation group {rotation}")]
    NotReflexible { rotation: usize, extended: usize },
    #[error("flag counts {flags} do not split into corner orbits of sizes 2n, 4, 2m")]
    CornerOrbits { flags: usize },
}

const CORNER_NAMES: [&str; 3] = ["vertex", "edge-centre", "face-centre"];

/// Generators (as `P, Q, R` indices) whose sides meet at each corner type:
/// vertices `⟨R, P⟩`, edge-centres `⟨P, Q⟩`, face-centres `⟨Q, R⟩`.
const CORNER_GENERATORS: [[usize; 2]; 3] = [[2, 0], [0, 1], [1, 2]];

/// The regular map rebuilt from its extended group.
#[derive(Debug, Clone)]
pub struct FlagComplex {
    map_type: MapType,
    table: CosetTable,
    /// Table columns of `P`, `Q`, `R`.
    columns: [usize; 3],
    /// BFS spanning tree: `parent[f] = (g, s)` with `f = g·s`.
    parent: Vec<Option<(usize, usize)>>,
    bfs_order: Vec<usize>,
    /// `corner[c][f]`: which corner of type `c` flag `f` has.
    corner: [Vec<usize>; 3],
    corner_counts: [usize; 3],
    /// 0 for flags reached by words of even length, 1 for odd.
    orientation: Vec<u8>,
}

/// One closed curve of a mirror.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TracedCycle {
    /// Corner labels met in order.
    pub labels: Vec<u8>,
    /// The side crossings, as `(flag, generator)` pairs, in the same order.
    pub sides: Vec<(usize, usize)>,
    pub link: Link,
    pub index: u64,
}

#[derive(Debug, Clone)]
pub struct MirrorTrace {
    pub reflection: Word,
    pub cycles: Vec<TracedCycle>,
}

/// Counts of every mirror of the map, split by which side types they contain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MirrorCensus {
    /// All mirrors of the map.
    pub mirrors: Vec<TracedCycle>,
    /// `counts[s]`: mirrors containing a side of type `s`.
    pub counts: [u64; 3],
}

impl FlagComplex {
    pub fn map_type(&self) -> MapType {
        self.map_type
    }

    pub fn flag_count(&self) -> usize {
        self.table.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.corner_counts[0]
    }

    pub fn edge_count(&self) -> usize {
        self.corner_counts[1]
    }

    pub fn face_count(&self) -> usize {
        self.corner_counts[2]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    pub fn genus(&self) -> u64 {
        ((2 - self.euler_characteristic()) / 2) as u64
    }

    /// The flag across side `s` (0, 1, 2 for `P`, `Q`, `R`).
    pub fn neighbour(&self, flag: usize, s: usize) -> usize {
        self.table.image(flag, 2 * self.columns[s])
    }

    pub fn corner_of(&self, flag: usize, corner_type: usize) -> usize {
        self.corner[corner_type][flag]
    }

    pub fn orientation(&self, flag: usize) -> u8 {
        self.orientation[flag]
    }

    /// The flag reached from the base flag by `word` (over this complex's alphabet).
    pub fn flag_of(&self, word: &Word) -> Option<usize> {
        self.table.apply(0, word)
    }

    /// Left multiplication by the element `t` (given as a flag): `g ↦ t·g`.
    pub fn left_multiplication(&self, t: usize) -> Vec<usize> {
        let mut map = vec![usize::MAX; self.flag_count()];
        map[0] = t;
        for &f in &self.bfs_order[1..] {
            let (g, s) = self.parent[f].expect("non-root flags have parents");
            map[f] = self.neighbour(map[g], s);
        }
        map
    }

    /// Corner types at the ends of an `s`-side.
    fn side_corners(s: usize) -> [usize; 2] {
        match s {
            0 => [0, 1],
            1 => [1, 2],
            _ => [0, 2],
        }
    }

    /// Half the number of sides around a corner of this type.
    fn half_turn(&self, corner_type: usize) -> usize {
        match corner_type {
            0 => self.map_type.n() as usize,
            1 => 2,
            _ => self.map_type.m() as usize,
        }
    }

    /// Normalized side id: the smaller of the two flags sharing it.
    fn side_key(&self, flag: usize, s: usize) -> (usize, usize) {
        (flag.min(self.neighbour(flag, s)), s)
    }

    /// The side diametrically opposite `(flag, s)` across its corner of `corner_type`.
    fn continuation(&self, flag: usize, s: usize, corner_type: usize) -> (usize, usize) {
        let [a, b] = CORNER_GENERATORS[corner_type];
        let other = if a == s { b } else { a };
        let d = self.half_turn(corner_type);
        let mut f = flag;
        for step in 1..d {
            f = self.neighbour(f, if step % 2 == 1 { other } else { s });
        }
        (f, if d % 2 == 1 { other } else { s })
    }
}

/// Build the complex from a presentation over `P, Q, R`.
pub fn build_flag_complex(
    presentation: &Presentation,
    map_type: MapType,
    budget: usize,
) -> Result<FlagComplex, TraceError> {
    let gens = presentation.require_generators(&["P", "Q", "R"])?;
    let columns = [gens[0], gens[1], gens[2]];
    let table = enumerate_cosets(presentation, &[], budget)?;
    let n = table.len();

    let mut parent = vec![None; n];
    let mut orientation = vec![u8::MAX; n];
    let mut bfs_order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([0usize]);
    orientation[0] = 0;
    while let Some(f) = queue.pop_front() {
        bfs_order.push(f);
        for (s, &g) in columns.iter().enumerate() {
            let h = table.image(f, 2 * g);
            if orientation[h] == u8::MAX {
                orientation[h] = 1 - orientation[f];
                parent[h] = Some((f, s));
                queue.push_back(h);
            }
        }
    }

    let mut corner: [Vec<usize>; 3] = Default::default();
    let mut corner_counts = [0; 3];
    for (c, pair) in CORNER_GENERATORS.iter().enumerate() {
        let mut id = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if id[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            id[start] = next;
            while let Some(f) = stack.pop() {
                for &s in pair {
                    let h = table.image(f, 2 * columns[s]);
                    if id[h] == usize::MAX {
                        id[h] = next;
                        stack.push(h);
                    }
                }
            }
            next += 1;
        }
        corner[c] = id;
        corner_counts[c] = next;
    }
    let (m, nn) = (map_type.m() as usize, map_type.n() as usize);
    if corner_counts[0] * 2 * nn != n || corner_counts[1] * 4 != n || corner_counts[2] * 2 * m != n
    {
        return Err(TraceError::CornerOrbits { flags: n });
    }

    Ok(FlagComplex {
        map_type,
        table,
        columns,
        parent,
        bfs_order,
        corner,
        corner_counts,
        orientation,
    })
}

/// Reduce a closed label sequence to `(link, repetitions)`.
pub fn classify_cycle(labels: &[u8]) -> Result<(Link, u64), TraceError> {
    let len = labels.len();
    for p in 1..=len {
        if len % p != 0 {
            continue;
        }
        if (0..len).all(|i| labels[i] == labels[(i + p) % len]) {
            return Link::from_cycle(&labels[..p])
                .map(|l| (l, (len / p) as u64))
                .ok_or_else(|| TraceError::UnknownPattern {
                    labels: labels.to_vec(),
                });
        }
    }
    Err(TraceError::UnknownPattern {
        labels: labels.to_vec(),
    })
}

/// Walk a degree-2 graph whose edges are `sides` and whose nodes are corner
/// points, starting with `sides[first]` and entering it from `from`.
fn walk_cycle(
    complex: &FlagComplex,
    sides: &[(usize, usize)],
    incident: &dyn Fn((usize, usize)) -> [usize; 2],
    first: usize,
    visited: &mut [bool],
) -> Result<TracedCycle, TraceError> {
    let mut labels = Vec::new();
    let mut order = Vec::new();
    let mut current = first;
    let (f0, s0) = sides[first];
    let mut at = ClassifiedCorner::of(complex, f0, ClassifiedCorner::types(s0)[0]);
    loop {
        visited[current] = true;
        labels.push(at.kind as u8);
        order.push(sides[current]);
        let (f, s) = sides[current];
        let [ta, tb] = ClassifiedCorner::types(s);
        let far_type = if ta == at.kind { tb } else { ta };
        let far = ClassifiedCorner::of(complex, f, far_type);
        let next = incident((far.kind, far.id))
            .into_iter()
            .find(|&e| e != current)
            .expect("degree checked by caller");
        at = far;
        current = next;
        if current == first {
            break;
        }
    }
    let (link, index) = classify_cycle(&labels)?;
    Ok(TracedCycle {
        labels,
        sides: order,
        link,
        index,
    })
}

#[derive(Debug, Clone, Copy)]
struct ClassifiedCorner {
    kind: usize,
    id: usize,
}

impl ClassifiedCorner {
    fn types(s: usize) -> [usize; 2] {
        FlagComplex::side_corners(s)
    }

    fn of(complex: &FlagComplex, flag: usize, kind: usize) -> Self {
        Self {
            kind,
            id: complex.corner_of(flag, kind),
        }
    }
}

/// Group sides into cycles through shared corner points. Every corner point must
/// meet exactly two of the sides.
fn cycles_of_sides(
    complex: &FlagComplex,
    sides: &[(usize, usize)],
) -> Result<Vec<TracedCycle>, TraceError> {
    let mut at_corner: [Vec<Vec<usize>>; 3] =
        std::array::from_fn(|c| vec![Vec::new(); complex.corner_counts[c]]);
    for (e, &(f, s)) in sides.iter().enumerate() {
        for c in FlagComplex::side_corners(s) {
            at_corner[c][complex.corner_of(f, c)].push(e);
        }
    }
    for (c, lists) in at_corner.iter().enumerate() {
        for (id, list) in lists.iter().enumerate() {
            if !list.is_empty() && list.len() != 2 {
                return Err(TraceError::BadCorner {
                    corner: CORNER_NAMES[c],
                    id,
                    degree: list.len(),
                });
            }
        }
    }
    let incident = |(c, id): (usize, usize)| [at_corner[c][id][0], at_corner[c][id][1]];
    let mut visited = vec![false; sides.len()];
    let mut cycles = Vec::new();
    for first in 0..sides.len() {
        if !visited[first] {
            cycles.push(walk_cycle(complex, sides, &incident, first, &mut visited)?);
        }
    }
    Ok(cycles)
}

/// Trace every mirror of a reflection given as a word over `P, Q, R`.
pub fn trace_mirror(complex: &FlagComplex, reflection: &Word) -> Result<MirrorTrace, TraceError> {
    if reflection.len() % 2 == 0 {
        return Err(TraceError::OrientationPreserving);
    }
    let t = complex.flag_of(reflection).ok_or_else(|| {
        TraceError::Enumeration(EnumerationError::WordOutOfRange {
            generator: reflection.max_generator().unwrap_or(0),
            generators: complex.table.generator_count(),
        })
    })?;
    if t == 0 || complex.table.apply(t, reflection) != Some(0) {
        return Err(TraceError::NotInvolution);
    }
    let left = complex.left_multiplication(t);
    let mut sides = Vec::new();
    for (g, &image) in left.iter().enumerate() {
        for s in 0..3 {
            let h = complex.neighbour(g, s);
            if image == h && g < h {
                sides.push((g, s));
            }
        }
    }
    if sides.is_empty() {
        return Err(TraceError::NoMirror);
    }
    Ok(MirrorTrace {
        reflection: reflection.clone(),
        cycles: cycles_of_sides(complex, &sides)?,
    })
}

/// Partition all sides of the map into mirrors by geodesic continuation and count,
/// for each side type, the mirrors that contain one.
pub fn mirror_census(complex: &FlagComplex) -> Result<MirrorCensus, TraceError> {
    let n = complex.flag_count();
    let mut seen = vec![[false; 3]; n];
    let mut mirrors = Vec::new();
    for g in 0..n {
        for s in 0..3 {
            let (f0, _) = complex.side_key(g, s);
            if seen[f0][s] {
                continue;
            }
            let mut labels = Vec::new();
            let mut sides = Vec::new();
            let (mut f, mut side) = (f0, s);
            let mut entry = FlagComplex::side_corners(s)[0];
            loop {
                let key = complex.side_key(f, side);
                seen[key.0][side] = true;
                labels.push(entry as u8);
                sides.push(key);
                let [a, b] = FlagComplex::side_corners(side);
                let exit = if a == entry { b } else { a };
                let (nf, ns) = complex.continuation(f, side, exit);
                f = nf;
                side = ns;
                entry = exit;
                if complex.side_key(f, side) == (f0, s) {
                    break;
                }
            }
            let (link, index) = classify_cycle(&labels)?;
            mirrors.push(TracedCycle {
                labels,
                sides,
                link,
                index,
            });
        }
    }
    let mut counts = [0u64; 3];
    for mirror in &mirrors {
        for (s, count) in counts.iter_mut().enumerate() {
            if mirror.sides.iter().any(|&(_, t)| t == s) {
                *count += 1;
            }
        }
    }
    Ok(MirrorCensus { mirrors, counts })
}

/// Per-class comparison of traced and word-derived patterns.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassComparison {
    pub class: ReflectionClass,
    pub traced: (Link, u64),
    pub derived: (Link, LinkIndex),
    /// Mirrors of the map containing a side fixed by a conjugate of this class.
    pub mirror_count: u64,
    /// Number of disjoint curves fixed by the class representative.
    pub curves: usize,
}

impl ClassComparison {
    pub fn agrees(&self) -> bool {
        self.traced.0 == self.derived.0 && LinkIndex::Finite(self.traced.1) == self.derived.1
    }
}

#[derive(Debug, Clone)]
pub struct Verification {
    pub map_type: MapType,
    pub rotation_order: usize,
    pub genus: u64,
    pub classes: Vec<ClassComparison>,
}

impl Verification {
    pub fn agrees(&self) -> bool {
        self.classes.iter().all(ClassComparison::agrees)
    }

    /// Every reflection fixes at most `g + 1` disjoint curves.
    pub fn respects_harnack(&self) -> bool {
        self.classes
            .iter()
            .all(|c| c.curves as u64 <= self.genus + 1)
    }

    /// Reports carrying the traced indices and mirror counts.
    pub fn reports(&self) -> Vec<PatternReport> {
        self.classes
            .iter()
            .map(|c| {
                let mut r = PatternReport::new(c.class, c.traced.0, LinkIndex::Finite(c.traced.1))
                    .with_length_for(self.map_type);
                r.mirror_count = Some(c.mirror_count);
                r
            })
            .collect()
    }
}

/// Trace a map given by its rotation presentation over `A, B, C` and compare with
/// the link indices derived from the mirror-automorphism words.
pub fn verify_against_patterns(
    rotation: &Presentation,
    map_type: MapType,
    budget: usize,
) -> Result<Verification, TraceError> {
    let rot_table = enumerate_cosets(rotation, &[], budget)?;
    let derived = report_from_table(&rot_table, rotation, map_type)?;
    let extended = rotation.extend_to_reflections(map_type.m(), map_type.n())?;
    let complex = build_flag_complex(&extended, map_type, budget)?;
    if complex.flag_count() != 2 * rot_table.len() {
        return Err(TraceError::NotReflexible {
            rotation: rot_table.len(),
            extended: complex.flag_count(),
        });
    }
    debug_assert_eq!(
        genus_from_order(map_type, rot_table.len() as u64).ok(),
        Some(complex.genus())
    );
    let census = mirror_census(&complex)?;
    let mut classes = Vec::new();
    for (s, report) in derived.iter().enumerate() {
        let class = ReflectionClass::from_index(s);
        let trace = trace_mirror(&complex, &Word::generator(s))?;
        let through_base = trace
            .cycles
            .iter()
            .find(|c| c.sides.contains(&complex.side_key(0, s)))
            .expect("the base flag's side lies on its own reflection's mirror");
        classes.push(ClassComparison {
            class,
            traced: (through_base.link, through_base.index),
            derived: (report.link, report.index),
            mirror_count: census.counts[s],
            curves: trace.cycles.len(),
        });
    }
    Ok(Verification {
        map_type,
        rotation_order: rot_table.len(),
        genus: complex.genus(),
        classes,
    })
}

/// Text listing of a trace, one cycle per line with its flag ids.
pub fn debug_dump(trace: &MirrorTrace) -> String {
    let mut out = format!(
        "reflection {}\n",
        trace.reflection.display(&Alphabet::reflection())
    );
    for (i, c) in trace.cycles.iter().enumerate() {
        let labels: String = c.labels.iter().map(|l| char::from(b'0' + l)).collect();
        let _ = write!(out, "cycle {i}: ({})^{} {labels} flags", c.link, c.index);
        for (f, s) in &c.sides {
            let _ = write!(out, " {f}{}", ReflectionClass::from_index(*s).name());
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{parse_word, DEFAULT_BUDGET};

    fn t(m: u32, n: u32) -> MapType {
        MapType::new(m, n).unwrap()
    }

    fn complex(m: u32, n: u32, extra: &str) -> FlagComplex {
        let base = Presentation::triangle_rotation(m, n);
        let p = if extra.is_empty() {
            base
        } else {
            base.with_relators([base.word(extra).unwrap()]).unwrap()
        };
        let ext = p.extend_to_reflections(m, n).unwrap();
        build_flag_complex(&ext, t(m, n), DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn icosahedral_complex() {
        let c = complex(3, 5, "");
        assert_eq!(c.flag_count(), 120);
        assert_eq!(
            (c.vertex_count(), c.edge_count(), c.face_count()),
            (12, 30, 20)
        );
        assert_eq!(c.genus(), 0);
    }

    #[test]
    fn dodecahedron_mirror() {
        let c = complex(5, 3, "");
        let trace = trace_mirror(&c, &Word::generator(0)).unwrap();
        assert_eq!(trace.cycles.len(), 1);
        assert_eq!(
            (trace.cycles[0].link, trace.cycles[0].index),
            (Link::L010212, 2)
        );
        assert_eq!(trace.cycles[0].labels.len(), 12);
    }

    #[test]
    fn klein_mirrors() {
        let c = complex(3, 7, "(B^2CB^2C^4BC^4)^3");
        assert_eq!(c.flag_count(), 336);
        assert_eq!(c.genus(), 3);
        for s in 0..3 {
            let trace = trace_mirror(&c, &Word::generator(s)).unwrap();
            for cycle in &trace.cycles {
                assert_eq!((cycle.link, cycle.index), (Link::L010212, 3));
            }
            assert!(trace.cycles.len() <= 4);
        }
    }

    #[test]
    fn octahedron_census() {
        let c = complex(3, 4, "");
        let census = mirror_census(&c).unwrap();
        assert_eq!(census.mirrors.len(), 9);
        assert_eq!(census.counts, [3, 6, 6]);
        let trace = trace_mirror(&c, &Word::generator(0)).unwrap();
        assert_eq!(
            (trace.cycles[0].link, trace.cycles[0].index),
            (Link::L01, 4)
        );
    }

    #[test]
    fn on_mirror_flags_are_twice_the_pattern_length() {
        let c = complex(3, 8, "[C^4,B]");
        for s in 0..3 {
            let trace = trace_mirror(&c, &Word::generator(s)).unwrap();
            let left = c.left_multiplication(c.flag_of(&Word::generator(s)).unwrap());
            let on_mirror = (0..c.flag_count())
                .filter(|&g| (0..3).any(|x| left[g] == c.neighbour(g, x)))
                .count();
            let total: usize = trace.cycles.iter().map(|cy| cy.labels.len()).sum();
            assert_eq!(on_mirror, 2 * total);
        }
    }

    #[test]
    fn conjugate_reflections_trace_alike() {
        let c = complex(3, 7, "(B^2CB^2C^4BC^4)^2");
        let abc = Alphabet::reflection();
        let p = trace_mirror(&c, &Word::generator(0)).unwrap();
        for conj in ["QPQ", "RPR", "QRPRQ", "PQRQPQRQP"] {
            let w = parse_word(conj, &abc).unwrap();
            let other = trace_mirror(&c, &w).unwrap();
            assert_eq!(other.cycles.len(), p.cycles.len(), "{conj}");
            for cy in &other.cycles {
                assert_eq!((cy.link, cy.index), (p.cycles[0].link, p.cycles[0].index));
            }
        }
    }

    #[test]
    fn rejects_non_reflections() {
        let c = complex(3, 5, "");
        let abc = Alphabet::reflection();
        assert!(matches!(
            trace_mirror(&c, &parse_word("PQ", &abc).unwrap()),
            Err(TraceError::OrientationPreserving)
        ));
        assert!(matches!(
            trace_mirror(&c, &parse_word("PQR", &abc).unwrap()),
            Err(TraceError::NotInvolution)
        ));
    }

    #[test]
    fn census_and_trace_agree_on_the_base_mirror() {
        let c = complex(4, 4, "(BC^-1)^3");
        let census = mirror_census(&c).unwrap();
        for s in 0..3 {
            let trace = trace_mirror(&c, &Word::generator(s)).unwrap();
            let key = c.side_key(0, s);
            let a = trace
                .cycles
                .iter()
                .find(|cy| cy.sides.contains(&key))
                .unwrap();
            let b = census
                .mirrors
                .iter()
                .find(|cy| cy.sides.contains(&key))
                .unwrap();
            let mut sa = a.sides.clone();
            let mut sb = b.sides.clone();
            sa.sort();
            sb.sort();
            assert_eq!(sa, sb);
        }
    }

    #[test]
    fn verification_on_bolza() {
        let p = Presentation::triangle_rotation(3, 8);
        let p = p.with_relators([p.word("[C^4,B]").unwrap()]).unwrap();
        let v = verify_against_patterns(&p, t(3, 8), DEFAULT_BUDGET).unwrap();
        assert!(v.agrees() && v.respects_harnack());
        assert_eq!(v.genus, 2);
        assert_eq!(v.classes[0].traced, (Link::L01, 2));
        assert_eq!(v.classes[1].traced, (Link::L0212, 2));
    }

    #[test]
    fn cycle_classification() {
        assert_eq!(classify_cycle(&[0, 1, 0, 1]).unwrap(), (Link::L01, 2));
        assert_eq!(classify_cycle(&[2, 1, 2, 0]).unwrap(), (Link::L0212, 1));
        assert!(classify_cycle(&[0, 0]).is_err());
    }

    #[test]
    fn dump_lists_cycles() {
        let c = complex(3, 3, "");
        let trace = trace_mirror(&c, &Word::generator(1)).unwrap();
        let text = debug_dump(&trace);
        assert!(
            text.starts_with("reflection Q\ncycle 0: (010212)^1"),
            "{text}"
        );
    }
}
