//! Todd–Coxeter coset enumeration.
//!
//! Two definition strategies share one table and one coincidence routine:
//! HLT scans every relator at every live coset in order, defining cosets to fill
//! gaps; Felsch defines the first undefined entry and closes the table with relator
//! scans driven by a deduction stack. Coincidences are merged through union-find with
//! the smaller coset number as representative. Dead rows are compacted away when the
//! coset budget is reached, and a finished table is renumbered into breadth-first
//! standard form, so the result depends only on the group action.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::presentation::Presentation;
use super::word::{Letter, Word};

pub const DEFAULT_BUDGET: usize = 1_000_000;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("coset budget of {budget} exceeded ({defined} cosets defined); the index is infinite or larger than the budget")]
    BudgetExceeded { budget: usize, defined: u64 },
    #[error("budget must be at least 1")]
    ZeroBudget,
    #[error("subgroup generator uses generator {generator} outside the alphabet")]
    UnknownGenerator { generator: usize },
    #[error("coset table is incomplete")]
    IncompleteTable,
    #[error("word uses generator {generator}, but the table has {generators} generators")]
    WordOutOfRange { generator: usize, generators: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Strategy {
    #[default]
    Hlt,
    Felsch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Maximum number of coset rows held at once.
    pub budget: usize,
    pub strategy: Strategy,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            strategy: Strategy::Hlt,
        }
    }
}

impl EnumerationOptions {
    pub fn with_budget(budget: usize) -> Self {
        Self {
            budget,
            ..Self::default()
        }
    }
}

/// Counters from one enumeration run. Not part of table equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EnumerationStats {
    pub total_defined: u64,
    pub max_live: usize,
    pub coincidences: u64,
    pub compactions: u32,
}

/// A complete coset table: the permutation action of each generator (and inverse)
/// on the cosets, in standard numbering with coset 0 the subgroup itself.
#[derive(Clone, Serialize, Deserialize)]
pub struct CosetTable {
    generators: usize,
    cosets: usize,
    rows: Vec<u32>,
    #[serde(skip)]
    stats: EnumerationStats,
}

impl PartialEq for CosetTable {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators && self.rows == other.rows
    }
}

impl Eq for CosetTable {}

impl fmt::Debug for CosetTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CosetTable")
            .field("generators", &self.generators)
            .field("cosets", &self.cosets)
            .finish()
    }
}

impl CosetTable {
    /// Build from explicit rows (`rows[c][2g]` = image under `g`, `rows[c][2g+1]` under
    /// `g⁻¹`; `None` for undefined). Used for externally built actions.
    pub fn from_rows(generators: usize, rows: &[Vec<Option<usize>>]) -> Self {
        let cols = 2 * generators;
        let mut flat = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(
                row.len(),
                cols,
                "row width must be twice the generator count"
            );
            flat.extend(row.iter().map(|e| e.map_or(NONE, |c| c as u32)));
        }
        Self {
            generators,
            cosets: rows.len(),
            rows: flat,
            stats: EnumerationStats::default(),
        }
    }

    /// Number of cosets (the index of the subgroup).
    pub fn len(&self) -> usize {
        self.cosets
    }

    pub fn is_empty(&self) -> bool {
        self.cosets == 0
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn stats(&self) -> EnumerationStats {
        self.stats
    }

    pub fn is_complete(&self) -> bool {
        self.rows.iter().all(|&e| e != NONE)
    }

    fn cols(&self) -> usize {
        2 * self.generators
    }

    /// Image of `coset` under `letter`; `None` when undefined.
    pub fn act(&self, coset: usize, letter: Letter) -> Option<usize> {
        let e = self.rows[coset * self.cols() + letter.column()];
        (e != NONE).then_some(e as usize)
    }

    /// Image of `coset` under a table column, panicking if undefined.
    pub fn image(&self, coset: usize, column: usize) -> usize {
        let e = self.rows[coset * self.cols() + column];
        debug_assert_ne!(e, NONE);
        e as usize
    }

    /// Image of `coset` under the word (letters applied left to right).
    pub fn apply(&self, coset: usize, word: &Word) -> Option<usize> {
        word.letters()
            .iter()
            .try_fold(coset, |c, &l| self.act(c, l))
    }

    fn check_word(&self, word: &Word) -> Result<(), EnumerationError> {
        match word.max_generator() {
            Some(g) if g >= self.generators => Err(EnumerationError::WordOutOfRange {
                generator: g,
                generators: self.generators,
            }),
            _ => Ok(()),
        }
    }

    /// The permutation of cosets induced by `word`.
    pub fn permutation(&self, word: &Word) -> Result<Vec<usize>, EnumerationError> {
        self.check_word(word)?;
        (0..self.cosets)
            .map(|c| self.apply(c, word).ok_or(EnumerationError::IncompleteTable))
            .collect()
    }

    /// Plain-text serialization: a header line then one line per coset, 1-based.
    pub fn to_text(&self) -> String {
        let mut out = format!("cosets {} generators {}\n", self.cosets, self.generators);
        for c in 0..self.cosets {
            let row = &self.rows[c * self.cols()..(c + 1) * self.cols()];
            let cells: Vec<String> = row
                .iter()
                .map(|&e| {
                    if e == NONE {
                        "-".to_string()
                    } else {
                        (e + 1).to_string()
                    }
                })
                .collect();
            out.push_str(&format!("{}: {}\n", c + 1, cells.join(" ")));
        }
        out
    }
}

/// Enumerate the cosets of the subgroup generated by `subgroup` with the default (HLT)
/// strategy.
pub fn enumerate_cosets(
    presentation: &Presentation,
    subgroup: &[Word],
    budget: usize,
) -> Result<CosetTable, EnumerationError> {
    enumerate_cosets_with(
        presentation,
        subgroup,
        EnumerationOptions {
            budget,
            strategy: Strategy::Hlt,
        },
    )
}

pub fn enumerate_cosets_with(
    presentation: &Presentation,
    subgroup: &[Word],
    options: EnumerationOptions,
) -> Result<CosetTable, EnumerationError> {
    if options.budget == 0 {
        return Err(EnumerationError::ZeroBudget);
    }
    let generators = presentation.generator_count();
    for w in subgroup {
        if let Some(g) = w.max_generator().filter(|&g| g >= generators) {
            return Err(EnumerationError::UnknownGenerator { generator: g });
        }
    }
    let relators: Vec<Vec<usize>> = presentation
        .relators()
        .iter()
        .map(|w| w.letters().iter().map(|l| l.column()).collect())
        .collect();
    let subgroup: Vec<Vec<usize>> = subgroup
        .iter()
        .map(|w| w.free_reduce())
        .filter(|w| !w.is_empty())
        .map(|w| w.letters().iter().map(|l| l.column()).collect())
        .collect();
    let mut e = Enumerator::new(generators, relators, options);
    match options.strategy {
        Strategy::Hlt => e.run_hlt(&subgroup)?,
        Strategy::Felsch => e.run_felsch(&subgroup)?,
    }
    Ok(e.finish())
}

/// Order of the group: the index of the trivial subgroup.
pub fn group_order(presentation: &Presentation, budget: usize) -> Result<usize, EnumerationError> {
    enumerate_cosets(presentation, &[], budget).map(|t| t.len())
}

/// Multiplicative order of the permutation `word` induces on the cosets. On the
/// regular representation this is the order of the group element.
pub fn element_order(table: &CosetTable, word: &Word) -> Result<u64, EnumerationError> {
    let perm = table.permutation(word)?;
    let mut seen = vec![false; perm.len()];
    let mut order: u64 = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len: u64 = 0;
        let mut c = start;
        while !seen[c] {
            seen[c] = true;
            c = perm[c];
            len += 1;
        }
        order = order.lcm(&len);
    }
    Ok(order)
}

#[derive(Debug)]
enum Halt {
    Full,
}

struct Enumerator {
    cols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    allocated: usize,
    live: usize,
    budget: usize,
    relators: Vec<Vec<usize>>,
    /// Felsch only: cyclic conjugates of relators and their inverses, by first column.
    conjugates: Vec<Vec<Vec<usize>>>,
    felsch: bool,
    deductions: Vec<(u32, u32)>,
    merge_queue: Vec<u32>,
    stats: EnumerationStats,
}

#[inline]
fn inv(col: usize) -> usize {
    col ^ 1
}

impl Enumerator {
    fn new(generators: usize, relators: Vec<Vec<usize>>, options: EnumerationOptions) -> Self {
        let cols = 2 * generators;
        let felsch = options.strategy == Strategy::Felsch;
        let conjugates = if felsch {
            cyclic_conjugates(&relators, cols)
        } else {
            Vec::new()
        };
        let mut e = Self {
            cols,
            table: Vec::new(),
            parent: Vec::new(),
            allocated: 0,
            live: 0,
            budget: options.budget,
            relators,
            conjugates,
            felsch,
            deductions: Vec::new(),
            merge_queue: Vec::new(),
            stats: EnumerationStats::default(),
        };
        e.new_coset().expect("budget is at least 1");
        e
    }

    #[inline]
    fn get(&self, coset: usize, col: usize) -> u32 {
        self.table[coset * self.cols + col]
    }

    #[inline]
    fn set(&mut self, coset: usize, col: usize, value: u32) {
        self.table[coset * self.cols + col] = value;
    }

    #[inline]
    fn is_live(&self, coset: usize) -> bool {
        self.parent[coset] as usize == coset
    }

    fn new_coset(&mut self) -> Result<usize, Halt> {
        if self.allocated == self.budget {
            return Err(Halt::Full);
        }
        let c = self.allocated;
        self.allocated += 1;
        self.live += 1;
        self.table.extend(std::iter::repeat(NONE).take(self.cols));
        self.parent.push(c as u32);
        self.stats.total_defined += 1;
        self.stats.max_live = self.stats.max_live.max(self.live);
        Ok(c)
    }

    fn define(&mut self, coset: usize, col: usize) -> Result<(), Halt> {
        let b = self.new_coset()?;
        self.set(coset, col, b as u32);
        self.set(b, inv(col), coset as u32);
        if self.felsch {
            self.deductions.push((coset as u32, col as u32));
        }
        Ok(())
    }

    /// Find with path compression.
    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        let mut c = c;
        while self.parent[c] as usize != root {
            let next = self.parent[c] as usize;
            self.parent[c] = root as u32;
            c = next;
        }
        root
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (keep, kill) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[kill] = keep as u32;
            self.live -= 1;
            self.merge_queue.push(kill as u32);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.stats.coincidences += 1;
        self.merge_queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.merge_queue.len() {
            let dead = self.merge_queue[i] as usize;
            i += 1;
            for x in 0..self.cols {
                let d = self.get(dead, x);
                if d == NONE {
                    continue;
                }
                let d = d as usize;
                self.set(d, inv(x), NONE);
                let mu = self.rep(dead);
                let nu = self.rep(d);
                let mu_x = self.get(mu, x);
                if mu_x != NONE {
                    self.merge(nu, mu_x as usize);
                } else {
                    let nu_xi = self.get(nu, inv(x));
                    if nu_xi != NONE {
                        self.merge(mu, nu_xi as usize);
                    } else {
                        self.set(mu, x, nu as u32);
                        self.set(nu, inv(x), mu as u32);
                        if self.felsch {
                            self.deductions.push((mu as u32, x as u32));
                        }
                    }
                }
            }
        }
    }

    /// Scan `word` at `coset`, defining new cosets to close gaps.
    fn scan_and_fill(&mut self, coset: usize, word: &[usize]) -> Result<(), Halt> {
        if word.is_empty() {
            return Ok(());
        }
        let mut f = coset;
        let mut b = coset;
        let mut i: isize = 0;
        let mut j: isize = word.len() as isize - 1;
        loop {
            while i <= j {
                let next = self.get(f, word[i as usize]);
                if next == NONE {
                    break;
                }
                f = next as usize;
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i {
                let next = self.get(b, inv(word[j as usize]));
                if next == NONE {
                    break;
                }
                b = next as usize;
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let x = word[i as usize];
                self.set(f, x, b as u32);
                self.set(b, inv(x), f as u32);
                if self.felsch {
                    self.deductions.push((f as u32, x as u32));
                }
                return Ok(());
            }
            self.define(f, word[i as usize])?;
        }
    }

    /// Scan without defining; a single gap becomes a deduction.
    fn scan(&mut self, coset: usize, word: &[usize]) {
        let mut f = coset;
        let mut b = coset;
        let mut i: isize = 0;
        let mut j: isize = word.len() as isize - 1;
        while i <= j {
            let next = self.get(f, word[i as usize]);
            if next == NONE {
                break;
            }
            f = next as usize;
            i += 1;
        }
        if i > j {
            if f != b {
                self.coincidence(f, b);
            }
            return;
        }
        while j >= i {
            let next = self.get(b, inv(word[j as usize]));
            if next == NONE {
                break;
            }
            b = next as usize;
            j -= 1;
        }
        if j < i {
            self.coincidence(f, b);
        } else if i == j {
            let x = word[i as usize];
            self.set(f, x, b as u32);
            self.set(b, inv(x), f as u32);
            self.deductions.push((f as u32, x as u32));
        }
    }

    fn process_deductions(&mut self) {
        while let Some((c, x)) = self.deductions.pop() {
            let (c, x) = (c as usize, x as usize);
            if !self.is_live(c) {
                continue;
            }
            for k in 0..self.conjugates[x].len() {
                let w = std::mem::take(&mut self.conjugates[x][k]);
                self.scan(c, &w);
                self.conjugates[x][k] = w;
                if !self.is_live(c) {
                    break;
                }
            }
            if !self.is_live(c) {
                continue;
            }
            let d = self.get(c, x);
            if d == NONE || !self.is_live(d as usize) {
                continue;
            }
            let d = d as usize;
            let xi = inv(x);
            for k in 0..self.conjugates[xi].len() {
                let w = std::mem::take(&mut self.conjugates[xi][k]);
                self.scan(d, &w);
                self.conjugates[xi][k] = w;
                if !self.is_live(d) {
                    break;
                }
            }
        }
    }

    /// Drop dead rows, keeping live cosets in their relative order. Returns the map
    /// from old to new numbers.
    fn compact(&mut self) -> Vec<u32> {
        let mut renumber = vec![NONE; self.allocated];
        let mut next = 0u32;
        for (c, slot) in renumber.iter_mut().enumerate() {
            if self.is_live(c) {
                *slot = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next as usize * self.cols);
        for c in 0..self.allocated {
            if renumber[c] == NONE {
                continue;
            }
            for x in 0..self.cols {
                let e = self.get(c, x);
                table.push(if e == NONE {
                    NONE
                } else {
                    debug_assert_ne!(renumber[e as usize], NONE, "live row points at dead coset");
                    renumber[e as usize]
                });
            }
        }
        self.table = table;
        self.allocated = next as usize;
        self.deductions = self
            .deductions
            .iter()
            .filter(|&&(c, _)| renumber[c as usize] != NONE)
            .map(|&(c, x)| (renumber[c as usize], x))
            .collect();
        self.parent = (0..next).collect();
        debug_assert_eq!(self.live, self.allocated);
        self.stats.compactions += 1;
        renumber
    }

    fn budget_error(&self) -> EnumerationError {
        EnumerationError::BudgetExceeded {
            budget: self.budget,
            defined: self.stats.total_defined,
        }
    }

    /// Recover from a full table at a point where `coset` is live. Returns its new number.
    fn make_room(&mut self, coset: usize) -> Result<usize, EnumerationError> {
        if self.live < self.allocated {
            let map = self.compact();
            Ok(map[coset] as usize)
        } else {
            Err(self.budget_error())
        }
    }

    fn scan_subgroup(&mut self, subgroup: &[Vec<usize>]) -> Result<(), EnumerationError> {
        for w in subgroup {
            loop {
                match self.scan_and_fill(0, w) {
                    Ok(()) => break,
                    Err(Halt::Full) => {
                        self.make_room(0)?;
                    }
                }
            }
        }
        Ok(())
    }

    fn run_hlt(&mut self, subgroup: &[Vec<usize>]) -> Result<(), EnumerationError> {
        self.scan_subgroup(subgroup)?;
        let mut a = 0;
        'cosets: while a < self.allocated {
            if !self.is_live(a) {
                a += 1;
                continue;
            }
            let mut r = 0;
            while r < self.relators.len() {
                let w = std::mem::take(&mut self.relators[r]);
                let res = self.scan_and_fill(a, &w);
                self.relators[r] = w;
                match res {
                    Ok(()) => {
                        if !self.is_live(a) {
                            a += 1;
                            continue 'cosets;
                        }
                        r += 1;
                    }
                    Err(Halt::Full) => {
                        a = self.make_room(a)?;
                        r = 0;
                    }
                }
            }
            let mut x = 0;
            while x < self.cols {
                if self.get(a, x) == NONE {
                    if let Err(Halt::Full) = self.define(a, x) {
                        a = self.make_room(a)?;
                        continue;
                    }
                }
                x += 1;
            }
            a += 1;
        }
        Ok(())
    }

    fn run_felsch(&mut self, subgroup: &[Vec<usize>]) -> Result<(), EnumerationError> {
        self.scan_subgroup(subgroup)?;
        self.process_deductions();
        let mut a = 0;
        while a < self.allocated {
            let mut x = 0;
            while x < self.cols && self.is_live(a) {
                if self.get(a, x) == NONE {
                    match self.define(a, x) {
                        Ok(()) => self.process_deductions(),
                        Err(Halt::Full) => {
                            a = self.make_room(a)?;
                            continue;
                        }
                    }
                }
                x += 1;
            }
            a += 1;
        }
        Ok(())
    }

    /// Renumber live cosets breadth-first from coset 0, scanning columns in order.
    fn finish(mut self) -> CosetTable {
        let mut renumber = vec![NONE; self.allocated];
        let mut order: Vec<usize> = Vec::with_capacity(self.live);
        renumber[0] = 0;
        order.push(0);
        let mut head = 0;
        while head < order.len() {
            let c = order[head];
            head += 1;
            for x in 0..self.cols {
                let d = self.get(c, x) as usize;
                if renumber[d] == NONE {
                    renumber[d] = order.len() as u32;
                    order.push(d);
                }
            }
        }
        let mut rows = Vec::with_capacity(order.len() * self.cols);
        for &c in &order {
            for x in 0..self.cols {
                rows.push(renumber[self.get(c, x) as usize]);
            }
        }
        self.stats.max_live = self.stats.max_live.max(order.len());
        CosetTable {
            generators: self.cols / 2,
            cosets: order.len(),
            rows,
            stats: self.stats,
        }
    }
}

/// For each column `x`, the distinct cyclic conjugates of relators and inverse
/// relators that start with `x`.
fn cyclic_conjugates(relators: &[Vec<usize>], cols: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![Vec::new(); cols];
    for r in relators {
        let inverse: Vec<usize> = r.iter().rev().map(|&c| inv(c)).collect();
        for w in [r, &inverse] {
            for k in 0..w.len() {
                let rotated: Vec<usize> = w[k..].iter().chain(&w[..k]).copied().collect();
                let bucket = &mut out[rotated[0]];
                if !bucket.contains(&rotated) {
                    bucket.push(rotated);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::parse_presentation;

    fn order(text: &str) -> usize {
        group_order(&parse_presentation(text).unwrap(), DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn cyclic_groups() {
        assert_eq!(order("gens A; rels A^7"), 7);
        assert_eq!(order("gens A; rels A"), 1);
    }

    #[test]
    fn dihedral_and_symmetric() {
        assert_eq!(order("gens X Y; rels X^2 Y^5 (XY)^2"), 10);
        assert_eq!(order("gens X Y; rels X^2 Y^3 (XY)^4"), 24);
    }

    #[test]
    fn spherical_rotation_groups() {
        assert_eq!(order("gens A B C; rels A^2 B^3 C^3 ABC"), 12);
        assert_eq!(order("gens A B C; rels A^2 B^3 C^4 ABC"), 24);
        assert_eq!(order("gens A B C; rels A^2 B^3 C^5 ABC"), 60);
    }

    #[test]
    fn subgroup_index() {
        let p = parse_presentation("gens A B C; rels A^2 B^3 C^5 ABC").unwrap();
        let c = Word::generator(2);
        let t = enumerate_cosets(&p, &[c], DEFAULT_BUDGET).unwrap();
        assert_eq!(t.len(), 12);
    }

    #[test]
    fn budget_exceeded_on_infinite_group() {
        let p = parse_presentation("gens A B; rels A^2 B^3").unwrap();
        let err = group_order(&p, 500).unwrap_err();
        assert!(matches!(
            err,
            EnumerationError::BudgetExceeded { budget: 500, .. }
        ));
        assert_eq!(
            group_order(&p, 0).unwrap_err(),
            EnumerationError::ZeroBudget
        );
    }

    #[test]
    fn strategies_give_identical_standard_tables() {
        let p = parse_presentation("gens A B C; rels A^2 B^3 C^7 ABC (B^2CB^2C^4BC^4)^3").unwrap();
        let hlt = enumerate_cosets_with(&p, &[], EnumerationOptions::default()).unwrap();
        let felsch = enumerate_cosets_with(
            &p,
            &[],
            EnumerationOptions {
                strategy: Strategy::Felsch,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(hlt.len(), 168);
        assert_eq!(hlt, felsch);
        assert_eq!(hlt.to_text(), felsch.to_text());
    }

    #[test]
    fn tight_budget_forces_compaction() {
        let p = parse_presentation("gens A B C; rels A^2 B^3 C^4 ABC").unwrap();
        let loose = enumerate_cosets(&p, &[], DEFAULT_BUDGET).unwrap();
        let tight = enumerate_cosets(&p, &[], 40).unwrap();
        assert_eq!(tight.len(), 24);
        assert_eq!(loose, tight);
        assert!(tight.stats().compactions > 0 || loose.stats().max_live <= 40);
    }

    #[test]
    fn element_orders() {
        let p = parse_presentation("gens A B C; rels A^2 B^3 C^5 ABC").unwrap();
        let t = enumerate_cosets(&p, &[], DEFAULT_BUDGET).unwrap();
        assert_eq!(element_order(&t, &Word::identity()).unwrap(), 1);
        assert_eq!(element_order(&t, &p.word("C").unwrap()).unwrap(), 5);
        // ABC = 1 gives CA = B⁻¹ and AB = C⁻¹
        assert_eq!(element_order(&t, &p.word("CA").unwrap()).unwrap(), 3);
        assert_eq!(element_order(&t, &p.word("AB").unwrap()).unwrap(), 5);
    }

    #[test]
    fn element_order_rejects_incomplete_table() {
        let t = CosetTable::from_rows(1, &[vec![Some(1), None], vec![None, Some(0)]]);
        assert!(!t.is_complete());
        assert_eq!(
            element_order(&t, &Word::generator(0)).unwrap_err(),
            EnumerationError::IncompleteTable
        );
        assert!(matches!(
            element_order(&t, &Word::generator(3)).unwrap_err(),
            EnumerationError::WordOutOfRange { .. }
        ));
    }

    #[test]
    fn text_form() {
        let t =
            enumerate_cosets(&parse_presentation("gens A; rels A^3").unwrap(), &[], 10).unwrap();
        assert_eq!(
            t.to_text(),
            "cosets 3 generators 1\n1: 2 3\n2: 3 1\n3: 1 2\n"
        );
    }
}
