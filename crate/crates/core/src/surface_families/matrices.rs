//! Concrete matrix groups: 2×2 matrices mod p and projective 3×3 monomial matrices.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;

use crate::presentations::Word;

/// A group element with exact equality, enough to compute orders and closures.
pub trait GroupElement: Clone + Eq + Hash {
    fn identity_like(&self) -> Self;
    fn compose(&self, rhs: &Self) -> Self;

    fn is_identity(&self) -> bool {
        *self == self.identity_like()
    }

    fn pow(&self, k: u64) -> Self {
        let mut acc = self.identity_like();
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }

    /// Multiplicative order, or `None` if it exceeds `cap`.
    fn order_capped(&self, cap: u64) -> Option<u64> {
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.compose(self);
        }
        None
    }

    fn order(&self) -> u64 {
        self.order_capped(1 << 20)
            .expect("elements of these finite groups have small order")
    }

    fn inverse(&self) -> Self {
        self.pow(self.order() - 1)
    }
}

/// Evaluate a word with `gens[i]` substituted for generator `i`.
pub fn evaluate<T: GroupElement>(word: &Word, gens: &[T]) -> T {
    let inverses: Vec<T> = gens.iter().map(GroupElement::inverse).collect();
    word.letters()
        .iter()
        .fold(gens[0].identity_like(), |acc, l| {
            acc.compose(if l.inverse {
                &inverses[l.generator]
            } else {
                &gens[l.generator]
            })
        })
}

/// Size of the group generated by `gens`, or `None` once more than `cap` elements appear.
pub fn closure_size<T: GroupElement>(gens: &[T], cap: usize) -> Option<usize> {
    let identity = gens.first()?.identity_like();
    let mut seen = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.compose(g);
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(y);
            }
        }
    }
    Some(seen.len())
}

/// A 2×2 matrix over the integers mod `p`, entries kept in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MatrixModP {
    pub p: i64,
    pub entries: [[i64; 2]; 2],
}

impl MatrixModP {
    pub fn new(p: i64, entries: [[i64; 2]; 2]) -> Self {
        let mut m = Self { p, entries };
        for row in &mut m.entries {
            for x in row {
                *x = x.rem_euclid(p);
            }
        }
        m
    }

    pub fn identity(p: i64) -> Self {
        Self::new(p, [[1, 0], [0, 1]])
    }

    pub fn det(&self) -> i64 {
        let [[a, b], [c, d]] = self.entries;
        (a * d - b * c).rem_euclid(self.p)
    }

    /// Entries as representatives in `-(p-1)/2..=(p-1)/2`, matching how matrices are usually printed.
    pub fn signed_entries(&self) -> [[i64; 2]; 2] {
        self.entries
            .map(|row| row.map(|x| if x > self.p / 2 { x - self.p } else { x }))
    }
}

impl GroupElement for MatrixModP {
    fn identity_like(&self) -> Self {
        Self::identity(self.p)
    }

    fn compose(&self, rhs: &Self) -> Self {
        let [[a, b], [c, d]] = self.entries;
        let [[e, f], [g, h]] = rhs.entries;
        Self::new(
            self.p,
            [
                [a * e + b * g, a * f + b * h],
                [c * e + d * g, c * f + d * h],
            ],
        )
    }
}

impl fmt::Display for MatrixModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.signed_entries();
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

/// A 3×3 monomial matrix over the `n`-th roots of unity, taken up to scalars.
///
/// Column `j` has its single non-zero entry `λ^exps[j]` in row `perm[j]`, where
/// `λ = e^{2πi/n}`. Values are normalized so that `exps[0] == 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonomialMatrix {
    pub n: u32,
    pub perm: [u8; 3],
    pub exps: [u32; 3],
}

impl MonomialMatrix {
    /// Build from signed exponents and normalize projectively.
    pub fn new(n: u32, perm: [u8; 3], exps: [i64; 3]) -> Self {
        let shift = exps[0];
        Self {
            n,
            perm,
            exps: exps.map(|e| (e - shift).rem_euclid(n as i64) as u32),
        }
    }

    pub fn identity(n: u32) -> Self {
        Self::new(n, [0, 1, 2], [0, 0, 0])
    }

    /// The same projective matrix with every exponent shifted by `k`, then renormalized.
    pub fn rescaled(&self, k: i64) -> Self {
        Self::new(self.n, self.perm, self.exps.map(|e| e as i64 + k))
    }
}

impl GroupElement for MonomialMatrix {
    fn identity_like(&self) -> Self {
        Self::identity(self.n)
    }

    /// `(XY)e_k = X(λ^{y_k} e_{σ_Y(k)}) = λ^{y_k + x_{σ_Y(k)}} e_{σ_X(σ_Y(k))}`.
    fn compose(&self, rhs: &Self) -> Self {
        let mut perm = [0u8; 3];
        let mut exps = [0i64; 3];
        for k in 0..3 {
            let mid = rhs.perm[k] as usize;
            perm[k] = self.perm[mid];
            exps[k] = self.exps[mid] as i64 + rhs.exps[k] as i64;
        }
        Self::new(self.n, perm, exps)
    }
}

impl fmt::Display for MonomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut rows = vec![vec!["0".to_string(); 3]; 3];
        for j in 0..3 {
            rows[self.perm[j] as usize][j] = match self.exps[j] {
                0 => "1".to_string(),
                1 => "l".to_string(),
                e => format!("l^{e}"),
            };
        }
        let lines: Vec<String> = rows.iter().map(|r| format!("[{}]", r.join(","))).collect();
        write!(f, "[{}]", lines.join(","))
    }
}

/// The Bolza generators over the integers mod 3: `A`, `B` and `C = B⁻¹A`.
pub fn bolza_generators() -> [MatrixModP; 3] {
    let a = MatrixModP::new(3, [[1, 1], [0, -1]]);
    let b = MatrixModP::new(3, [[0, -1], [1, -1]]);
    let c = b.inverse().compose(&a);
    [a, b, c]
}

/// The three generators of the Fermat curve's automorphism group acting on
/// `xⁿ + yⁿ + zⁿ = 0` by monomial substitutions.
pub fn fermat_generators(n: u32) -> [MonomialMatrix; 3] {
    let a = MonomialMatrix::new(n, [1, 0, 2], [-1, 1, 0]);
    let b = MonomialMatrix::new(n, [2, 0, 1], [0, 1, 0]);
    let c = MonomialMatrix::new(n, [2, 1, 0], [-1, 0, 0]);
    [a, b, c]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{parse_word, Alphabet};

    fn w(s: &str) -> Word {
        parse_word(s, &Alphabet::rotation()).unwrap()
    }

    #[test]
    fn bolza_matrices() {
        let gens = bolza_generators();
        assert_eq!(gens[2].signed_entries(), [[-1, 1], [-1, -1]]);
        let s1 = evaluate(&w("C^4B^2CB^2"), &gens);
        let s2 = evaluate(&w("C^4A"), &gens);
        assert_eq!(s1.signed_entries(), [[1, 0], [0, -1]]);
        assert_eq!(s2.signed_entries(), [[-1, -1], [0, 1]]);
        assert_eq!((s1.order(), s2.order()), (2, 2));
        assert_eq!(closure_size(&gens, 1000), Some(48));
    }

    #[test]
    fn fermat_relations_hold() {
        for n in 2..10 {
            let g = fermat_generators(n);
            for rel in ["A^2", "B^3", "ABC"] {
                assert!(evaluate(&w(rel), &g).is_identity(), "n={n} {rel}");
            }
            assert_eq!(g[2].order(), 2 * n as u64, "n={n}");
        }
    }

    #[test]
    fn fermat_translations_commute() {
        for n in 3..8 {
            let g = fermat_generators(n);
            let x = evaluate(&w("C^2"), &g);
            let y = evaluate(&w("AC^2A"), &g);
            assert_eq!(x.compose(&y), y.compose(&x));
            assert_eq!((x.order(), y.order()), (n as u64, n as u64));
        }
    }

    #[test]
    fn fermat_closure_has_order_6n2() {
        for n in 2..=6u32 {
            let g = fermat_generators(n);
            assert_eq!(closure_size(&g, 10_000), Some(6 * (n * n) as usize));
        }
    }

    #[test]
    fn fermat_c_to_the_n() {
        // n even: diag(λ^{-n/2}, 1, λ^{-n/2}), projectively diag(1, λ^{n/2}, 1)
        let g = fermat_generators(4);
        let cn = g[2].pow(4);
        assert_eq!(cn, MonomialMatrix::new(4, [0, 1, 2], [-2, 0, -2]));
        // n odd: column 1 in row 3 with λ^{(-n-1)/2}, column 3 in row 1 with λ^{(-n+1)/2}
        let g = fermat_generators(5);
        assert_eq!(g[2].pow(5), MonomialMatrix::new(5, [2, 1, 0], [-3, 0, -2]));
    }

    #[test]
    fn rescaling_is_projectively_trivial() {
        let g = fermat_generators(5);
        for k in -4..4 {
            assert_eq!(g[1].rescaled(k), g[1]);
        }
    }
}
