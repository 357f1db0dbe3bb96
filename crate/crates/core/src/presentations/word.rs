use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

/// A generator together with an exponent sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub const fn new(generator: usize, inverse: bool) -> Self {
        Self { generator, inverse }
    }

    pub const fn inverted(self) -> Self {
        Self {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    /// Column of this letter in a coset table: `2g` for `g`, `2g + 1` for `g⁻¹`.
    pub const fn column(self) -> usize {
        2 * self.generator + self.inverse as usize
    }

    pub const fn from_column(column: usize) -> Self {
        Self {
            generator: column / 2,
            inverse: column % 2 == 1,
        }
    }
}

/// An ordered list of generator names. Words carry generator indices into one of these.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Self {
            names: names.into_iter().map(Into::into).collect(),
        }
    }

    /// The rotation alphabet `A, B, C`.
    pub fn rotation() -> Self {
        Self::new(["A", "B", "C"])
    }

    /// The reflection alphabet `P, Q, R`.
    pub fn reflection() -> Self {
        Self::new(["P", "Q", "R"])
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, generator: usize) -> &str {
        &self.names[generator]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A word in the free group on an alphabet. The empty word is the identity.
///
/// Products built through [`Word::mul`], [`Word::pow`] and [`Word::inverse`] stay
/// freely reduced when their inputs are; [`Word::from_letters`] keeps letters verbatim.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        Self {
            letters: letters.into_iter().collect(),
        }
    }

    pub fn generator(generator: usize) -> Self {
        Self {
            letters: vec![Letter::new(generator, false)],
        }
    }

    /// `g^exponent` for a single generator.
    pub fn power_of(generator: usize, exponent: i64) -> Self {
        let letter = Letter::new(generator, exponent < 0);
        Self {
            letters: vec![letter; exponent.unsigned_abs() as usize],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.free_reduce().is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    pub fn pow(&self, exponent: i64) -> Self {
        let base = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut letters = Vec::with_capacity(base.len() * exponent.unsigned_abs() as usize);
        for _ in 0..exponent.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Self { letters }.free_reduce()
    }

    /// The commutator `x⁻¹ y⁻¹ x y`.
    pub fn commutator(x: &Word, y: &Word) -> Self {
        &(&(&x.inverse() * &y.inverse()) * x) * y
    }

    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &letter in &self.letters {
            match out.last() {
                Some(&last) if last == letter.inverted() => {
                    out.pop();
                }
                _ => out.push(letter),
            }
        }
        Self { letters: out }
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1].inverted())
    }

    /// Replace every generator `g` by `images[g]` (and `g⁻¹` by its inverse).
    pub fn substitute(&self, images: &[Word]) -> Self {
        let mut letters = Vec::new();
        for letter in &self.letters {
            let image = &images[letter.generator];
            if letter.inverse {
                letters.extend(image.letters.iter().rev().map(|l| l.inverted()));
            } else {
                letters.extend_from_slice(&image.letters);
            }
        }
        Self { letters }.free_reduce()
    }

    /// Map generator indices between alphabets by name.
    pub fn rename(&self, from: &Alphabet, to: &Alphabet) -> Option<Self> {
        let letters = self
            .letters
            .iter()
            .map(|l| {
                to.index_of(from.name(l.generator))
                    .map(|g| Letter::new(g, l.inverse))
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Self { letters })
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.generator).max()
    }

    /// Run-length form: consecutive equal letters collapsed to `(letter, count)`.
    pub fn runs(&self) -> Vec<(Letter, usize)> {
        let mut runs: Vec<(Letter, usize)> = Vec::new();
        for &letter in &self.letters {
            match runs.last_mut() {
                Some((l, count)) if *l == letter => *count += 1,
                _ => runs.push((letter, 1)),
            }
        }
        runs
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> WordDisplay<'a> {
        WordDisplay {
            word: self,
            alphabet,
        }
    }
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        let mut letters = self.letters.clone();
        for &letter in &rhs.letters {
            match letters.last() {
                Some(&last) if last == letter.inverted() => {
                    letters.pop();
                }
                _ => letters.push(letter),
            }
        }
        Word { letters }
    }
}

impl Mul for Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        &self * &rhs
    }
}

/// Freely reduce a word.
pub fn free_reduce(word: &Word) -> Word {
    word.free_reduce()
}

/// Formats a word in the fixture grammar, e.g. `B^2CB^2C^4BC^4` or `C^-1B`.
pub struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        for (letter, count) in self.word.runs() {
            f.write_str(self.alphabet.name(letter.generator))?;
            match (letter.inverse, count) {
                (false, 1) => {}
                (false, k) => write!(f, "^{k}")?,
                (true, k) => write!(f, "^-{k}")?,
            }
        }
        Ok(())
    }
}
