use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::word::{Alphabet, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("relator {index} is empty after free reduction")]
    EmptyRelator { index: usize },
    #[error("relator {index} uses generator {generator}, but the alphabet has {len} generators")]
    UnknownGenerator {
        index: usize,
        generator: usize,
        len: usize,
    },
    #[error("presentation has no relators; mark it `free` to accept a free group")]
    NoRelators,
    #[error("expected generators {expected:?}, found {found:?}")]
    WrongAlphabet {
        expected: Vec<String>,
        found: Vec<String>,
    },
}

/// A finite presentation: generators plus freely reduced relators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Presentation {
    alphabet: Alphabet,
    relators: Vec<Word>,
    free: bool,
}

impl Presentation {
    /// Relators are freely reduced; an empty one is an error, as is an empty list.
    pub fn new(alphabet: Alphabet, relators: Vec<Word>) -> Result<Self, PresentationError> {
        Self::build(alphabet, relators, false)
    }

    /// Like [`Presentation::new`] but accepts an empty relator list.
    pub fn new_free(alphabet: Alphabet, relators: Vec<Word>) -> Result<Self, PresentationError> {
        Self::build(alphabet, relators, true)
    }

    fn build(
        alphabet: Alphabet,
        relators: Vec<Word>,
        free: bool,
    ) -> Result<Self, PresentationError> {
        let relators = relators
            .into_iter()
            .enumerate()
            .map(|(index, w)| {
                if let Some(g) = w.max_generator() {
                    if g >= alphabet.len() {
                        return Err(PresentationError::UnknownGenerator {
                            index,
                            generator: g,
                            len: alphabet.len(),
                        });
                    }
                }
                let reduced = w.free_reduce();
                if reduced.is_empty() {
                    Err(PresentationError::EmptyRelator { index })
                } else {
                    Ok(reduced)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        if relators.is_empty() && !free {
            return Err(PresentationError::NoRelators);
        }
        Ok(Self {
            alphabet,
            relators,
            free,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_count(&self) -> usize {
        self.alphabet.len()
    }

    pub fn is_free(&self) -> bool {
        self.free
    }

    /// The presentation with extra relators appended.
    pub fn with_relators(
        &self,
        extra: impl IntoIterator<Item = Word>,
    ) -> Result<Self, PresentationError> {
        let mut relators = self.relators.clone();
        relators.extend(extra);
        Self::build(self.alphabet.clone(), relators, self.free)
    }

    /// Parse a word against this presentation's alphabet.
    pub fn word(&self, text: &str) -> Result<Word, super::ParseError> {
        super::parser::parse_word(text, &self.alphabet)
    }

    /// Generator indices of `names`, in order, or an error naming the mismatch.
    pub fn require_generators(&self, names: &[&str]) -> Result<Vec<usize>, PresentationError> {
        names
            .iter()
            .map(|n| self.alphabet.index_of(n))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| PresentationError::WrongAlphabet {
                expected: names.iter().map(|s| s.to_string()).collect(),
                found: self.alphabet.names().to_vec(),
            })
    }

    /// The ordinary triangle-group presentation `⟨A,B,C | A², Bᵐ, Cⁿ, ABC⟩`.
    pub fn triangle_rotation(m: u32, n: u32) -> Self {
        let (a, b, c) = (Word::generator(0), Word::generator(1), Word::generator(2));
        let abc = &(&a * &b) * &c;
        Self::new(
            Alphabet::rotation(),
            vec![a.pow(2), b.pow(m as i64), c.pow(n as i64), abc],
        )
        .expect("triangle relators are non-empty")
    }

    /// The extended triangle-group presentation
    /// `⟨P,Q,R | P², Q², R², (PQ)², (QR)ᵐ, (RP)ⁿ⟩`.
    pub fn triangle_reflection(m: u32, n: u32) -> Self {
        let (p, q, r) = (Word::generator(0), Word::generator(1), Word::generator(2));
        Self::new(
            Alphabet::reflection(),
            vec![
                p.pow(2),
                q.pow(2),
                r.pow(2),
                (&p * &q).pow(2),
                (&q * &r).pow(m as i64),
                (&r * &p).pow(n as i64),
            ],
        )
        .expect("triangle relators are non-empty")
    }

    /// Rotation relators beyond the triangle relators: every relator other than
    /// `A^k`, `B^k`, `C^k` (single-generator powers) and `ABC`.
    pub fn extra_rotation_relators(&self) -> Result<Vec<Word>, PresentationError> {
        let idx = self.require_generators(&["A", "B", "C"])?;
        let abc = Word::from_letters(idx.iter().map(|&g| Letter::new(g, false)));
        Ok(self
            .relators
            .iter()
            .filter(|w| !is_single_generator_power(w) && **w != abc)
            .cloned()
            .collect())
    }

    /// Rewrite a rotation presentation over `A, B, C` into the extended group over
    /// `P, Q, R` via `A = PQ`, `B = QR`, `C = RP`, replacing the triangle relators by
    /// the reflection relators for type `{m, n}`.
    ///
    /// This presents the full automorphism group only for reflexible maps; callers
    /// check that the resulting order is twice the rotation order.
    pub fn extend_to_reflections(&self, m: u32, n: u32) -> Result<Self, PresentationError> {
        let idx = self.require_generators(&["A", "B", "C"])?;
        let (p, q, r) = (Word::generator(0), Word::generator(1), Word::generator(2));
        let mut images = vec![Word::identity(); self.alphabet.len()];
        images[idx[0]] = &p * &q;
        images[idx[1]] = &q * &r;
        images[idx[2]] = &r * &p;
        let base = Self::triangle_reflection(m, n);
        let extra = self
            .extra_rotation_relators()?
            .into_iter()
            .map(|w| w.substitute(&images));
        base.with_relators(extra)
    }

    /// Presentation of the dual map's rotation group: `A ↦ A⁻¹`, `B ↦ C⁻¹`, `C ↦ B⁻¹`,
    /// which is the rotation shadow of swapping `P` and `Q`.
    pub fn dual_rotation(&self) -> Result<Self, PresentationError> {
        let idx = self.require_generators(&["A", "B", "C"])?;
        let mut images: Vec<Word> = (0..self.alphabet.len()).map(Word::generator).collect();
        images[idx[0]] = Word::generator(idx[0]).inverse();
        images[idx[1]] = Word::generator(idx[2]).inverse();
        images[idx[2]] = Word::generator(idx[1]).inverse();
        let relators = self
            .relators
            .iter()
            .map(|w| w.substitute(&images))
            .collect();
        Self::build(self.alphabet.clone(), relators, self.free)
    }

    /// Swap `P` and `Q` in an extended presentation: the dual map's full group.
    pub fn dual_reflection(&self) -> Result<Self, PresentationError> {
        let idx = self.require_generators(&["P", "Q"])?;
        let mut images: Vec<Word> = (0..self.alphabet.len()).map(Word::generator).collect();
        images.swap(idx[0], idx[1]);
        let relators = self
            .relators
            .iter()
            .map(|w| w.substitute(&images))
            .collect();
        Self::build(self.alphabet.clone(), relators, self.free)
    }
}

fn is_single_generator_power(w: &Word) -> bool {
    let runs = w.runs();
    runs.len() == 1
}

/// Serializes in the fixture grammar; the output parses back to an equal value.
impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("gens")?;
        for name in self.alphabet.names() {
            write!(f, " {name}")?;
        }
        f.write_str(";")?;
        if !self.relators.is_empty() {
            f.write_str(" rels")?;
            for w in &self.relators {
                write!(f, " {}", w.display(&self.alphabet))?;
            }
            f.write_str(";")?;
        }
        if self.free {
            f.write_str(" free;")?;
        }
        Ok(())
    }
}
