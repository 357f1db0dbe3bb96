//! Finitely presented groups: words, the fixture grammar, and coset enumeration.

mod coset;
mod parser;
mod presentation;
mod word;

pub use coset::{
    element_order, enumerate_cosets, enumerate_cosets_with, group_order, CosetTable,
    EnumerationError, EnumerationOptions, EnumerationStats, Strategy, DEFAULT_BUDGET,
};
pub use parser::{parse_presentation, parse_word, ParseError, ParseErrorKind};
pub use presentation::{Presentation, PresentationError};
pub use word::{free_reduce, Alphabet, Letter, Word, WordDisplay};
