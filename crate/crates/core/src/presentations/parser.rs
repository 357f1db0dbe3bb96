//! Parser for presentation fixture files.
//!
//! ```text
//! # Klein quartic
//! gens A B C;
//! rels A^2 B^3 C^7 ABC (B^2CB^2C^4BC^4)^3;
//! ```
//!
//! Statements end in `;` (the last one may omit it). `gens` comes first; `rels` lists
//! whitespace-separated relators and may repeat; `free` permits an empty relator list.
//! Generator names are an uppercase letter followed by optional digits. Within a word:
//! `X^k`, `X^-k`, `X'` (inverse), parenthesized subwords and commutators `[x,y] = x⁻¹y⁻¹xy`.

use std::fmt;

use thiserror::Error;

use super::presentation::{Presentation, PresentationError};
use super::word::{Alphabet, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    MissingGens,
    UnknownKeyword(String),
    UnknownGenerator(String),
    DuplicateGenerator(String),
    EmptyRelator,
    NoRelators,
    BadExponent,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            Self::UnexpectedEnd => f.write_str("unexpected end of input"),
            Self::MissingGens => f.write_str("expected `gens` statement first"),
            Self::UnknownKeyword(k) => write!(f, "unknown keyword `{k}`"),
            Self::UnknownGenerator(g) => write!(f, "unknown generator `{g}`"),
            Self::DuplicateGenerator(g) => write!(f, "generator `{g}` declared twice"),
            Self::EmptyRelator => f.write_str("relator is empty after free reduction"),
            Self::NoRelators => {
                f.write_str("no relators given (add a `free;` statement for a free group)")
            }
            Self::BadExponent => f.write_str("exponent is not a valid integer"),
        }
    }
}

pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut p = Parser::new(text);
    p.skip_blank();
    let gens_at = p.pos;
    match p.keyword() {
        Some(k) if k == "gens" => {}
        _ => return Err(p.error_at(gens_at, ParseErrorKind::MissingGens)),
    }
    let alphabet = p.generator_list()?;
    let mut relators = Vec::new();
    let mut free = false;
    loop {
        p.skip_blank();
        if p.at_end() {
            break;
        }
        let at = p.pos;
        match p.keyword() {
            Some(k) if k == "rels" => p.relator_list(&alphabet, &mut relators)?,
            Some(k) if k == "free" => {
                free = true;
                p.end_statement()?;
            }
            Some(k) => return Err(p.error_at(at, ParseErrorKind::UnknownKeyword(k))),
            None => {
                let c = p.peek().expect("not at end");
                return Err(p.error_at(at, ParseErrorKind::UnexpectedChar(c)));
            }
        }
    }
    let end = p.pos;
    let relator_words = relators.into_iter().map(|(w, _)| w).collect();
    let built = if free {
        Presentation::new_free(alphabet, relator_words)
    } else {
        Presentation::new(alphabet, relator_words)
    };
    built.map_err(|e| match e {
        PresentationError::NoRelators => p.error_at(end, ParseErrorKind::NoRelators),
        other => unreachable!("parser validated relators already: {other}"),
    })
}

/// Parse a single word (whitespace between factors allowed) over `alphabet`.
/// The result is freely reduced and may be empty.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word, ParseError> {
    let mut p = Parser::new(text);
    p.skip_ws();
    let w = p.word(alphabet, true)?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.error_at(p.pos, ParseErrorKind::UnexpectedChar(c)));
    }
    Ok(w.free_reduce())
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Self {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn error_at(&self, pos: usize, kind: ParseErrorKind) -> ParseError {
        let mut line = 1;
        let mut column = 1;
        for &c in &self.chars[..pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        ParseError { line, column, kind }
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some(c) => self.error_at(self.pos, ParseErrorKind::UnexpectedChar(c)),
            None => self.error_at(self.pos, ParseErrorKind::UnexpectedEnd),
        }
    }

    /// Skip whitespace and `#` comments.
    fn skip_blank(&mut self) {
        loop {
            match self.peek() {
                Some(c) if c.is_whitespace() => self.pos += 1,
                Some('#') => {
                    while let Some(c) = self.bump() {
                        if c == '\n' {
                            break;
                        }
                    }
                }
                _ => return,
            }
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn keyword(&mut self) -> Option<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_lowercase()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn name(&mut self) -> Option<String> {
        let start = self.pos;
        if !matches!(self.peek(), Some(c) if c.is_ascii_uppercase()) {
            return None;
        }
        self.pos += 1;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        Some(self.chars[start..self.pos].iter().collect())
    }

    /// Consume `;` or accept end of input.
    fn end_statement(&mut self) -> Result<(), ParseError> {
        self.skip_blank();
        match self.peek() {
            None => Ok(()),
            Some(';') => {
                self.pos += 1;
                Ok(())
            }
            Some(_) => Err(self.unexpected()),
        }
    }

    fn generator_list(&mut self) -> Result<Alphabet, ParseError> {
        let mut names: Vec<String> = Vec::new();
        loop {
            self.skip_blank();
            match self.peek() {
                None => break,
                Some(';') => {
                    self.pos += 1;
                    break;
                }
                _ => {}
            }
            let at = self.pos;
            let name = self.name().ok_or_else(|| self.unexpected())?;
            if matches!(self.peek(), Some(c) if !c.is_whitespace() && c != ';' && c != '#') {
                return Err(self.unexpected());
            }
            if names.contains(&name) {
                return Err(self.error_at(at, ParseErrorKind::DuplicateGenerator(name)));
            }
            names.push(name);
        }
        Ok(Alphabet::new(names))
    }

    fn relator_list(
        &mut self,
        alphabet: &Alphabet,
        out: &mut Vec<(Word, usize)>,
    ) -> Result<(), ParseError> {
        loop {
            self.skip_blank();
            match self.peek() {
                None => return Ok(()),
                Some(';') => {
                    self.pos += 1;
                    return Ok(());
                }
                Some(',') => {
                    self.pos += 1;
                    continue;
                }
                _ => {}
            }
            let at = self.pos;
            let w = self.word(alphabet, false)?;
            match self.peek() {
                None | Some(';') | Some(',') | Some('#') => {}
                Some(c) if c.is_whitespace() => {}
                Some(_) => return Err(self.unexpected()),
            }
            let reduced = w.free_reduce();
            if reduced.is_empty() {
                return Err(self.error_at(at, ParseErrorKind::EmptyRelator));
            }
            out.push((reduced, at));
        }
    }

    /// A non-empty sequence of factors. Inside brackets, whitespace may separate factors.
    fn word(&mut self, alphabet: &Alphabet, nested: bool) -> Result<Word, ParseError> {
        let mut w = Word::identity();
        let mut any = false;
        loop {
            if nested {
                self.skip_ws();
            }
            match self.peek() {
                Some(c) if c.is_ascii_uppercase() || c == '(' || c == '[' => {
                    let f = self.factor(alphabet)?;
                    w = &w * &f;
                    any = true;
                }
                Some('1') if !any => {
                    // the identity word, written `1`
                    self.pos += 1;
                    any = true;
                }
                _ => break,
            }
        }
        if any {
            Ok(w)
        } else {
            Err(self.unexpected())
        }
    }

    fn factor(&mut self, alphabet: &Alphabet) -> Result<Word, ParseError> {
        let mut base = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.word(alphabet, true)?;
                self.skip_ws();
                self.expect(')')?;
                inner
            }
            Some('[') => {
                self.pos += 1;
                let x = self.word(alphabet, true)?;
                self.skip_ws();
                self.expect(',')?;
                let y = self.word(alphabet, true)?;
                self.skip_ws();
                self.expect(']')?;
                Word::commutator(&x, &y)
            }
            _ => {
                let at = self.pos;
                let name = self.name().ok_or_else(|| self.unexpected())?;
                let g = alphabet
                    .index_of(&name)
                    .ok_or_else(|| self.error_at(at, ParseErrorKind::UnknownGenerator(name)))?;
                Word::generator(g)
            }
        };
        loop {
            match self.peek() {
                Some('\'') => {
                    self.pos += 1;
                    base = base.inverse();
                }
                Some('^') => {
                    self.pos += 1;
                    let e = self.exponent()?;
                    base = base.pow(e);
                }
                _ => return Ok(base),
            }
        }
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(self.unexpected());
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse::<i64>()
            .ok()
            .filter(|e| e.unsigned_abs() <= u32::MAX as u64)
            .ok_or_else(|| self.error_at(start, ParseErrorKind::BadExponent))
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_triangle_presentation() {
        let p = parse_presentation("gens A B C; rels A^2 B^3 C^7 ABC").unwrap();
        assert_eq!(p.generator_count(), 3);
        assert_eq!(p.relators().len(), 4);
        assert_eq!(p, Presentation::triangle_rotation(3, 7));
    }

    #[test]
    fn extended_triangle_presentation() {
        let p = parse_presentation("gens P Q R; rels P^2 Q^2 R^2 (PQ)^2 (QR)^3 (RP)^7").unwrap();
        assert_eq!(p, Presentation::triangle_reflection(3, 7));
    }

    #[test]
    fn empty_relator_list_needs_free_flag() {
        let err = parse_presentation("gens A; rels").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::NoRelators);
        let p = parse_presentation("gens A; rels; free").unwrap();
        assert!(p.is_free());
        assert!(p.relators().is_empty());
    }

    #[test]
    fn empty_relator_is_rejected_with_location() {
        let err = parse_presentation("gens A B;\nrels A^2 BB'").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::EmptyRelator);
        assert_eq!((err.line, err.column), (2, 10));
    }

    #[test]
    fn unknown_generator() {
        let err = parse_presentation("gens A B; rels A^2 D").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownGenerator("D".into()));
        assert_eq!((err.line, err.column), (1, 20));
    }

    #[test]
    fn syntax_error_location() {
        let err = parse_presentation("gens A B;\n  rels A^2 (AB^3").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnexpectedEnd);
        assert_eq!(err.line, 2);
        let err = parse_presentation("gens A B; rels A^x").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnexpectedChar('x'));
        assert_eq!((err.line, err.column), (1, 18));
    }

    #[test]
    fn missing_gens() {
        let err = parse_presentation("# nothing\nrels A^2").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::MissingGens);
        assert_eq!(err.line, 2);
    }

    #[test]
    fn inverse_notations_agree() {
        let abc = Alphabet::rotation();
        let a = parse_word("C^-1B", &abc).unwrap();
        let b = parse_word("C'B", &abc).unwrap();
        let c = parse_word("(B^-1C)^-1", &abc).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn commutator_and_comments() {
        let p = parse_presentation(
            "# cyclic quotient\ngens A B C; # three generators\nrels A^2 B^6 C^3 ABC [B, C];\n",
        )
        .unwrap();
        assert_eq!(p.relators().len(), 5);
        assert_eq!(
            p.relators()[4].display(p.alphabet()).to_string(),
            "B^-1C^-1BC"
        );
    }

    #[test]
    fn multi_character_names() {
        let p = parse_presentation("gens X1 X2 X; rels X1^2 X2X1X X^3").unwrap();
        assert_eq!(p.relators()[1].len(), 3);
        assert_eq!(p.to_string(), "gens X1 X2 X; rels X1^2 X2X1X X^3;");
    }

    #[test]
    fn serializer_round_trips() {
        let text = "gens A B C; rels A^2 B^3 C^7 ABC (B^2CB^2C^4BC^4)^2;";
        let p = parse_presentation(text).unwrap();
        let again = parse_presentation(&p.to_string()).unwrap();
        assert_eq!(p, again);
        let free = parse_presentation("gens A; free").unwrap();
        assert_eq!(free.to_string(), "gens A; free;");
        assert_eq!(parse_presentation(&free.to_string()).unwrap(), free);
    }
}
