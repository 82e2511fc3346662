//! Recursive-descent parser for the regex grammar:
//!
//! ```text
//! union   := concat ('|' concat)*
//! concat  := postfix ('.'? postfix)*
//! postfix := atom '*'*
//! atom    := '<' digit (',' digit)* '>' | '#' | '@' | '(' union ')'
//! ```
//!
//! `#` is the empty language, `@` the empty word. Whitespace is ignored.

use crate::codec::{Basis, DigitVector, Word};
use crate::lang::Regex;
use crate::{Error, Result};

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    basis: Basis,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, basis: Basis) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            basis,
            text,
        }
    }

    fn location(&self, pos: usize) -> (usize, usize) {
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
        (line, column)
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> Error {
        let (line, column) = self.location(pos);
        Error::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.error_at(self.pos, format!("expected '{want}', found '{c}'"))),
            None => Err(self.error_at(self.pos, format!("expected '{want}', found end of input"))),
        }
    }

    fn parse_all(&mut self) -> Result<Regex> {
        if self.text.trim().is_empty() {
            return Err(self.error_at(0, "empty expression"));
        }
        let e = self.union()?;
        if let Some(c) = self.peek() {
            return Err(self.error_at(self.pos, format!("unexpected '{c}'")));
        }
        Ok(e)
    }

    fn union(&mut self) -> Result<Regex> {
        let mut e = self.concat()?;
        while self.peek() == Some('|') {
            self.pos += 1;
            let rhs = self.concat()?;
            e = Regex::union(e, rhs);
        }
        Ok(e)
    }

    fn concat(&mut self) -> Result<Regex> {
        let mut e = self.postfix()?;
        loop {
            match self.peek() {
                Some('.') => {
                    self.pos += 1;
                    let rhs = self.postfix()?;
                    e = Regex::concat(e, rhs);
                }
                Some('<' | '#' | '@' | '(') => {
                    let rhs = self.postfix()?;
                    e = Regex::concat(e, rhs);
                }
                _ => return Ok(e),
            }
        }
    }

    fn postfix(&mut self) -> Result<Regex> {
        let mut e = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            e = Regex::star(e);
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Regex> {
        match self.peek() {
            Some('#') => {
                self.pos += 1;
                Ok(Regex::Empty)
            }
            Some('@') => {
                self.pos += 1;
                Ok(Regex::Epsilon)
            }
            Some('(') => {
                self.pos += 1;
                let e = self.union()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('<') => self.letter().map(Regex::Letter),
            Some(c) => Err(self.error_at(self.pos, format!("unexpected '{c}'"))),
            None => Err(self.error_at(self.pos, "unexpected end of input")),
        }
    }

    fn letter(&mut self) -> Result<DigitVector> {
        self.expect('<')?;
        let mut digits = Vec::new();
        loop {
            digits.push(self.digit()?);
            match self.peek() {
                Some(',') => self.pos += 1,
                Some('>') => {
                    self.pos += 1;
                    break;
                }
                Some(c) => {
                    return Err(self.error_at(self.pos, format!("expected ',' or '>', found '{c}'")))
                }
                None => return Err(self.error_at(self.pos, "unterminated digit vector")),
            }
        }
        DigitVector::new(self.basis, digits)
    }

    fn digit(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error_at(start, "expected a digit"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        let value: u64 = text
            .parse()
            .map_err(|_| self.error_at(start, format!("digit '{text}' too large")))?;
        if value >= self.basis.radix() as u64 {
            return Err(Error::DigitOutOfRange {
                digit: value,
                radix: self.basis.radix(),
            });
        }
        Ok(value as u32)
    }
}

pub fn parse_regex(text: &str, basis: Basis) -> Result<Regex> {
    Parser::new(text, basis).parse_all()
}

/// Parses a single word: juxtaposed letters, or `@` for the empty word.
pub fn parse_word(text: &str, basis: Basis) -> Result<Word> {
    fn collect(e: &Regex, out: &mut Vec<DigitVector>) -> bool {
        match e {
            Regex::Epsilon => true,
            Regex::Letter(d) => {
                out.push(d.clone());
                true
            }
            Regex::Concat(a, b) => collect(a, out) && collect(b, out),
            _ => false,
        }
    }
    let e = parse_regex(text, basis)?;
    let mut letters = Vec::new();
    if !collect(&e, &mut letters) {
        return Err(Error::Syntax {
            line: 1,
            column: 1,
            message: "expected a word (letters only)".into(),
        });
    }
    Ok(Word::from_letters_unchecked(basis, letters))
}
