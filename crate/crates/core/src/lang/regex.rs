use std::fmt;
use std::sync::Arc;

use crate::codec::{DigitVector, Word};

/// Regular expression over a digit-vector alphabet.
///
/// Children are shared, so cloning sub-expressions (as chain bodies do) is cheap.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Regex {
    Empty,
    Epsilon,
    Letter(DigitVector),
    Union(Arc<Regex>, Arc<Regex>),
    Concat(Arc<Regex>, Arc<Regex>),
    Star(Arc<Regex>),
}

impl Regex {
    pub fn letter(d: DigitVector) -> Regex {
        Regex::Letter(d)
    }

    pub fn union(a: Regex, b: Regex) -> Regex {
        Regex::Union(Arc::new(a), Arc::new(b))
    }

    pub fn concat(a: Regex, b: Regex) -> Regex {
        Regex::Concat(Arc::new(a), Arc::new(b))
    }

    pub fn star(a: Regex) -> Regex {
        Regex::Star(Arc::new(a))
    }

    /// `∅ | x = x`, `x | x = x`.
    pub fn union_simplified(a: Regex, b: Regex) -> Regex {
        match (&a, &b) {
            (Regex::Empty, _) => b,
            (_, Regex::Empty) => a,
            _ if a == b => a,
            _ => Regex::union(a, b),
        }
    }

    /// `∅` annihilates, `ε` is neutral.
    pub fn concat_simplified(a: Regex, b: Regex) -> Regex {
        match (&a, &b) {
            (Regex::Empty, _) | (_, Regex::Empty) => Regex::Empty,
            (Regex::Epsilon, _) => b,
            (_, Regex::Epsilon) => a,
            _ => Regex::concat(a, b),
        }
    }

    /// `∅* = ε* = ε`, `(x*)* = x*`.
    pub fn star_simplified(a: Regex) -> Regex {
        match a {
            Regex::Empty | Regex::Epsilon => Regex::Epsilon,
            Regex::Star(_) => a,
            _ => Regex::star(a),
        }
    }

    pub fn from_word(w: &Word) -> Regex {
        w.letters()
            .iter()
            .cloned()
            .map(Regex::Letter)
            .reduce(Regex::concat)
            .unwrap_or(Regex::Epsilon)
    }

    /// Union of the given words; `∅` when there are none.
    pub fn from_words<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> Regex {
        words
            .into_iter()
            .map(Regex::from_word)
            .reduce(Regex::union)
            .unwrap_or(Regex::Empty)
    }

    pub fn is_empty_language(&self) -> bool {
        match self {
            Regex::Empty => true,
            Regex::Epsilon | Regex::Letter(_) | Regex::Star(_) => false,
            Regex::Union(a, b) => a.is_empty_language() && b.is_empty_language(),
            Regex::Concat(a, b) => a.is_empty_language() || b.is_empty_language(),
        }
    }

    /// True when the language is contained in `{ε}`.
    pub fn is_trivial(&self) -> bool {
        match self {
            Regex::Empty | Regex::Epsilon => true,
            Regex::Letter(_) => false,
            Regex::Star(a) => a.is_trivial(),
            Regex::Union(a, b) => a.is_trivial() && b.is_trivial(),
            Regex::Concat(a, b) => {
                a.is_empty_language() || b.is_empty_language() || (a.is_trivial() && b.is_trivial())
            }
        }
    }

    pub fn nullable(&self) -> bool {
        match self {
            Regex::Empty | Regex::Letter(_) => false,
            Regex::Epsilon | Regex::Star(_) => true,
            Regex::Union(a, b) => a.nullable() || b.nullable(),
            Regex::Concat(a, b) => a.nullable() && b.nullable(),
        }
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        match self {
            Regex::Empty | Regex::Epsilon | Regex::Letter(_) => 1,
            Regex::Star(a) => 1 + a.size(),
            Regex::Union(a, b) | Regex::Concat(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn star_height(&self) -> usize {
        match self {
            Regex::Empty | Regex::Epsilon | Regex::Letter(_) => 0,
            Regex::Star(a) => 1 + a.star_height(),
            Regex::Union(a, b) | Regex::Concat(a, b) => a.star_height().max(b.star_height()),
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
        match self {
            Regex::Empty => f.write_str("#"),
            Regex::Epsilon => f.write_str("@"),
            Regex::Letter(d) => write!(f, "{d}"),
            Regex::Union(a, b) => {
                if prec > 0 {
                    f.write_str("(")?;
                }
                a.fmt_prec(f, 0)?;
                f.write_str("|")?;
                b.fmt_prec(f, 0)?;
                if prec > 0 {
                    f.write_str(")")?;
                }
                Ok(())
            }
            Regex::Concat(a, b) => {
                if prec > 1 {
                    f.write_str("(")?;
                }
                a.fmt_prec(f, 1)?;
                b.fmt_prec(f, 1)?;
                if prec > 1 {
                    f.write_str(")")?;
                }
                Ok(())
            }
            Regex::Star(a) => {
                a.fmt_prec(f, 2)?;
                f.write_str("*")
            }
        }
    }
}

impl fmt::Display for Regex {
    /// Prints in the input grammar; the output parses back to an equal AST
    /// up to associativity of `|` and concatenation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}
