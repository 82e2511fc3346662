//! Decomposition of a regex into a finite union of word–star chains
//! `prefix · body_n* · tail_n ··· body_1* · tail_1`.

use std::fmt;
use std::sync::Arc;

use crate::codec::{Basis, Word};
use crate::lang::Regex;
use crate::{Error, Result};

pub const DEFAULT_MAX_CHAINS: usize = 100_000;

/// One `body* · tail` step of a chain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub body: Arc<Regex>,
    pub tail: Word,
}

/// Segments are listed in reading order, i.e. `segments[0]` carries the
/// highest index `n` and the last segment carries index 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chain {
    pub prefix: Word,
    pub segments: Vec<Segment>,
}

impl Chain {
    pub fn word(w: Word) -> Chain {
        Chain {
            prefix: w,
            segments: Vec::new(),
        }
    }

    pub fn basis(&self) -> Basis {
        self.prefix.basis()
    }

    /// Language concatenation of two chains.
    pub fn then(&self, next: &Chain) -> Chain {
        let mut out = self.clone();
        let joint = match out.segments.last_mut() {
            Some(seg) => &mut seg.tail,
            None => &mut out.prefix,
        };
        *joint = joint.concat(&next.prefix);
        out.segments.extend(next.segments.iter().cloned());
        out
    }

    /// `prefix · tail_n ··· tail_1`: the chain's word with every star taken zero times.
    pub fn skeleton(&self) -> Word {
        self.segments
            .iter()
            .fold(self.prefix.clone(), |acc, s| acc.concat(&s.tail))
    }

    /// For each segment `i`, the word `tail_i ··· tail_1` that follows its star.
    pub fn suffixes(&self) -> Vec<Word> {
        let mut out = vec![Word::empty(self.basis()); self.segments.len()];
        let mut acc = Word::empty(self.basis());
        for (i, seg) in self.segments.iter().enumerate().rev() {
            acc = seg.tail.concat(&acc);
            out[i] = acc.clone();
        }
        out
    }

    /// Total number of letters in the chain's words.
    pub fn word_length(&self) -> usize {
        self.skeleton().len()
    }

    pub fn to_regex(&self) -> Regex {
        let mut e = Regex::from_word(&self.prefix);
        for seg in &self.segments {
            e = Regex::concat(e, Regex::Star(seg.body.clone()));
            e = Regex::concat(e, Regex::from_word(&seg.tail));
        }
        e
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.prefix)?;
        for seg in &self.segments {
            write!(f, " ({})* {}", seg.body, seg.tail)?;
        }
        Ok(())
    }
}

fn canonicalize(mut chains: Vec<Chain>) -> Vec<Chain> {
    let mut keyed: Vec<(String, Chain)> = chains.drain(..).map(|c| (c.to_string(), c)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.1 == b.1);
    keyed.into_iter().map(|(_, c)| c).collect()
}

struct Decomposer {
    basis: Basis,
    cap: usize,
}

impl Decomposer {
    fn blowup(&self) -> Error {
        Error::ChainBlowup { cap: self.cap }
    }

    fn chains(&self, e: &Regex) -> Result<Vec<Chain>> {
        let out = match e {
            Regex::Empty => Vec::new(),
            Regex::Epsilon => vec![Chain::word(Word::empty(self.basis))],
            Regex::Letter(d) => vec![Chain::word(Word::from_letters_unchecked(
                self.basis,
                vec![d.clone()],
            ))],
            Regex::Union(a, b) => {
                let mut left = self.chains(a)?;
                let right = self.chains(b)?;
                if left.len() + right.len() > self.cap {
                    return Err(self.blowup());
                }
                left.extend(right);
                canonicalize(left)
            }
            Regex::Concat(a, b) => {
                let left = self.chains(a)?;
                if left.is_empty() {
                    return Ok(Vec::new());
                }
                let right = self.chains(b)?;
                if left.len().saturating_mul(right.len()) > self.cap {
                    return Err(self.blowup());
                }
                let mut out = Vec::with_capacity(left.len() * right.len());
                for l in &left {
                    for r in &right {
                        out.push(l.then(r));
                    }
                }
                canonicalize(out)
            }
            Regex::Star(body) => {
                if body.is_trivial() {
                    vec![Chain::word(Word::empty(self.basis))]
                } else {
                    vec![Chain {
                        prefix: Word::empty(self.basis),
                        segments: vec![Segment {
                            body: body.clone(),
                            tail: Word::empty(self.basis),
                        }],
                    }]
                }
            }
        };
        if out.len() > self.cap {
            return Err(self.blowup());
        }
        Ok(out)
    }
}

/// Rewrites `e` as a finite union of chains whose languages union to `L(e)`.
///
/// Concatenation distributes over union, letters fold into words, `∅`
/// annihilates, and stars of languages within `{ε}` vanish. Star bodies are
/// kept as-is. Intermediate and final lists are bounded by `cap`.
pub fn to_chains(e: &Regex, basis: Basis, cap: usize) -> Result<Vec<Chain>> {
    Decomposer { basis, cap }.chains(e)
}
