//! Bounded enumeration of accepted words.
//!
//! Regexes are compiled to a Thompson NFA; automata are used directly. Both
//! are explored depth-first over lazily determinized state sets, so every
//! word is produced exactly once.

use std::collections::{BTreeSet, HashMap};

use crate::codec::{Basis, DigitVector, Word};
use crate::lang::{Ndd, Regex};

/// NFA with ε-moves. Letters are stored as alphabet indices.
pub(crate) struct Nfa {
    basis: Basis,
    eps: Vec<Vec<usize>>,
    moves: Vec<Vec<(usize, usize)>>,
    initial: Vec<usize>,
    accepting: Vec<bool>,
}

fn letter_index(basis: Basis, d: &DigitVector) -> usize {
    d.digits()
        .iter()
        .fold(0usize, |acc, &x| acc * basis.radix() as usize + x as usize)
}

impl Nfa {
    fn with_states(basis: Basis, n: usize) -> Self {
        Nfa {
            basis,
            eps: vec![Vec::new(); n],
            moves: vec![Vec::new(); n],
            initial: Vec::new(),
            accepting: vec![false; n],
        }
    }

    fn add_state(&mut self) -> usize {
        self.eps.push(Vec::new());
        self.moves.push(Vec::new());
        self.accepting.push(false);
        self.eps.len() - 1
    }

    pub(crate) fn from_regex(e: &Regex, basis: Basis) -> Self {
        let mut nfa = Nfa::with_states(basis, 0);
        let start = nfa.add_state();
        let end = nfa.add_state();
        nfa.build(e, start, end);
        nfa.initial.push(start);
        nfa.accepting[end] = true;
        nfa
    }

    // Thompson construction between fixed entry/exit states.
    fn build(&mut self, e: &Regex, from: usize, to: usize) {
        match e {
            Regex::Empty => {}
            Regex::Epsilon => self.eps[from].push(to),
            Regex::Letter(d) => {
                let idx = letter_index(self.basis, d);
                self.moves[from].push((idx, to));
            }
            Regex::Union(a, b) => {
                self.build(a, from, to);
                self.build(b, from, to);
            }
            Regex::Concat(a, b) => {
                let mid = self.add_state();
                self.build(a, from, mid);
                self.build(b, mid, to);
            }
            Regex::Star(a) => {
                let hub = self.add_state();
                self.eps[from].push(hub);
                self.eps[hub].push(to);
                let back = self.add_state();
                self.build(a, hub, back);
                self.eps[back].push(hub);
            }
        }
    }

    pub(crate) fn from_ndd(a: &Ndd) -> Self {
        let ids: Vec<u64> = a.states().iter().copied().collect();
        let index: HashMap<u64, usize> = ids.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let mut nfa = Nfa::with_states(a.basis(), ids.len());
        for (from, d, to) in a.transitions() {
            nfa.moves[index[from]].push((letter_index(a.basis(), d), index[to]));
        }
        nfa.initial = a.initial().iter().map(|s| index[s]).collect();
        for s in a.finals() {
            nfa.accepting[index[s]] = true;
        }
        nfa
    }

    fn closure(&self, seeds: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut seen = vec![false; self.eps.len()];
        let mut stack: Vec<usize> = Vec::new();
        for s in seeds {
            if !seen[s] {
                seen[s] = true;
                stack.push(s);
            }
        }
        while let Some(s) = stack.pop() {
            for &t in &self.eps[s] {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        (0..seen.len()).filter(|&i| seen[i]).collect()
    }

    fn step(&self, set: &[usize], letter: usize) -> Vec<usize> {
        let targets: Vec<usize> = set
            .iter()
            .flat_map(|&s| self.moves[s].iter())
            .filter(|(l, _)| *l == letter)
            .map(|&(_, t)| t)
            .collect();
        self.closure(targets)
    }

    /// Calls `visit` once per accepted word of length `<= max_len`.
    pub(crate) fn for_each_word(&self, max_len: usize, visit: &mut dyn FnMut(&[DigitVector])) {
        let alphabet = self.basis.alphabet();
        let mut dfa = LazyDfa {
            nfa: self,
            ids: HashMap::new(),
            sets: Vec::new(),
            next: HashMap::new(),
        };
        let start = self.closure(self.initial.iter().copied());
        if start.is_empty() {
            return;
        }
        let start = dfa.intern(start);
        let mut prefix = Vec::with_capacity(max_len);
        dfa.walk(start, &alphabet, max_len, &mut prefix, visit);
    }
}

struct LazyDfa<'a> {
    nfa: &'a Nfa,
    ids: HashMap<Vec<usize>, usize>,
    sets: Vec<(Vec<usize>, bool)>,
    next: HashMap<(usize, usize), Option<usize>>,
}

impl LazyDfa<'_> {
    fn intern(&mut self, set: Vec<usize>) -> usize {
        if let Some(&id) = self.ids.get(&set) {
            return id;
        }
        let accepting = set.iter().any(|&s| self.nfa.accepting[s]);
        let id = self.sets.len();
        self.sets.push((set.clone(), accepting));
        self.ids.insert(set, id);
        id
    }

    fn successor(&mut self, state: usize, letter: usize) -> Option<usize> {
        if let Some(&n) = self.next.get(&(state, letter)) {
            return n;
        }
        let set = self.nfa.step(&self.sets[state].0, letter);
        let n = if set.is_empty() {
            None
        } else {
            Some(self.intern(set))
        };
        self.next.insert((state, letter), n);
        n
    }

    fn walk(
        &mut self,
        state: usize,
        alphabet: &[DigitVector],
        remaining: usize,
        prefix: &mut Vec<DigitVector>,
        visit: &mut dyn FnMut(&[DigitVector]),
    ) {
        if self.sets[state].1 {
            visit(prefix);
        }
        if remaining == 0 {
            return;
        }
        for (idx, letter) in alphabet.iter().enumerate() {
            if let Some(n) = self.successor(state, idx) {
                prefix.push(letter.clone());
                self.walk(n, alphabet, remaining - 1, prefix, visit);
                prefix.pop();
            }
        }
    }
}

/// Accepted words of length `<= max_len`.
pub fn enumerate(e: &Regex, basis: Basis, max_len: usize) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for_each_word(e, basis, max_len, |w| {
        out.insert(Word::from_letters_unchecked(basis, w.to_vec()));
    });
    out
}

pub fn enumerate_ndd(a: &Ndd, max_len: usize) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for_each_word_ndd(a, max_len, |w| {
        out.insert(Word::from_letters_unchecked(a.basis(), w.to_vec()));
    });
    out
}

/// Streaming form of [`enumerate`], for bounds where collecting would be wasteful.
pub fn for_each_word(e: &Regex, basis: Basis, max_len: usize, mut visit: impl FnMut(&[DigitVector])) {
    Nfa::from_regex(e, basis).for_each_word(max_len, &mut visit);
}

pub fn for_each_word_ndd(a: &Ndd, max_len: usize, mut visit: impl FnMut(&[DigitVector])) {
    Nfa::from_ndd(a).for_each_word(max_len, &mut visit);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::parse_regex;

    fn words(basis: Basis, ws: &[&[u32]]) -> BTreeSet<Word> {
        ws.iter()
            .map(|w| Word::from_digits(basis, w.iter().map(|&d| [d])).unwrap())
            .collect()
    }

    #[test]
    fn empty_language() {
        let b = Basis::new(2, 1).unwrap();
        assert!(enumerate(&Regex::Empty, b, 5).is_empty());
        assert!(enumerate(&parse_regex("<1>#", b).unwrap(), b, 5).is_empty());
    }

    #[test]
    fn star_of_letter() {
        let b = Basis::new(2, 1).unwrap();
        let got = enumerate(&parse_regex("<1>*", b).unwrap(), b, 3);
        assert_eq!(got, words(b, &[&[], &[1], &[1, 1], &[1, 1, 1]]));
    }

    #[test]
    fn nested_star_and_union() {
        let b = Basis::new(2, 1).unwrap();
        let got = enumerate(&parse_regex("(<0>|<1><1>)*<1>", b).unwrap(), b, 3);
        assert_eq!(
            got,
            words(b, &[&[1], &[0, 1], &[0, 0, 1], &[1, 1, 1]])
        );
        // nested stars with ε bodies must not loop
        let got = enumerate(&parse_regex("(@*|<0>*)*", b).unwrap(), b, 2);
        assert_eq!(got, words(b, &[&[], &[0], &[0, 0]]));
    }

    #[test]
    fn full_alphabet_count() {
        let b = Basis::new(2, 2).unwrap();
        let e = parse_regex("(<0,0>|<0,1>|<1,0>|<1,1>)*", b).unwrap();
        assert_eq!(enumerate(&e, b, 4).len(), 1 + 4 + 16 + 64 + 256);
    }
}
