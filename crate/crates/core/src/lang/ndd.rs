//! Number decision diagrams: finite automata over digit vectors.
//!
//! Text format, one directive per line, `#` starts a comment:
//!
//! ```text
//! ndd <r> <m>
//! state <id> [initial] [final]
//! trans <from> <to> <d1,...,dm>
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::codec::{Basis, DigitVector};
use crate::lang::Regex;
use crate::{Error, Result};

pub type StateId = u64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ndd {
    basis: Basis,
    states: BTreeSet<StateId>,
    initial: BTreeSet<StateId>,
    finals: BTreeSet<StateId>,
    transitions: BTreeSet<(StateId, DigitVector, StateId)>,
}

impl Ndd {
    pub fn new(basis: Basis) -> Self {
        Ndd {
            basis,
            states: BTreeSet::new(),
            initial: BTreeSet::new(),
            finals: BTreeSet::new(),
            transitions: BTreeSet::new(),
        }
    }

    pub fn add_state(&mut self, id: StateId, initial: bool, is_final: bool) {
        self.states.insert(id);
        if initial {
            self.initial.insert(id);
        }
        if is_final {
            self.finals.insert(id);
        }
    }

    pub fn add_transition(&mut self, from: StateId, label: DigitVector, to: StateId) -> Result<()> {
        for s in [from, to] {
            if !self.states.contains(&s) {
                return Err(Error::UnknownState { line: 0, state: s });
            }
        }
        DigitVector::new(self.basis, label.digits().to_vec())?;
        self.transitions.insert((from, label, to));
        Ok(())
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn states(&self) -> &BTreeSet<StateId> {
        &self.states
    }

    pub fn initial(&self) -> &BTreeSet<StateId> {
        &self.initial
    }

    pub fn finals(&self) -> &BTreeSet<StateId> {
        &self.finals
    }

    pub fn transitions(&self) -> impl Iterator<Item = (&StateId, &DigitVector, &StateId)> {
        self.transitions.iter().map(|(f, d, t)| (f, d, t))
    }

    pub fn transition_count(&self) -> usize {
        self.transitions.len()
    }
}

impl fmt::Display for Ndd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ndd {} {}", self.basis.radix(), self.basis.dim())?;
        for s in &self.states {
            write!(f, "state {s}")?;
            if self.initial.contains(s) {
                write!(f, " initial")?;
            }
            if self.finals.contains(s) {
                write!(f, " final")?;
            }
            writeln!(f)?;
        }
        for (from, d, to) in &self.transitions {
            writeln!(f, "trans {from} {to} {d}")?;
        }
        Ok(())
    }
}

fn format_err(line: usize, message: impl Into<String>) -> Error {
    Error::Format {
        line,
        message: message.into(),
    }
}

fn parse_number<T: std::str::FromStr>(token: &str, line: usize, what: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| format_err(line, format!("invalid {what} '{token}'")))
}

pub fn parse_ndd(text: &str) -> Result<Ndd> {
    let mut ndd: Option<Ndd> = None;
    let mut pending = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let keyword = tokens.next().expect("nonempty line");
        let Some(a) = ndd.as_mut() else {
            if keyword != "ndd" {
                return Err(format_err(line_no, "expected header 'ndd <r> <m>'"));
            }
            let r = tokens.next().ok_or_else(|| format_err(line_no, "missing radix"))?;
            let m = tokens.next().ok_or_else(|| format_err(line_no, "missing dimension"))?;
            if tokens.next().is_some() {
                return Err(format_err(line_no, "trailing tokens after header"));
            }
            let basis = Basis::new(
                parse_number(r, line_no, "radix")?,
                parse_number(m, line_no, "dimension")?,
            )
            .map_err(|e| format_err(line_no, e.to_string()))?;
            ndd = Some(Ndd::new(basis));
            continue;
        };
        match keyword {
            "state" => {
                let id = tokens.next().ok_or_else(|| format_err(line_no, "missing state id"))?;
                let id: StateId = parse_number(id, line_no, "state id")?;
                let (mut initial, mut is_final) = (false, false);
                for flag in tokens {
                    match flag {
                        "initial" => initial = true,
                        "final" => is_final = true,
                        other => return Err(format_err(line_no, format!("unknown flag '{other}'"))),
                    }
                }
                a.add_state(id, initial, is_final);
            }
            "trans" => {
                let from = tokens.next().ok_or_else(|| format_err(line_no, "missing source"))?;
                let to = tokens.next().ok_or_else(|| format_err(line_no, "missing target"))?;
                let from: StateId = parse_number(from, line_no, "state id")?;
                let to: StateId = parse_number(to, line_no, "state id")?;
                let label: String = tokens.collect::<Vec<_>>().join("");
                let label = label.trim_start_matches('<').trim_end_matches('>');
                if label.is_empty() {
                    return Err(format_err(line_no, "missing digit vector"));
                }
                let digits = label
                    .split(',')
                    .map(|d| parse_number::<u32>(d.trim(), line_no, "digit"))
                    .collect::<Result<Vec<_>>>()?;
                let dv = DigitVector::new(a.basis, digits)
                    .map_err(|e| format_err(line_no, e.to_string()))?;
                pending.push((line_no, from, dv, to));
            }
            other => return Err(format_err(line_no, format!("unknown directive '{other}'"))),
        }
    }

    let mut a = ndd.ok_or_else(|| format_err(1, "missing header 'ndd <r> <m>'"))?;
    for (line, from, dv, to) in pending {
        for s in [from, to] {
            if !a.states.contains(&s) {
                return Err(Error::UnknownState { line, state: s });
            }
        }
        a.transitions.insert((from, dv, to));
    }
    Ok(a)
}

/// Converts an automaton to an equivalent regex by state elimination.
///
/// States are removed in ascending order of `in-degree × out-degree`
/// (self-loops excluded), ties broken by id.
pub fn ndd_to_regex(a: &Ndd) -> Regex {
    #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
    enum Node {
        Start,
        State(StateId),
        End,
    }

    let mut edges: BTreeMap<(Node, Node), Regex> = BTreeMap::new();
    let add = |edges: &mut BTreeMap<(Node, Node), Regex>, from: Node, to: Node, e: Regex| {
        let slot = edges.entry((from, to)).or_insert(Regex::Empty);
        *slot = Regex::union_simplified(std::mem::replace(slot, Regex::Empty), e);
    };
    for &s in &a.initial {
        add(&mut edges, Node::Start, Node::State(s), Regex::Epsilon);
    }
    for &s in &a.finals {
        add(&mut edges, Node::State(s), Node::End, Regex::Epsilon);
    }
    for (from, d, to) in &a.transitions {
        add(
            &mut edges,
            Node::State(*from),
            Node::State(*to),
            Regex::Letter(d.clone()),
        );
    }

    let mut remaining: BTreeSet<StateId> = a.states.clone();
    while !remaining.is_empty() {
        let cost = |k: StateId| {
            let node = Node::State(k);
            let indeg = edges.keys().filter(|(f, t)| *t == node && *f != node).count();
            let outdeg = edges.keys().filter(|(f, t)| *f == node && *t != node).count();
            indeg * outdeg
        };
        let k = *remaining
            .iter()
            .min_by_key(|&&k| (cost(k), k))
            .expect("nonempty");
        remaining.remove(&k);
        let node = Node::State(k);

        let looped = edges
            .remove(&(node, node))
            .map(Regex::star_simplified)
            .unwrap_or(Regex::Epsilon);
        let incoming: Vec<(Node, Regex)> = edges
            .iter()
            .filter(|((_, t), _)| *t == node)
            .map(|((f, _), e)| (*f, e.clone()))
            .collect();
        let outgoing: Vec<(Node, Regex)> = edges
            .iter()
            .filter(|((f, _), _)| *f == node)
            .map(|((_, t), e)| (*t, e.clone()))
            .collect();
        edges.retain(|(f, t), _| *f != node && *t != node);
        for (p, into) in &incoming {
            for (q, out) in &outgoing {
                let path = Regex::concat_simplified(
                    Regex::concat_simplified(into.clone(), looped.clone()),
                    out.clone(),
                );
                add(&mut edges, *p, *q, path);
            }
        }
    }
    edges
        .remove(&(Node::Start, Node::End))
        .unwrap_or(Regex::Empty)
}
