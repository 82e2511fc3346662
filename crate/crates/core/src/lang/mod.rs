//! Regular languages over digit vectors: regexes, automata, chains, enumeration.

mod chain;
mod enumerate;
mod ndd;
mod parse;
mod regex;

pub use chain::{to_chains, Chain, Segment, DEFAULT_MAX_CHAINS};
pub use enumerate::{enumerate, enumerate_ndd, for_each_word, for_each_word_ndd};
pub use ndd::{ndd_to_regex, parse_ndd, Ndd, StateId};
pub use parse::{parse_regex, parse_word};
pub use regex::Regex;
