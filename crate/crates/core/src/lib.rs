//! Exact closed convex hulls of regular sets of integer vectors.
//!
//! A set `X ⊆ N^m` is given as a regular language over digit vectors
//! `{0..r-1}^m`, read least-significant digit first. The pipeline turns a
//! regular expression (or an automaton, via state elimination) into a finite
//! set of integer rays whose cone, sliced at the last coordinate `1`, is the
//! closure of the convex hull of `X`.
//!
//! * [`codec`]: digit vectors, words, `rho`, and the affine maps attached to words.
//! * [`lang`]: regular expressions, NDD automata, chain decomposition, enumeration.
//! * [`hull`]: ray sets and the recursive hull computation.
//! * [`poly`]: exact double description, H-representations, membership, equality.
//! * [`oracle`]: brute-force reference checks built on enumeration.
//! * [`cli`]: command-line front end.

pub mod cli;
pub mod codec;
mod error;
pub mod hull;
pub mod lang;
pub mod oracle;
pub mod poly;

pub use codec::{Basis, DigitVector, GammaParams, Word};
pub use error::{Error, Result};
pub use hull::{Ray, RaySet};
pub use lang::{Chain, Ndd, Regex};
pub use poly::{Constraint, Polyhedron, Relation};
