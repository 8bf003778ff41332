//! Finite-scale machinery for chains in countable orders.
//!
//! The crate models sequences over a countable ordered set and asks whether
//! they contain a chain: a subsequence whose consecutive terms are related.
//! Around that question it provides
//!
//! * [`orders`]: comparison oracles for divisibility, equality, the integers,
//!   the rationals, prefix order on words, the reversed-digit lexicographic
//!   order on ω-words and the lexicographic order on bit-words;
//! * [`chains`]: longest-chain search (quadratic DP and patience sorting),
//!   witness checking, and exact membership for ultimately periodic input;
//! * [`trees`]: finite trees over ω and a monotone enumeration of ω-words;
//! * [`encodings`]: order embeddings of ω-words into bit-words and dyadic
//!   rationals;
//! * [`reductions`]: the tree-to-sequence map, pointwise lifting, random
//!   trees and a fuzz harness;
//! * [`dense`]: Cantor interval schemes, dense-subset extraction, splitting
//!   depth and a greedy embedding into a dense target.

pub mod chains;
pub mod dense;
pub mod encodings;
pub mod orders;
pub mod rational;
pub mod reductions;
pub mod trees;
pub mod word;

pub use orders::{Comparison, Element, OrderKind, OrderOracle, Strictness, Tag};
pub use rational::ExactRational;
pub use word::{BitWord, Word};

use thiserror::Error;

/// A token that could not be read as an element.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse `{token}`: {reason}")]
pub struct ParseError {
    pub token: String,
    pub reason: String,
}

impl ParseError {
    pub fn new(token: &str, reason: &str) -> Self {
        ParseError {
            token: token.to_string(),
            reason: reason.to_string(),
        }
    }
}
