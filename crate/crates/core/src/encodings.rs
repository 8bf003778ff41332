//! Order embeddings of ω-words into bit-words and dyadic rationals, and
//! the between-element construction for bit-words ending in 1.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use thiserror::Error;

use crate::orders::{Element, Tag};
use crate::rational::ExactRational;
use crate::word::{BitWord, Word};
use crate::ParseError;

/// Largest binary exponent `phi_rational` will materialise.
pub const MAX_DYADIC_EXPONENT: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EncodeError {
    #[error("`{0}` does not end in 1")]
    NotEndingInOne(BitWord),
    #[error("`{0}` is not lexicographically below `{1}`")]
    NotLexLess(BitWord, BitWord),
    #[error("encoding `{0}` needs 2^-{1}, above the exponent limit {MAX_DYADIC_EXPONENT}")]
    ExponentTooLarge(Word, u128),
    #[error("{map} maps {expected} elements, got a {found} element")]
    TagMismatch {
        map: &'static str,
        expected: Tag,
        found: Tag,
    },
}

/// The binary representation of `n`, most significant bit first, with
/// each bit written twice. `0` is represented as `0`, giving `00`.
pub fn double_bits(n: u64) -> BitWord {
    let width = (u64::BITS - n.leading_zeros()).max(1);
    BitWord::from_bits((0..width).rev().flat_map(|i| {
        let bit = (n >> i) & 1 == 1;
        [bit, bit]
    }))
}

/// `f(b_0) 01 f(b_1) 01 … f(b_n) 01` with `f = double_bits`.
///
/// Doubled digits never contain `01` at an even offset, so the separators
/// can be read back and the map reflects the prefix order both ways.
pub fn phi_binary(w: &Word) -> BitWord {
    let mut out = BitWord::empty();
    for &b in w.entries() {
        out.extend_from(&double_bits(b));
        out.push(false);
        out.push(true);
    }
    out
}

/// The dyadic rational `0.0^{a_0} 1 0^{a_1} 1 … 0^{a_n} 1` in binary;
/// the empty word maps to 0.
pub fn phi_rational(w: &Word) -> Result<ExactRational, EncodeError> {
    let mut positions = Vec::with_capacity(w.len());
    let mut pos: u128 = 0;
    for &a in w.entries() {
        pos += u128::from(a) + 1;
        if pos > u128::from(MAX_DYADIC_EXPONENT) {
            return Err(EncodeError::ExponentTooLarge(w.clone(), pos));
        }
        positions.push(pos as u64);
    }
    let Some(&total) = positions.last() else {
        return Ok(ExactRational::zero());
    };
    let mut numer = BigUint::default();
    for p in positions {
        numer.set_bit(total - p, true);
    }
    let denom = BigUint::from(1u8) << total;
    Ok(ExactRational::new(BigInt::from(numer), BigInt::from(denom)))
}

/// An element of `{x ⌢ 1}` strictly between `a <_lex b`, both ending in 1.
///
/// If `a` is a proper prefix of `b`, pad `a` with `|b| - |a|` zeros and a
/// final 1: the padding falls below `b` at `b`'s first 1 after `a`.
/// Otherwise `a` and `b` split at a position where `a` has 0, and `a ⌢ 1`
/// still splits there.
pub fn lex_between(a: &BitWord, b: &BitWord) -> Result<BitWord, EncodeError> {
    for w in [a, b] {
        if w.last() != Some(1) {
            return Err(EncodeError::NotEndingInOne(w.clone()));
        }
    }
    if a.bits() >= b.bits() {
        return Err(EncodeError::NotLexLess(a.clone(), b.clone()));
    }
    let mut out = a.clone();
    if a.is_prefix_of(b) {
        for _ in 0..(b.len() - a.len()) {
            out.push(false);
        }
    }
    out.push(true);
    Ok(out)
}

/// A pointwise map between element domains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Encoder {
    /// naturals to bit-words, [`double_bits`]
    DoubleBits,
    /// ω-words to bit-words, [`phi_binary`]
    PhiBinary,
    /// ω-words to dyadic rationals, [`phi_rational`]
    PhiRational,
}

impl Encoder {
    pub fn name(self) -> &'static str {
        match self {
            Encoder::DoubleBits => "double",
            Encoder::PhiBinary => "binary",
            Encoder::PhiRational => "rational",
        }
    }

    pub fn domain(self) -> Tag {
        match self {
            Encoder::DoubleBits => Tag::Nat,
            Encoder::PhiBinary | Encoder::PhiRational => Tag::WordNat,
        }
    }

    pub fn codomain(self) -> Tag {
        match self {
            Encoder::DoubleBits | Encoder::PhiBinary => Tag::WordBit,
            Encoder::PhiRational => Tag::Rational,
        }
    }

    pub fn apply(self, e: &Element) -> Result<Element, EncodeError> {
        match (self, e) {
            (Encoder::DoubleBits, Element::Nat(n)) => Ok(Element::WordBit(double_bits(*n))),
            (Encoder::PhiBinary, Element::WordNat(w)) => Ok(Element::WordBit(phi_binary(w))),
            (Encoder::PhiRational, Element::WordNat(w)) => Ok(Element::Rational(phi_rational(w)?)),
            _ => Err(EncodeError::TagMismatch {
                map: self.name(),
                expected: self.domain(),
                found: e.tag(),
            }),
        }
    }
}

impl fmt::Display for Encoder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Encoder {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "double" => Ok(Encoder::DoubleBits),
            "binary" => Ok(Encoder::PhiBinary),
            "rational" => Ok(Encoder::PhiRational),
            _ => Err(ParseError::new(s, "expected one of double, binary, rational")),
        }
    }
}
