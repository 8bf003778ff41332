//! Finite words over ω and over {0, 1}.
//!
//! Text form: ω-words are dot-separated naturals (`2.0.7`), bit-words are
//! plain bit strings (`0110`); the empty word of either kind is `e`.
//!
//! The derived `Ord` on both types is plain lexicographic order with
//! prefixes first. It exists so words can live in ordered collections;
//! the orders studied by the crate live in [`crate::orders`].

use std::fmt;
use std::str::FromStr;

use crate::ParseError;

pub const EMPTY_TOKEN: &str = "e";

/// A finite word over ω.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u64>);

impl Word {
    pub fn new(entries: Vec<u64>) -> Self {
        Word(entries)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_entry(&self) -> Option<u64> {
        self.0.iter().copied().max()
    }

    /// `self ⊆ other`: `self` is a (not necessarily proper) prefix of `other`.
    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    /// Restriction to the first `n` entries (`σ↾n`).
    pub fn truncate(&self, n: usize) -> Word {
        Word(self.0[..n.min(self.0.len())].to_vec())
    }

    /// All prefixes from the empty word up to `self`, shortest first.
    pub fn prefixes(&self) -> impl Iterator<Item = Word> + '_ {
        (0..=self.0.len()).map(move |n| self.truncate(n))
    }

    pub fn push(&mut self, entry: u64) {
        self.0.push(entry);
    }

    pub fn child(&self, entry: u64) -> Word {
        let mut w = self.clone();
        w.push(entry);
        w
    }
}

impl From<Vec<u64>> for Word {
    fn from(v: Vec<u64>) -> Self {
        Word(v)
    }
}

impl<const N: usize> From<[u64; N]> for Word {
    fn from(v: [u64; N]) -> Self {
        Word(v.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str(EMPTY_TOKEN);
        }
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == EMPTY_TOKEN {
            return Ok(Word::empty());
        }
        s.split('.')
            .map(|part| {
                part.parse::<u64>()
                    .map_err(|_| ParseError::new(s, "expected dot-separated naturals or `e`"))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

/// A finite word over {0, 1}. Entries are always 0 or 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitWord(Vec<u8>);

impl BitWord {
    pub fn empty() -> Self {
        BitWord(Vec::new())
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        BitWord(bits.into_iter().map(u8::from).collect())
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<u8> {
        self.0.last().copied()
    }

    pub fn is_prefix_of(&self, other: &BitWord) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn push(&mut self, bit: bool) {
        self.0.push(u8::from(bit));
    }

    pub fn extend_from(&mut self, other: &BitWord) {
        self.0.extend_from_slice(&other.0);
    }

    /// Successor in the lexicographic order on words of the same length,
    /// i.e. binary `+1`. `None` for the all-ones word (and for `e`).
    pub fn successor(&self) -> Option<BitWord> {
        let mut bits = self.0.clone();
        for i in (0..bits.len()).rev() {
            if bits[i] == 0 {
                bits[i] = 1;
                return Some(BitWord(bits));
            }
            bits[i] = 0;
        }
        None
    }

    /// All bit-words of length `n` in lexicographic order.
    pub fn all_of_length(n: usize) -> impl Iterator<Item = BitWord> {
        assert!(n < 64, "bit-word length {n} too large to enumerate");
        (0u64..(1u64 << n)).map(move |v| BitWord((0..n).rev().map(|i| ((v >> i) & 1) as u8).collect()))
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str(EMPTY_TOKEN);
        }
        for b in &self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for BitWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == EMPTY_TOKEN {
            return Ok(BitWord::empty());
        }
        if s.is_empty() {
            return Err(ParseError::new(s, "empty token; write the empty word as `e`"));
        }
        s.bytes()
            .map(|b| match b {
                b'0' => Ok(0),
                b'1' => Ok(1),
                _ => Err(ParseError::new(s, "bit-words contain only 0 and 1")),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BitWord)
    }
}
