//! Finite trees over ω and the canonical enumeration of ω-words.
//!
//! The enumeration groups words into blocks by
//! `b = max(length, 1 + max entry)`; block 0 is just the empty word. Blocks
//! come in increasing order, and inside a block shorter words come first,
//! then lexicographic order of entries. A prefix never has a larger block
//! and is shorter, so `σ ⊆ τ ⇒ index_of(σ) ≤ index_of(τ)`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::chains::{longest_chain, Sequence};
use crate::orders::{Element, OrderKind, OrderOracle};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("node `{node}` is present but its prefix `{prefix}` is not")]
    MissingPrefix { node: Word, prefix: Word },
    #[error("the enumeration index of `{0}` does not fit in 64 bits")]
    IndexOverflow(Word),
}

/// Number of words of length `len` in block `block`.
fn count_in_block(block: u32, len: u32) -> Option<u128> {
    if block == 0 {
        return Some(u128::from(len == 0));
    }
    if len == 0 || len > block {
        return Some(0);
    }
    let all = u128::from(block).checked_pow(len)?;
    if len == block {
        Some(all)
    } else {
        Some(all - u128::from(block - 1).pow(len))
    }
}

fn block_size(block: u32) -> Option<u128> {
    if block == 0 {
        return Some(1);
    }
    (1..=block).try_fold(0u128, |acc, len| acc.checked_add(count_in_block(block, len)?))
}

/// Completions of `rest` free positions over `0..block`, where the word
/// must still contain `block - 1` unless `satisfied`.
fn completions(block: u32, rest: u32, satisfied: bool) -> u128 {
    let all = u128::from(block).pow(rest);
    if satisfied {
        all
    } else {
        all - u128::from(block - 1).pow(rest)
    }
}

/// Block of a word: `max(len, 1 + max entry)`.
pub fn block_of(w: &Word) -> u64 {
    let by_entries = w.max_entry().map_or(0, |m| m.saturating_add(1));
    by_entries.max(w.len() as u64)
}

/// The `n`-th word of the canonical enumeration.
pub fn word_at(n: u64) -> Word {
    let mut rem = u128::from(n);
    let mut block = 0u32;
    loop {
        let size = block_size(block).expect("a u64 index lies in a block with a u128 size");
        if rem < size {
            break;
        }
        rem -= size;
        block += 1;
    }
    if block == 0 {
        return Word::empty();
    }
    let mut len = 1u32;
    loop {
        let c = count_in_block(block, len).expect("bounded by block size");
        if rem < c {
            break;
        }
        rem -= c;
        len += 1;
    }
    let constrained = len < block;
    let mut satisfied = !constrained;
    let mut entries = Vec::with_capacity(len as usize);
    for pos in 0..len {
        let rest = len - pos - 1;
        for d in 0..block {
            let now = satisfied || d == block - 1;
            let c = completions(block, rest, now);
            if rem < c {
                entries.push(u64::from(d));
                satisfied = now;
                break;
            }
            rem -= c;
        }
    }
    Word::new(entries)
}

/// Position of `w` in the canonical enumeration.
pub fn index_of(w: &Word) -> Result<u64, TreeError> {
    let overflow = || TreeError::IndexOverflow(w.clone());
    let block = u32::try_from(block_of(w)).map_err(|_| overflow())?;
    let mut index: u128 = 0;
    for b in 0..block {
        index = index.checked_add(block_size(b).ok_or_else(overflow)?).ok_or_else(overflow)?;
    }
    if block > 0 {
        let len = w.len() as u32;
        for l in 1..len {
            index = index
                .checked_add(count_in_block(block, l).ok_or_else(overflow)?)
                .ok_or_else(overflow)?;
        }
        // The block bounds every entry, and index_of on the block start
        // already fits, so the rank below cannot overflow u128.
        let mut satisfied = len == block;
        for (pos, &x) in w.entries().iter().enumerate() {
            let rest = len - pos as u32 - 1;
            let digit = x as u32;
            for d in 0..digit {
                index = index
                    .checked_add(completions(block, rest, satisfied || d == block - 1))
                    .ok_or_else(overflow)?;
            }
            satisfied |= digit == block - 1;
        }
    }
    u64::try_from(index).map_err(|_| overflow())
}

/// Words in enumeration order, starting from index 0.
pub fn enumeration() -> impl Iterator<Item = Word> {
    (0u64..).map(word_at)
}

/// The word `1^n 0`.
pub fn filler(n: usize) -> Word {
    let mut entries = vec![1; n];
    entries.push(0);
    Word::new(entries)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeMode {
    /// Reject node sets that are not prefix-closed.
    Strict,
    /// Replace the node set by its prefix closure.
    Closure,
}

/// A finite prefix-closed set of ω-words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FiniteTree {
    nodes: BTreeSet<Word>,
}

impl FiniteTree {
    /// The tree `{ε}`.
    pub fn root() -> Self {
        FiniteTree {
            nodes: BTreeSet::from([Word::empty()]),
        }
    }

    /// Prefix closure of a single word.
    pub fn branch(w: &Word) -> Self {
        FiniteTree {
            nodes: w.prefixes().collect(),
        }
    }

    /// Strict mode reports the longest missing prefix of the first offending node.
    pub fn validate<I: IntoIterator<Item = Word>>(nodes: I, mode: TreeMode) -> Result<Self, TreeError> {
        let nodes: BTreeSet<Word> = nodes.into_iter().collect();
        match mode {
            TreeMode::Closure => Ok(FiniteTree {
                nodes: nodes.iter().flat_map(|w| w.prefixes()).collect(),
            }),
            TreeMode::Strict => {
                for node in &nodes {
                    if let Some(prefix) = node.prefixes().filter(|p| !nodes.contains(p)).last() {
                        return Err(TreeError::MissingPrefix {
                            node: node.clone(),
                            prefix,
                        });
                    }
                }
                Ok(FiniteTree { nodes })
            }
        }
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.nodes.contains(w)
    }

    pub fn nodes(&self) -> impl Iterator<Item = &Word> {
        self.nodes.iter()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Adds `w` together with its missing prefixes.
    pub fn insert_branch(&mut self, w: &Word) {
        self.nodes.extend(w.prefixes());
    }

    /// Length of the longest node; the empty tree counts as depth 0.
    pub fn max_branch_depth(&self) -> usize {
        self.nodes.iter().map(Word::len).max().unwrap_or(0)
    }

    pub fn is_subtree_of(&self, other: &FiniteTree) -> bool {
        self.nodes.is_subset(&other.nodes)
    }

    /// Nodes sorted by enumeration index.
    pub fn nodes_in_enumeration_order(&self) -> Result<Vec<(u64, Word)>, TreeError> {
        let mut v = self
            .nodes
            .iter()
            .map(|w| index_of(w).map(|i| (i, w.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        v.sort();
        Ok(v)
    }

    /// Longest strict ⊆-chain among the nodes with enumeration index below
    /// `horizon`.
    pub fn longest_chain_below(&self, horizon: u64) -> Result<usize, TreeError> {
        let items: Vec<Element> = self
            .nodes_in_enumeration_order()?
            .into_iter()
            .take_while(|(i, _)| *i < horizon)
            .map(|(_, w)| Element::WordNat(w))
            .collect();
        if items.is_empty() {
            return Ok(0);
        }
        let seq = Sequence::new(items).expect("uniform tag");
        let (len, _) = longest_chain(&seq, &OrderOracle::strict(OrderKind::SubsetWordNat))
            .expect("ω-words under the prefix order");
        Ok(len)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn first_words() {
        let first: Vec<String> = (0..8).map(|n| word_at(n).to_string()).collect();
        assert_eq!(first, ["e", "0", "1", "0.0", "0.1", "1.0", "1.1", "2"]);
        assert_eq!(block_size(1), Some(1));
        assert_eq!(block_size(2), Some(5));
        assert_eq!(block_size(3), Some(33));
    }

    #[test]
    fn round_trip_first_ten_thousand() {
        for n in 0..10_000u64 {
            assert_eq!(index_of(&word_at(n)).unwrap(), n);
        }
    }

    #[test]
    fn matches_brute_force_sort() {
        // All words with block ≤ 4, sorted by (block, length, entries).
        let mut all = vec![Word::empty()];
        let mut frontier = vec![Word::empty()];
        for _ in 0..4 {
            let mut next = Vec::new();
            for p in &frontier {
                for x in 0..4 {
                    next.push(p.child(x));
                }
            }
            all.extend(next.iter().cloned());
            frontier = next;
        }
        all.sort_by_key(|w| (block_of(w), w.len(), w.entries().to_vec()));
        for (n, word) in all.iter().enumerate() {
            assert_eq!(&word_at(n as u64), word, "index {n}");
        }
    }

    #[test]
    fn index_overflow() {
        assert!(matches!(index_of(&w("100")), Err(TreeError::IndexOverflow(_))));
        assert!(index_of(&filler(10)).is_ok());
    }

    #[test]
    fn fillers() {
        assert_eq!(filler(0), w("0"));
        assert_eq!(filler(2), w("1.1.0"));
        let rl = OrderOracle::strict(OrderKind::ReversedLex);
        let sub = OrderOracle::strict(OrderKind::SubsetWordNat);
        for a in 0..12 {
            for b in (a + 1)..12 {
                let (fa, fb) = (Element::WordNat(filler(a)), Element::WordNat(filler(b)));
                assert_eq!(sub.compare(&fa, &fb).unwrap(), crate::Comparison::Incomparable);
                assert_eq!(rl.compare(&fa, &fb).unwrap(), crate::Comparison::Greater);
            }
        }
    }

    #[test]
    fn validate_modes() {
        let t = FiniteTree::validate([w("e"), w("1"), w("1.0")], TreeMode::Strict).unwrap();
        assert_eq!(t.len(), 3);
        let err = FiniteTree::validate([w("1.0")], TreeMode::Strict).unwrap_err();
        assert_eq!(
            err,
            TreeError::MissingPrefix {
                node: w("1.0"),
                prefix: w("1")
            }
        );
        let err = FiniteTree::validate([w("e"), w("1.0")], TreeMode::Strict).unwrap_err();
        assert!(matches!(err, TreeError::MissingPrefix { prefix, .. } if prefix == w("1")));
        let closed = FiniteTree::validate([w("1.0")], TreeMode::Closure).unwrap();
        let nodes: Vec<String> = closed.nodes().map(|n| n.to_string()).collect();
        assert_eq!(nodes, ["e", "1", "1.0"]);
    }

    #[test]
    fn depths() {
        assert_eq!(FiniteTree::root().max_branch_depth(), 0);
        assert_eq!(FiniteTree::branch(&w("3.1.4")).max_branch_depth(), 3);
        let t = FiniteTree::branch(&w("1.1.0"));
        assert_eq!(t.longest_chain_below(u64::MAX).unwrap(), 4);
        assert_eq!(t.longest_chain_below(1).unwrap(), 1);
    }
}
