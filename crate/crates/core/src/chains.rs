//! Chain subsequences of finite and ultimately periodic sequences.
//!
//! A chain of `y` under a relation `R` is a subsequence
//! `y(k_0), y(k_1), …` with `k_0 < k_1 < …` and `y(k_i) R y(k_{i+1})` for
//! every consecutive pair. Only consecutive pairs are constrained; for a
//! non-transitive `R` that is weaker than pairwise relatedness.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use thiserror::Error;

use crate::orders::{Element, OrderError, OrderOracle, Strictness, Tag};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("sequence is empty")]
    Empty,
    #[error("item {index} is a {found} element but the sequence holds {expected} elements")]
    MixedTags { index: usize, expected: Tag, found: Tag },
    #[error("index {index} is out of range for a sequence of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("patience sorting needs a linear order, {0} is not one")]
    NotLinear(String),
    #[error("the periodic part of an ultimately periodic sequence must be non-empty")]
    EmptyCycle,
    #[error(transparent)]
    Order(#[from] OrderError),
}

/// A finite sequence whose items share one domain tag.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Sequence {
    items: Vec<Element>,
}

impl Sequence {
    pub fn new(items: Vec<Element>) -> Result<Self, ChainError> {
        if let Some(first) = items.first() {
            let expected = first.tag();
            if let Some((index, e)) = items.iter().enumerate().find(|(_, e)| e.tag() != expected) {
                return Err(ChainError::MixedTags {
                    index,
                    expected,
                    found: e.tag(),
                });
            }
        }
        Ok(Sequence { items })
    }

    pub fn items(&self) -> &[Element] {
        &self.items
    }

    pub fn into_items(self) -> Vec<Element> {
        self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Tag shared by the items; `None` for the empty sequence.
    pub fn tag(&self) -> Option<Tag> {
        self.items.first().map(Element::tag)
    }

    /// Appends `e`, keeping the uniform-tag invariant.
    pub fn push(&mut self, e: Element) -> Result<(), ChainError> {
        if let Some(expected) = self.tag() {
            if e.tag() != expected {
                return Err(ChainError::MixedTags {
                    index: self.items.len(),
                    expected,
                    found: e.tag(),
                });
            }
        }
        self.items.push(e);
        Ok(())
    }

    fn check_against(&self, o: &OrderOracle) -> Result<(), ChainError> {
        for e in &self.items {
            o.check_domain(e)?;
        }
        Ok(())
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.items.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Indices `k_0 < k_1 < …` of a chain together with the values there.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChainWitness {
    pub indices: Vec<usize>,
    pub values: Vec<Element>,
}

impl ChainWitness {
    fn from_indices(y: &Sequence, indices: Vec<usize>) -> Self {
        let values = indices.iter().map(|&i| y.items[i].clone()).collect();
        ChainWitness { indices, values }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

impl fmt::Display for ChainWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (i, v)) in self.indices.iter().zip(&self.values).enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{i}:{v}")?;
        }
        Ok(())
    }
}

/// Longest chain by quadratic dynamic programming; works for any relation.
///
/// Among chains of maximum length the lexicographically least index vector
/// is returned. `best[i]` is the longest chain starting at `i`; walking
/// forward and always taking the smallest admissible next index yields the
/// least vector.
pub fn longest_chain(y: &Sequence, o: &OrderOracle) -> Result<(usize, ChainWitness), ChainError> {
    if y.is_empty() {
        return Err(ChainError::Empty);
    }
    y.check_against(o)?;
    let items = y.items();
    let n = items.len();
    let mut best = vec![1usize; n];
    for i in (0..n).rev() {
        for j in (i + 1)..n {
            if best[j] + 1 > best[i] && o.related_unchecked(&items[i], &items[j]) {
                best[i] = best[j] + 1;
            }
        }
    }
    let length = *best.iter().max().expect("non-empty");
    let mut indices = Vec::with_capacity(length);
    let mut cur = best.iter().position(|&b| b == length).expect("maximum is attained");
    indices.push(cur);
    while best[cur] > 1 {
        let want = best[cur] - 1;
        cur = ((cur + 1)..n)
            .find(|&j| best[j] == want && o.related_unchecked(&items[cur], &items[j]))
            .expect("dp table is consistent");
        indices.push(cur);
    }
    Ok((length, ChainWitness::from_indices(y, indices)))
}

/// Longest chain by patience sorting, `O(n log n)` comparisons.
///
/// Only valid for linear orders, where the pile tops stay sorted and
/// relatedness to a new item is monotone along them. The witness is a
/// longest chain but not necessarily the lexicographically least one.
pub fn longest_chain_patience(
    y: &Sequence,
    o: &OrderOracle,
) -> Result<(usize, ChainWitness), ChainError> {
    if !o.is_linear() {
        return Err(ChainError::NotLinear(o.to_string()));
    }
    if y.is_empty() {
        return Err(ChainError::Empty);
    }
    y.check_against(o)?;
    let items = y.items();
    let mut tops: Vec<usize> = Vec::new();
    let mut prev: Vec<Option<usize>> = vec![None; items.len()];
    for (i, x) in items.iter().enumerate() {
        let pile = tops.partition_point(|&t| o.related_unchecked(&items[t], x));
        prev[i] = pile.checked_sub(1).map(|p| tops[p]);
        if pile == tops.len() {
            tops.push(i);
        } else {
            tops[pile] = i;
        }
    }
    let mut indices = Vec::with_capacity(tops.len());
    let mut cur = tops.last().copied();
    while let Some(i) = cur {
        indices.push(i);
        cur = prev[i];
    }
    indices.reverse();
    Ok((tops.len(), ChainWitness::from_indices(y, indices)))
}

/// Longest chain length, by patience sorting when the order is linear and
/// by dynamic programming otherwise.
pub fn chain_length(y: &Sequence, o: &OrderOracle) -> Result<usize, ChainError> {
    if o.is_linear() {
        longest_chain_patience(y, o).map(|(n, _)| n)
    } else {
        longest_chain(y, o).map(|(n, _)| n)
    }
}

/// True iff `k` is strictly increasing and consecutive values are related.
pub fn verify_witness(k: &[usize], y: &Sequence, o: &OrderOracle) -> Result<bool, ChainError> {
    if let Some(&index) = k.iter().find(|&&i| i >= y.len()) {
        return Err(ChainError::IndexOutOfRange { index, len: y.len() });
    }
    for pair in k.windows(2) {
        if pair[0] >= pair[1] {
            return Ok(false);
        }
        if !o.related(&y.items[pair[0]], &y.items[pair[1]])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A value of maximum multiplicity and its count; ties go to the value
/// that occurs first.
pub fn constant_subsequence(y: &Sequence) -> Result<(Element, usize), ChainError> {
    if y.is_empty() {
        return Err(ChainError::Empty);
    }
    let mut counts: HashMap<&Element, usize> = HashMap::new();
    for e in y.items() {
        *counts.entry(e).or_default() += 1;
    }
    let mut best: Option<(&Element, usize)> = None;
    for e in y.items() {
        let c = counts[e];
        if best.is_none_or(|(_, b)| c > b) {
            best = Some((e, c));
        }
    }
    let (e, c) = best.expect("non-empty");
    Ok((e.clone(), c))
}

/// Longest chains under the non-strict and strict versions of one order,
/// next to the most frequent value. A non-strict chain is either built from
/// a constant part or from a strictly increasing one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub non_strict: (usize, ChainWitness),
    pub strict: (usize, ChainWitness),
    pub constant: (Element, usize),
}

pub fn decompose(y: &Sequence, o: &OrderOracle) -> Result<Decomposition, ChainError> {
    Ok(Decomposition {
        non_strict: longest_chain(y, &o.with_strictness(Strictness::NonStrict))?,
        strict: longest_chain(y, &o.with_strictness(Strictness::Strict))?,
        constant: constant_subsequence(y)?,
    })
}

/// `prefix` followed by `cycle` repeated forever.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpSequence {
    prefix: Sequence,
    cycle: Sequence,
}

impl UpSequence {
    pub fn new(prefix: Sequence, cycle: Sequence) -> Result<Self, ChainError> {
        if cycle.is_empty() {
            return Err(ChainError::EmptyCycle);
        }
        if let (Some(p), Some(c)) = (prefix.tag(), cycle.tag()) {
            if p != c {
                return Err(ChainError::MixedTags {
                    index: prefix.len(),
                    expected: p,
                    found: c,
                });
            }
        }
        Ok(UpSequence { prefix, cycle })
    }

    pub fn prefix(&self) -> &Sequence {
        &self.prefix
    }

    pub fn cycle(&self) -> &Sequence {
        &self.cycle
    }

    /// The finite sequence `prefix ⌢ cycle^m`.
    pub fn unroll(&self, m: usize) -> Sequence {
        let mut items = self.prefix.items.clone();
        for _ in 0..m {
            items.extend(self.cycle.items.iter().cloned());
        }
        Sequence { items }
    }
}

impl fmt::Display for UpSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.prefix, self.cycle)
    }
}

/// Exact answer for an ultimately periodic sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpVerdict {
    pub member: bool,
    /// A directed cycle `v_0 → v_1 → … → v_0` among the periodic values,
    /// empty when there is none.
    pub cycle: Vec<Element>,
}

/// Decides whether an ultimately periodic sequence has an infinite chain.
///
/// Only values of the periodic part recur infinitely often. An infinite
/// chain exists iff the relation graph on those values has a directed cycle
/// (a self-loop counts): walking the cycle again and again picks later and
/// later occurrences, and any infinite chain must revisit some value.
pub fn decide_membership_up(y: &UpSequence, o: &OrderOracle) -> Result<UpVerdict, ChainError> {
    y.prefix.check_against(o)?;
    y.cycle.check_against(o)?;

    let mut seen = HashSet::new();
    let values: Vec<&Element> = y.cycle.items().iter().filter(|e| seen.insert(*e)).collect();
    let mut graph: DiGraph<usize, ()> = DiGraph::new();
    let nodes: Vec<NodeIndex> = (0..values.len()).map(|i| graph.add_node(i)).collect();
    for (i, u) in values.iter().enumerate() {
        for (j, v) in values.iter().enumerate() {
            if o.related_unchecked(u, v) {
                graph.add_edge(nodes[i], nodes[j], ());
            }
        }
    }

    for scc in tarjan_scc(&graph) {
        let start = scc[0];
        if scc.len() == 1 && graph.find_edge(start, start).is_none() {
            continue;
        }
        let path = cycle_through(&graph, &scc, start);
        return Ok(UpVerdict {
            member: true,
            cycle: path.into_iter().map(|n| values[graph[n]].clone()).collect(),
        });
    }
    Ok(UpVerdict {
        member: false,
        cycle: Vec::new(),
    })
}

/// Shortest directed cycle through `start` inside one strongly connected
/// component.
fn cycle_through(graph: &DiGraph<usize, ()>, scc: &[NodeIndex], start: NodeIndex) -> Vec<NodeIndex> {
    if graph.find_edge(start, start).is_some() {
        return vec![start];
    }
    let inside: HashSet<NodeIndex> = scc.iter().copied().collect();
    let mut parent: HashMap<NodeIndex, NodeIndex> = HashMap::new();
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for v in graph.neighbors(u) {
            if v == start {
                let mut path = vec![u];
                let mut cur = u;
                while cur != start {
                    cur = parent[&cur];
                    path.push(cur);
                }
                path.reverse();
                return path;
            }
            if inside.contains(&v) && !parent.contains_key(&v) {
                parent.insert(v, u);
                queue.push_back(v);
            }
        }
    }
    unreachable!("a non-trivial strongly connected component has a cycle through every node")
}
