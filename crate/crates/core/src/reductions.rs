//! Tree-to-sequence reductions and the fuzz harness that checks them.
//!
//! A finite tree `T` becomes the sequence whose `n`-th term is the `n`-th
//! enumerated word if that word is a node of `T`, and the filler `1^n 0`
//! otherwise. Fillers are pairwise prefix-incomparable and strictly
//! decreasing in the reversed-digit order, so a chain in the image uses at
//! most one filler and the chain length tracks the depth of `T`.

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Geometric};
use thiserror::Error;

use crate::chains::{chain_length, ChainError, Sequence};
use crate::encodings::{EncodeError, Encoder};
use crate::orders::{Element, OrderKind, OrderOracle, Tag};
use crate::trees::{filler, index_of, word_at, FiniteTree, TreeError};
use crate::word::Word;
use crate::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("stage {stage} ({map}) expects {expected} elements but receives {found} elements")]
    StageMismatch {
        stage: usize,
        map: &'static str,
        expected: Tag,
        found: Tag,
    },
    #[error("pipeline produces {found} elements but the target order compares {expected} elements")]
    TargetMismatch { expected: Tag, found: Tag },
    #[error(transparent)]
    Encode(#[from] EncodeError),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error("invalid tree generator settings: {0}")]
    BadSpec(String),
}

/// Term `n` of the reduction of `t`.
pub fn reduce_term(t: &FiniteTree, n: usize) -> Word {
    let w = word_at(n as u64);
    if t.contains(&w) {
        w
    } else {
        filler(n)
    }
}

/// The first `horizon` terms of the reduction of `t`.
pub fn reduce_tree(t: &FiniteTree, horizon: usize) -> Sequence {
    let items = (0..horizon).map(|n| Element::WordNat(reduce_term(t, n))).collect();
    Sequence::new(items).expect("all ω-words")
}

/// Applies `map` to every term.
pub fn lift_map(x: &Sequence, map: Encoder) -> Result<Sequence, ReductionError> {
    let items = x
        .items()
        .iter()
        .map(|e| map.apply(e))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Sequence::new(items).expect("an encoder has a single codomain"))
}

/// Named pipelines from trees to each target order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    /// ω-words under ⊆.
    Subset,
    /// ω-words under the reversed-digit lexicographic order.
    Rl,
    /// dyadic rationals under ≤, through `phi_rational`.
    Rational,
    /// bit-words under ⊆, through `phi_binary`.
    Binary,
}

impl Target {
    pub const ALL: [Target; 4] = [Target::Subset, Target::Rl, Target::Rational, Target::Binary];

    pub fn name(self) -> &'static str {
        match self {
            Target::Subset => "subset",
            Target::Rl => "rl",
            Target::Rational => "rational",
            Target::Binary => "binary",
        }
    }

    pub fn pipeline(self) -> ReductionPipeline {
        let (stages, kind) = match self {
            Target::Subset => (vec![], OrderKind::SubsetWordNat),
            Target::Rl => (vec![], OrderKind::ReversedLex),
            Target::Rational => (vec![Encoder::PhiRational], OrderKind::RatLess),
            Target::Binary => (vec![Encoder::PhiBinary], OrderKind::SubsetWordBit),
        };
        ReductionPipeline::compose(stages, OrderOracle::non_strict(kind)).expect("bundled pipelines are well-typed")
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| ParseError::new(s, "expected one of subset, rl, rational, binary"))
    }
}

/// The tree reduction followed by pointwise encoders, read against a
/// target order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionPipeline {
    stages: Vec<Encoder>,
    target: OrderOracle,
}

impl ReductionPipeline {
    /// Chains the encoders after the tree reduction, checking that each
    /// stage accepts what the previous one produces.
    pub fn compose(stages: Vec<Encoder>, target: OrderOracle) -> Result<Self, ReductionError> {
        let mut tag = Tag::WordNat;
        for (i, enc) in stages.iter().enumerate() {
            if enc.domain() != tag {
                return Err(ReductionError::StageMismatch {
                    stage: i + 1,
                    map: enc.name(),
                    expected: enc.domain(),
                    found: tag,
                });
            }
            tag = enc.codomain();
        }
        if target.domain() != tag {
            return Err(ReductionError::TargetMismatch {
                expected: target.domain(),
                found: tag,
            });
        }
        Ok(ReductionPipeline { stages, target })
    }

    pub fn stages(&self) -> &[Encoder] {
        &self.stages
    }

    pub fn target(&self) -> &OrderOracle {
        &self.target
    }

    /// True for the bare reduction read under ⊆, where the image chain can
    /// exceed the tree chain by at most one filler.
    pub fn is_prefix_target(&self) -> bool {
        self.stages.is_empty() && self.target.kind() == OrderKind::SubsetWordNat
    }

    pub fn run(&self, t: &FiniteTree, horizon: usize) -> Result<Sequence, ReductionError> {
        let mut seq = reduce_tree(t, horizon);
        for &enc in &self.stages {
            seq = lift_map(&seq, enc)?;
        }
        Ok(seq)
    }

    /// Term `n` of the image, computed without the terms before it.
    pub fn image_at(&self, t: &FiniteTree, n: usize) -> Result<Element, ReductionError> {
        let mut e = Element::WordNat(reduce_term(t, n));
        for &enc in &self.stages {
            e = enc.apply(&e)?;
        }
        Ok(e)
    }

    /// Checks that the prefixes of `branch` give a chain in the image.
    ///
    /// The prefixes sit at increasing positions of the reduction; returns
    /// those positions if every pair of consecutive images is related under
    /// the target order, `None` otherwise. A `Some` result proves the image
    /// chain is at least `|branch| + 1` long at any horizon past the last
    /// position, without building the sequence.
    pub fn branch_witness(&self, t: &FiniteTree, branch: &Word) -> Result<Option<Vec<usize>>, ReductionError> {
        let mut positions = Vec::with_capacity(branch.len() + 1);
        let mut prev: Option<Element> = None;
        for p in branch.prefixes() {
            if !t.contains(&p) {
                return Ok(None);
            }
            let n = usize::try_from(index_of(&p)?).map_err(|_| TreeError::IndexOverflow(p.clone()))?;
            if positions.last().is_some_and(|&m| m >= n) {
                return Ok(None);
            }
            let e = self.image_at(t, n)?;
            if let Some(a) = &prev {
                if !self.target.related(a, &e).map_err(ChainError::from)? {
                    return Ok(None);
                }
            }
            positions.push(n);
            prev = Some(e);
        }
        Ok(Some(positions))
    }

    /// Longest chain of the image under the target order; 0 for horizon 0.
    pub fn image_chain(&self, t: &FiniteTree, horizon: usize) -> Result<usize, ReductionError> {
        let seq = self.run(t, horizon)?;
        if seq.is_empty() {
            return Ok(0);
        }
        Ok(chain_length(&seq, &self.target)?)
    }
}

impl fmt::Display for ReductionPipeline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("tree")?;
        for s in &self.stages {
            write!(f, " -> {s}")?;
        }
        write!(f, " @ {}", self.target)
    }
}

/// Settings for the Galton-Watson tree generator.
#[derive(Clone, Debug, PartialEq)]
pub struct TreeGenSpec {
    pub seed: u64,
    /// Mean of the geometric offspring law before truncation.
    pub mean_offspring: f64,
    /// Children of a node get distinct labels from `0..label_range`, which
    /// also caps the number of children.
    pub label_range: u64,
    pub depth_cap: usize,
    pub node_cap: usize,
}

impl Default for TreeGenSpec {
    fn default() -> Self {
        TreeGenSpec {
            seed: 0,
            mean_offspring: 1.5,
            label_range: 3,
            depth_cap: 12,
            node_cap: 500,
        }
    }
}

impl TreeGenSpec {
    fn validate(&self) -> Result<(), ReductionError> {
        if self.node_cap == 0 || self.depth_cap == 0 || self.label_range == 0 {
            return Err(ReductionError::BadSpec("caps and label range must be positive".into()));
        }
        if !(self.mean_offspring.is_finite() && self.mean_offspring >= 0.0) {
            return Err(ReductionError::BadSpec("mean offspring must be finite and non-negative".into()));
        }
        Ok(())
    }
}

/// Samples a tree breadth-first: every node below the depth cap draws a
/// truncated geometric number of children, until the node cap is hit.
pub fn generate_tree(spec: &TreeGenSpec) -> Result<FiniteTree, ReductionError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let law = Geometric::new(1.0 / (1.0 + spec.mean_offspring))
        .map_err(|e| ReductionError::BadSpec(e.to_string()))?;
    let range = usize::try_from(spec.label_range).unwrap_or(usize::MAX);
    let mut tree = FiniteTree::root();
    let mut queue = std::collections::VecDeque::from([crate::word::Word::empty()]);
    while let Some(node) = queue.pop_front() {
        if node.len() >= spec.depth_cap {
            continue;
        }
        let k = (law.sample(&mut rng) as usize).min(range);
        let mut labels = sample(&mut rng, range, k).into_vec();
        labels.sort_unstable();
        for label in labels {
            if tree.len() >= spec.node_cap {
                return Ok(tree);
            }
            let child = node.child(label as u64);
            tree.insert_branch(&child);
            queue.push_back(child);
        }
    }
    Ok(tree)
}

/// Seed of trial `trial` in a run seeded with `seed`.
pub fn trial_seed(seed: u64, trial: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng.random()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    Violation,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Ok => "ok",
            Verdict::Violation => "violation",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzRow {
    pub trial: u64,
    pub seed: u64,
    pub nodes: usize,
    pub l_tree: usize,
    pub l_img: usize,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FuzzReport {
    pub pipeline: String,
    pub horizon: usize,
    pub rows: Vec<FuzzRow>,
}

impl FuzzReport {
    pub fn violations(&self) -> impl Iterator<Item = &FuzzRow> {
        self.rows.iter().filter(|r| r.verdict == Verdict::Violation)
    }

    pub fn violation_count(&self) -> usize {
        self.violations().count()
    }

    pub fn summary(&self) -> String {
        let max_tree = self.rows.iter().map(|r| r.l_tree).max().unwrap_or(0);
        let max_img = self.rows.iter().map(|r| r.l_img).max().unwrap_or(0);
        format!(
            "pipeline {}: {} trials, horizon {}, max L_tree {}, max L_img {}, {} violations",
            self.pipeline,
            self.rows.len(),
            self.horizon,
            max_tree,
            max_img,
            self.violation_count()
        )
    }
}

/// Checks one tree: `L_tree ≤ L_img ≤ L_tree + 1` for the bare ⊆ target,
/// `L_img ≥ L_tree` otherwise.
pub fn check_tree(
    pipeline: &ReductionPipeline,
    t: &FiniteTree,
    horizon: usize,
) -> Result<(usize, usize, Verdict), ReductionError> {
    let l_tree = t.longest_chain_below(horizon as u64)?;
    let l_img = pipeline.image_chain(t, horizon)?;
    let ok = if pipeline.is_prefix_target() {
        l_tree <= l_img && l_img <= l_tree + 1
    } else {
        l_img >= l_tree
    };
    Ok((l_tree, l_img, if ok { Verdict::Ok } else { Verdict::Violation }))
}

/// Generates `trials` trees from `spec` (trial `i` uses `trial_seed(spec.seed, i)`)
/// and checks each against the pipeline.
pub fn fuzz_reduction(
    pipeline: &ReductionPipeline,
    spec: &TreeGenSpec,
    trials: u64,
    horizon: usize,
) -> Result<FuzzReport, ReductionError> {
    spec.validate()?;
    let mut rows = Vec::with_capacity(trials as usize);
    for trial in 0..trials {
        let seed = trial_seed(spec.seed, trial);
        let t = generate_tree(&TreeGenSpec { seed, ..spec.clone() })?;
        let (l_tree, l_img, verdict) = check_tree(pipeline, &t, horizon)?;
        rows.push(FuzzRow {
            trial,
            seed,
            nodes: t.len(),
            l_tree,
            l_img,
            verdict,
        });
    }
    Ok(FuzzReport {
        pipeline: pipeline.to_string(),
        horizon,
        rows,
    })
}
