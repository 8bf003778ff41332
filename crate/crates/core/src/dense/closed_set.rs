//! Closed subsets of `[0, 1]` presented by nested finite unions of closed
//! intervals ("stages").

use std::fmt;

use crate::rational::ExactRational;

use super::DenseError;

/// A closed interval `[lo, hi]` with `lo ≤ hi`, or an open gap `(lo, hi)`
/// when used as one; the owner says which.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub lo: ExactRational,
    pub hi: ExactRational,
}

impl Interval {
    pub fn new(lo: ExactRational, hi: ExactRational) -> Self {
        Interval { lo, hi }
    }

    pub fn length(&self) -> ExactRational {
        &self.hi - &self.lo
    }

    pub fn contains_closed(&self, x: &ExactRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_open(&self, x: &ExactRational) -> bool {
        &self.lo < x && x < &self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.lo, self.hi)
    }
}

/// A closed set given by stages: stage `k` is a sorted list of disjoint
/// closed intervals, and stage `k + 1` lies inside stage `k`. The set is
/// the intersection of all stages.
pub trait ClosedSetOracle {
    /// Stage `k`, or `None` past the last available stage.
    fn stage(&self, k: usize) -> Option<Vec<Interval>>;

    fn name(&self) -> String;

    /// Whether `x` survives stage `k`.
    fn stage_contains(&self, k: usize, x: &ExactRational) -> Option<bool> {
        let comps = self.stage(k)?;
        let i = comps.partition_point(|c| &c.hi < x);
        Some(i < comps.len() && comps[i].contains_closed(x))
    }
}

/// The middle-thirds Cantor set; stage `k` has `2^k` intervals of
/// length `3^-k`.
#[derive(Clone, Copy, Debug, Default)]
pub struct MiddleThirds;

impl MiddleThirds {
    /// Deepest stage handed out; stage 22 already has four million pieces.
    pub const MAX_STAGE: usize = 22;
}

impl ClosedSetOracle for MiddleThirds {
    fn stage(&self, k: usize) -> Option<Vec<Interval>> {
        if k > Self::MAX_STAGE {
            return None;
        }
        let mut comps = vec![Interval::new(ExactRational::zero(), ExactRational::one())];
        let third = ExactRational::new(1, 3);
        for _ in 0..k {
            let mut next = Vec::with_capacity(comps.len() * 2);
            for c in &comps {
                let step = c.length() * &third;
                next.push(Interval::new(c.lo.clone(), &c.lo + &step));
                next.push(Interval::new(&c.hi - &step, c.hi.clone()));
            }
            comps = next;
        }
        Some(comps)
    }

    fn name(&self) -> String {
        "cantor3".to_string()
    }
}

/// Explicit stages, e.g. read from a stage file.
#[derive(Clone, Debug)]
pub struct StagedSet {
    stages: Vec<Vec<Interval>>,
}

impl StagedSet {
    /// Validates ordering, disjointness and nesting of the stages.
    pub fn new(stages: Vec<Vec<Interval>>) -> Result<Self, DenseError> {
        if stages.is_empty() {
            return Err(DenseError::BadStages("no stages given".into()));
        }
        for (k, stage) in stages.iter().enumerate() {
            if stage.is_empty() {
                return Err(DenseError::BadStages(format!("stage {k} is empty")));
            }
            for c in stage {
                if c.lo > c.hi {
                    return Err(DenseError::BadStages(format!("stage {k}: interval [{c}] is reversed")));
                }
            }
            for pair in stage.windows(2) {
                if pair[0].hi >= pair[1].lo {
                    return Err(DenseError::BadStages(format!(
                        "stage {k}: intervals [{}] and [{}] overlap or are out of order",
                        pair[0], pair[1]
                    )));
                }
            }
            if k > 0 {
                let outer = &stages[k - 1];
                for c in stage {
                    if !outer.iter().any(|o| o.lo <= c.lo && c.hi <= o.hi) {
                        return Err(DenseError::BadStages(format!(
                            "stage {k}: interval [{c}] is not inside stage {}",
                            k - 1
                        )));
                    }
                }
            }
        }
        Ok(StagedSet { stages })
    }
}

impl ClosedSetOracle for StagedSet {
    fn stage(&self, k: usize) -> Option<Vec<Interval>> {
        self.stages.get(k).cloned()
    }

    fn name(&self) -> String {
        format!("staged set ({} stages)", self.stages.len())
    }
}
