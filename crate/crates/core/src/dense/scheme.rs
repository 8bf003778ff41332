//! The Cantor interval scheme `{C_σ}`, `{U_σ}` of a perfect nowhere dense
//! closed set containing 0 and 1.
//!
//! `C_ε = [0, 1]`. Inside `C_σ = [l_σ, p_σ]` the scheme removes the largest
//! gap `U_σ = (a_σ, b_σ)` of the working stage (leftmost on ties) and sets
//! `C_σ0 = [l_σ, a_σ]`, `C_σ1 = [b_σ, p_σ]`.

use std::fmt::Write as _;

use crate::rational::ExactRational;
use crate::word::BitWord;

use super::closed_set::{ClosedSetOracle, Interval};
use super::DenseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalScheme {
    depth: usize,
    stage: usize,
    /// `closed[n][i]` is `C_σ` for the `i`-th word of length `n`.
    closed: Vec<Vec<Interval>>,
    /// `gaps[n][i]` is `U_σ` likewise, for `n < depth`.
    gaps: Vec<Vec<Interval>>,
}

fn word_index(sigma: &BitWord) -> usize {
    sigma.bits().iter().fold(0, |acc, &b| (acc << 1) | usize::from(b))
}

/// Builds the scheme to `depth` from the first stage with at least
/// `2^(depth+1)` intervals (or the last stage available).
pub fn build_scheme(c: &dyn ClosedSetOracle, depth: usize) -> Result<IntervalScheme, DenseError> {
    let needed = 1usize.checked_shl(depth as u32 + 1).unwrap_or(usize::MAX);
    let mut chosen = None;
    let mut k = 0;
    while let Some(stage) = c.stage(k) {
        let enough = stage.len() >= needed;
        chosen = Some((k, stage));
        if enough {
            break;
        }
        k += 1;
    }
    let (k, stage) = chosen.ok_or(DenseError::NoStage)?;
    build_from_stage(k, &stage, depth)
}

/// Builds the scheme to `depth` from an explicitly chosen stage.
pub fn build_scheme_at(
    c: &dyn ClosedSetOracle,
    depth: usize,
    stage: usize,
) -> Result<IntervalScheme, DenseError> {
    let comps = c.stage(stage).ok_or(DenseError::NoStage)?;
    build_from_stage(stage, &comps, depth)
}

fn build_from_stage(stage: usize, comps: &[Interval], depth: usize) -> Result<IntervalScheme, DenseError> {
    let (zero, one) = (ExactRational::zero(), ExactRational::one());
    if comps.first().map(|c| &c.lo) != Some(&zero) || comps.last().map(|c| &c.hi) != Some(&one) {
        return Err(DenseError::MissingUnitEndpoints);
    }
    let mut closed = vec![vec![Interval::new(zero, one)]];
    let mut gaps = Vec::with_capacity(depth);
    for level in 0..depth {
        let mut next = Vec::with_capacity(closed[level].len() * 2);
        let mut level_gaps = Vec::with_capacity(closed[level].len());
        for (i, c) in closed[level].iter().enumerate() {
            let sigma = || BitWord::from_bits((0..level).rev().map(|b| (i >> b) & 1 == 1));
            let first = comps.partition_point(|x| x.lo < c.lo);
            let last = comps.partition_point(|x| x.hi <= c.hi);
            if last < first + 2 {
                return Err(DenseError::NoGap { sigma: sigma() });
            }
            // Largest gap between consecutive components in [first, last).
            let mut best: Option<(usize, ExactRational)> = None;
            for t in first..last - 1 {
                let len = &comps[t + 1].lo - &comps[t].hi;
                if best.as_ref().is_none_or(|(_, b)| &len > b) {
                    best = Some((t, len));
                }
            }
            let (t, _) = best.expect("at least one gap");
            let gap = Interval::new(comps[t].hi.clone(), comps[t + 1].lo.clone());
            if !(c.lo < gap.lo && gap.lo < gap.hi && gap.hi < c.hi) {
                return Err(DenseError::DegenerateSplit { sigma: sigma() });
            }
            next.push(Interval::new(c.lo.clone(), gap.lo.clone()));
            next.push(Interval::new(gap.hi.clone(), c.hi.clone()));
            level_gaps.push(gap);
        }
        closed.push(next);
        gaps.push(level_gaps);
    }
    Ok(IntervalScheme {
        depth,
        stage,
        closed,
        gaps,
    })
}

impl IntervalScheme {
    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Index of the stage the scheme was read from.
    pub fn stage(&self) -> usize {
        self.stage
    }

    /// `C_σ`, for `|σ| ≤ depth`.
    pub fn closed(&self, sigma: &BitWord) -> Option<&Interval> {
        self.closed.get(sigma.len())?.get(word_index(sigma))
    }

    /// `U_σ`, for `|σ| < depth`.
    pub fn gap(&self, sigma: &BitWord) -> Option<&Interval> {
        self.gaps.get(sigma.len())?.get(word_index(sigma))
    }

    pub fn left(&self, sigma: &BitWord) -> Option<&ExactRational> {
        self.closed(sigma).map(|c| &c.lo)
    }

    pub fn right(&self, sigma: &BitWord) -> Option<&ExactRational> {
        self.closed(sigma).map(|c| &c.hi)
    }

    pub fn closed_level(&self, n: usize) -> &[Interval] {
        &self.closed[n]
    }

    pub fn gap_level(&self, n: usize) -> &[Interval] {
        &self.gaps[n]
    }

    /// All gaps, sorted left to right.
    pub fn sorted_gaps(&self) -> Vec<(BitWord, &Interval)> {
        let mut v: Vec<(BitWord, &Interval)> = (0..self.depth)
            .flat_map(|n| BitWord::all_of_length(n).zip(self.gaps[n].iter()))
            .collect();
        v.sort_by(|a, b| a.1.lo.cmp(&b.1.lo));
        v
    }

    /// All endpoints `l_σ`, `p_σ` with `|σ| ≤ depth`.
    pub fn endpoints(&self) -> Vec<ExactRational> {
        let mut v: Vec<ExactRational> = self
            .closed
            .iter()
            .flatten()
            .flat_map(|c| [c.lo.clone(), c.hi.clone()])
            .collect();
        v.sort();
        v.dedup();
        v
    }

    /// Whether level `d` tiles `[0, 1]` with the gaps of all shallower
    /// levels: sorted, the pieces must alternate closed, gap, closed, …,
    /// starting at 0, ending at 1, each gap touching its neighbours. That
    /// is exactly `⋃ C_σ (|σ| = d) = [0, 1] ∖ ⋃ U_σ (|σ| < d)`.
    pub fn level_tiles_unit(&self, d: usize) -> bool {
        let mut pieces: Vec<(&Interval, bool)> = self.closed[d].iter().map(|c| (c, true)).collect();
        pieces.extend(self.gaps[..d].iter().flatten().map(|u| (u, false)));
        pieces.sort_by(|a, b| a.0.lo.cmp(&b.0.lo).then(a.0.hi.cmp(&b.0.hi)));
        if pieces.first().map(|p| p.0.lo.is_zero()) != Some(true)
            || pieces.last().map(|p| p.0.hi == ExactRational::one()) != Some(true)
        {
            return false;
        }
        pieces.iter().enumerate().all(|(i, (iv, is_closed))| {
            let alternates = *is_closed == (i % 2 == 0);
            let touches = i == 0 || pieces[i - 1].0.hi == iv.lo;
            alternates && touches && iv.lo < iv.hi
        })
    }

    /// Endpoints `l_σ`, `p_σ` missing from stage `k` of `c`.
    pub fn endpoints_outside_stage(&self, c: &dyn ClosedSetOracle, k: usize) -> Option<Vec<ExactRational>> {
        let comps = c.stage(k)?;
        Some(
            self.endpoints()
                .into_iter()
                .filter(|x| {
                    let i = comps.partition_point(|c| &c.hi < x);
                    !(i < comps.len() && comps[i].contains_closed(x))
                })
                .collect(),
        )
    }

    /// Gaps that meet some interval of stage `k` of `c`.
    pub fn gaps_meeting_stage(&self, c: &dyn ClosedSetOracle, k: usize) -> Option<Vec<BitWord>> {
        let comps = c.stage(k)?;
        Some(
            self.sorted_gaps()
                .into_iter()
                .filter(|(_, u)| {
                    let i = comps.partition_point(|c| c.hi <= u.lo);
                    i < comps.len() && comps[i].lo < u.hi
                })
                .map(|(s, _)| s)
                .collect(),
        )
    }

    /// One line per σ, by level then lexicographically:
    /// `σ l_σ p_σ [a_σ b_σ]`, the gap part only below the last level.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for n in 0..=self.depth {
            for (i, sigma) in BitWord::all_of_length(n).enumerate() {
                let c = &self.closed[n][i];
                write!(out, "{sigma} {} {}", c.lo, c.hi).unwrap();
                if n < self.depth {
                    let u = &self.gaps[n][i];
                    write!(out, " {} {}", u.lo, u.hi).unwrap();
                }
                out.push('\n');
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::closed_set::{MiddleThirds, StagedSet};

    fn q(p: i64, d: i64) -> ExactRational {
        ExactRational::new(p, d)
    }

    fn b(s: &str) -> BitWord {
        s.parse().unwrap()
    }

    #[test]
    fn middle_thirds_depth_one() {
        let s = build_scheme(&MiddleThirds, 1).unwrap();
        assert_eq!(s.closed(&b("e")).unwrap(), &Interval::new(q(0, 1), q(1, 1)));
        assert_eq!(s.gap(&b("e")).unwrap(), &Interval::new(q(1, 3), q(2, 3)));
        assert_eq!(s.closed(&b("0")).unwrap(), &Interval::new(q(0, 1), q(1, 3)));
        assert_eq!(s.closed(&b("1")).unwrap(), &Interval::new(q(2, 3), q(1, 1)));
        assert_eq!(s.gap(&b("0")), None);
    }

    #[test]
    fn middle_thirds_depth_two() {
        let s = build_scheme(&MiddleThirds, 2).unwrap();
        assert_eq!(s.gap(&b("0")).unwrap(), &Interval::new(q(1, 9), q(2, 9)));
        assert_eq!(s.gap(&b("1")).unwrap(), &Interval::new(q(7, 9), q(8, 9)));
        assert!(s.level_tiles_unit(0) && s.level_tiles_unit(1) && s.level_tiles_unit(2));
        for k in 0..=s.stage() + 2 {
            assert!(s.endpoints_outside_stage(&MiddleThirds, k).unwrap().is_empty());
        }
        assert!(s.gaps_meeting_stage(&MiddleThirds, s.stage()).unwrap().is_empty());
        let dump = s.dump();
        assert!(dump.starts_with("e 0/1 1/1 1/3 2/3\n0 0/1 1/3 1/9 2/9\n"));
        assert!(dump.ends_with("11 8/9 1/1\n"));
    }

    #[test]
    fn insufficient_resolution() {
        let err = build_scheme_at(&MiddleThirds, 2, 1).unwrap_err();
        assert_eq!(err, DenseError::NoGap { sigma: b("0") });
    }

    #[test]
    fn leftmost_largest_gap() {
        // Two equal gaps inside [0, 1]; the left one is removed first.
        let stage = vec![
            Interval::new(q(0, 1), q(1, 5)),
            Interval::new(q(2, 5), q(3, 5)),
            Interval::new(q(4, 5), q(1, 1)),
        ];
        let set = StagedSet::new(vec![vec![Interval::new(q(0, 1), q(1, 1))], stage]).unwrap();
        let s = build_scheme_at(&set, 1, 1).unwrap();
        assert_eq!(s.gap(&b("e")).unwrap(), &Interval::new(q(1, 5), q(2, 5)));
    }

    #[test]
    fn unit_endpoints_required() {
        let set = StagedSet::new(vec![vec![Interval::new(q(1, 5), q(1, 1))]]).unwrap();
        assert_eq!(build_scheme(&set, 1), Err(DenseError::MissingUnitEndpoints));
    }

    #[test]
    fn degenerate_split_rejected() {
        let stage = vec![Interval::new(q(0, 1), q(0, 1)), Interval::new(q(1, 2), q(1, 1))];
        let set = StagedSet::new(vec![stage]).unwrap();
        assert_eq!(
            build_scheme_at(&set, 1, 0),
            Err(DenseError::DegenerateSplit { sigma: b("e") })
        );
    }
}
