//! Dense subsets read off a Cantor scheme, the `L_g` test, and budgeted
//! density spot checks.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::ops::Bound;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::ExactRational;
use crate::word::BitWord;

use super::scheme::IntervalScheme;
use super::streams::CountableSetStream;

/// `P`: the first `n` elements of `x`, minus every `p_σ` whose lexicographic
/// successor `σ + 1` (same length, binary +1) has `l_{σ+1}` among those
/// elements. Top words `1…1` have no successor, so their `p_σ` stay.
pub fn extract_p(x: &dyn CountableSetStream, s: &IntervalScheme, n: usize) -> BTreeSet<ExactRational> {
    let first: BTreeSet<ExactRational> = x.take(n).into_iter().collect();
    let mut excluded = HashSet::new();
    for len in 0..=s.depth() {
        for sigma in BitWord::all_of_length(len) {
            let Some(next) = sigma.successor() else { continue };
            let left_next = s.left(&next).expect("successor has the same length");
            if first.contains(left_next) {
                excluded.insert(s.right(&sigma).expect("σ within depth").clone());
            }
        }
    }
    first.into_iter().filter(|v| !excluded.contains(v)).collect()
}

/// `Y`: for every gap `U_σ` meeting the first `n` elements of `x`, the
/// earliest-enumerated element inside it.
pub fn extract_y(x: &dyn CountableSetStream, s: &IntervalScheme, n: usize) -> BTreeSet<ExactRational> {
    let gaps = s.sorted_gaps();
    let mut picks: BTreeMap<usize, ExactRational> = BTreeMap::new();
    for v in x.take(n) {
        // Gaps are disjoint, so only the last gap starting below v can hold it.
        let i = gaps.partition_point(|(_, u)| u.lo < v);
        if i == 0 {
            continue;
        }
        if gaps[i - 1].1.contains_open(&v) {
            picks.entry(i - 1).or_insert(v);
        }
    }
    picks.into_values().collect()
}

/// Finite-horizon test for
/// `L_g = {y : ∀a ∈ X (a < g → ∀N ∃n > N, a < y_n ≤ g)}`.
///
/// `N` ranges over `-1, 0, …, max(|y| - 2, -1)`, so every `a < g` needs some hit,
/// and a hit after each cut-off before the last term. Because the last
/// index is the only `n > |y| - 2`, this reduces to `a < y_last ≤ g` for
/// each `a < g`.
pub fn check_lg(y: &[ExactRational], g: &ExactRational, xs: &[ExactRational]) -> bool {
    let below: Vec<&ExactRational> = xs.iter().filter(|a| *a < g).collect();
    if below.is_empty() {
        return true;
    }
    let Some(last) = y.last() else { return false };
    last <= g && below.iter().all(|a| *a < last)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityReport {
    pub sampled: usize,
    /// Pairs `a < b` with nothing from the pool strictly between.
    pub failures: Vec<(ExactRational, ExactRational)>,
}

impl DensityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Samples `pairs` pairs `a < b` from `set` and looks for a witness strictly
/// between them in `pool` (the budget: typically a longer extraction of the
/// same set).
pub fn spot_check_density(
    set: &BTreeSet<ExactRational>,
    pool: &BTreeSet<ExactRational>,
    pairs: usize,
    seed: u64,
) -> DensityReport {
    let elems: Vec<&ExactRational> = set.iter().collect();
    let mut failures = Vec::new();
    if elems.len() < 2 {
        return DensityReport { sampled: 0, failures };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..pairs {
        let i = rng.random_range(0..elems.len());
        let mut j = rng.random_range(0..elems.len() - 1);
        if j >= i {
            j += 1;
        }
        let (a, b) = if i < j { (elems[i], elems[j]) } else { (elems[j], elems[i]) };
        let witness = pool.range((Bound::Excluded(a), Bound::Excluded(b))).next();
        if witness.is_none() {
            failures.push((a.clone(), b.clone()));
        }
    }
    DensityReport {
        sampled: pairs,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::closed_set::MiddleThirds;
    use crate::dense::scheme::build_scheme;
    use crate::dense::streams::{CantorEndpoints, GapMidpoints, ListStream};

    fn q(p: i64, d: i64) -> ExactRational {
        ExactRational::new(p, d)
    }

    /// `P` straight from its defining formula over all σ, no shortcuts.
    fn p_by_formula(x: &[ExactRational], s: &IntervalScheme) -> BTreeSet<ExactRational> {
        let xs: BTreeSet<_> = x.iter().cloned().collect();
        let mut removed = BTreeSet::new();
        for len in 0..=s.depth() {
            let words: Vec<BitWord> = BitWord::all_of_length(len).collect();
            for w in words.windows(2) {
                if xs.contains(s.left(&w[1]).unwrap()) {
                    removed.insert(s.right(&w[0]).unwrap().clone());
                }
            }
        }
        xs.difference(&removed).cloned().collect()
    }

    #[test]
    fn p_on_endpoint_stream() {
        let s = build_scheme(&MiddleThirds, 3).unwrap();
        let x = CantorEndpoints.take(16);
        let p = extract_p(&CantorEndpoints, &s, 16);
        assert_eq!(p, p_by_formula(&x, &s));
        // Left gap endpoints go, right ones and 0, 1 stay.
        assert!(!p.contains(&q(1, 3)) && p.contains(&q(2, 3)));
        assert!(p.contains(&q(0, 1)) && p.contains(&q(1, 1)));
        assert!(p.is_subset(&x.into_iter().collect()));
    }

    #[test]
    fn p_keeps_left_endpoint_without_partner() {
        // 1/3 = p_0, but l_1 = 2/3 is not in X.
        let s = build_scheme(&MiddleThirds, 1).unwrap();
        let x = ListStream(vec![q(0, 1), q(1, 3), q(1, 1)]);
        assert!(extract_p(&x, &s, 3).contains(&q(1, 3)));
    }

    #[test]
    fn top_word_never_excluded() {
        let s = build_scheme(&MiddleThirds, 2).unwrap();
        let p11 = s.right(&"11".parse().unwrap()).unwrap().clone();
        assert_eq!(p11, q(1, 1));
        let x = ListStream(s.endpoints());
        assert!(extract_p(&x, &s, 100).contains(&p11));
    }

    #[test]
    fn y_selector() {
        let s = build_scheme(&MiddleThirds, 2).unwrap();
        assert!(extract_y(&ListStream(vec![q(0, 1), q(1, 3), q(1, 1)]), &s, 3).is_empty());
        let one_each = ListStream(vec![q(1, 2), q(1, 6), q(5, 6)]);
        assert_eq!(extract_y(&one_each, &s, 3), one_each.0.iter().cloned().collect());
        let crowded = ListStream(vec![q(5, 9), q(1, 2), q(4, 9)]);
        assert_eq!(extract_y(&crowded, &s, 3), BTreeSet::from([q(5, 9)]));
        let y = extract_y(&GapMidpoints, &s, 10);
        assert_eq!(y.len(), 3);
    }

    /// The `L_g` condition with every quantifier spelled out.
    fn lg_by_quantifiers(y: &[ExactRational], g: &ExactRational, xs: &[ExactRational]) -> bool {
        let len = y.len() as i64;
        xs.iter().filter(|a| *a < g).all(|a| {
            (-1..(len - 1).max(0)).all(|cut| ((cut + 1)..len).any(|n| a < &y[n as usize] && &y[n as usize] <= g))
        })
    }

    #[test]
    fn lg_examples() {
        let g = q(1, 2);
        assert!(check_lg(&[q(1, 4), q(3, 8), q(7, 16)], &g, &[q(1, 4), q(3, 8)]));
        assert!(!check_lg(&[q(3, 4)], &g, &[q(1, 4)]));
        assert!(check_lg(&[q(3, 4)], &g, &[q(3, 4)]));
        assert!(check_lg(&[], &g, &[]));
    }

    #[test]
    fn lg_matches_quantifier_form() {
        let vals: Vec<ExactRational> = (0..=4).map(|i| q(i, 4)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..2000 {
            let len = rng.random_range(0..5);
            let y: Vec<_> = (0..len).map(|_| vals[rng.random_range(0..5)].clone()).collect();
            let xs: Vec<_> = (0..rng.random_range(0..4)).map(|_| vals[rng.random_range(0..5)].clone()).collect();
            let g = &vals[rng.random_range(0..5)];
            assert_eq!(check_lg(&y, g, &xs), lg_by_quantifiers(&y, g, &xs), "{y:?} {g} {xs:?}");
        }
    }

    #[test]
    fn density_spot_check_finds_gaps() {
        let grid: BTreeSet<_> = (0..=4).map(|i| q(i, 4)).collect();
        let finer: BTreeSet<_> = (0..=8).map(|i| q(i, 8)).collect();
        assert!(spot_check_density(&grid, &finer, 50, 1).passed());
        let report = spot_check_density(&grid, &grid, 50, 1);
        assert!(!report.passed());
        assert_eq!(report.sampled, 50);
    }
}
