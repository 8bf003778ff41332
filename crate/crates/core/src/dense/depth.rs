//! Splitting depth: how many times a finite linear order can be split by
//! strictly-between elements.
//!
//! `sd(a, b) = 0` when nothing lies strictly between `a` and `b`, otherwise
//! `1 + max_c min(sd(a, c), sd(c, b))` over the elements `c` in between.
//! Dense orders have unbounded depth along any filtration; a finite set of
//! size `n` has depth `⌊log2(n - 1)⌋`, so the number is evidence about
//! growth, not a certificate.

use crate::rational::ExactRational;

/// Maximum of `sd(a, b)` over all pairs.
///
/// On a sorted list without repeats the elements between positions `i < j`
/// are exactly `i+1..j`, so `sd` depends only on `j - i` and the memo table
/// is indexed by that width.
pub fn splitting_depth(elems: &[ExactRational]) -> usize {
    let mut sorted: Vec<&ExactRational> = elems.iter().collect();
    sorted.sort();
    sorted.dedup();
    let n = sorted.len();
    if n < 2 {
        return 0;
    }
    let mut by_width = vec![0usize; n];
    for width in 2..n {
        by_width[width] = 1 + (1..width)
            .map(|c| by_width[c].min(by_width[width - c]))
            .max()
            .expect("width ≥ 2");
    }
    by_width[1..].iter().copied().max().unwrap_or(0)
}

/// Splitting depth of the first `n` elements for `n = 2, 4, 8, …` and the
/// full length.
pub fn depth_trend(elems: &[ExactRational]) -> Vec<(usize, usize)> {
    let mut sizes = Vec::new();
    let mut n = 2;
    while n < elems.len() {
        sizes.push(n);
        n *= 2;
    }
    if !elems.is_empty() {
        sizes.push(elems.len());
    }
    sizes.into_iter().map(|n| (n, splitting_depth(&elems[..n]))).collect()
}
