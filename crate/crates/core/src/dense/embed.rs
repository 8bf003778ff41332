//! Greedy forth-only embedding of a finite linear order into a dense
//! target stream.

use crate::orders::{Comparison, Element, OrderOracle};
use crate::rational::ExactRational;

use super::streams::CountableSetStream;
use super::DenseError;

/// Source elements paired with their images, in source order.
pub type Embedding = Vec<(Element, ExactRational)>;

/// Maps `source` into `target` preserving order.
///
/// Elements are placed in source order. Each new element takes the
/// earliest-enumerated unused target value lying strictly between the
/// images of its already placed neighbours; repeated source elements reuse
/// their image. Only the first `budget` target indices are searched.
pub fn dense_embed(
    source: &[Element],
    o: &OrderOracle,
    target: &dyn CountableSetStream,
    budget: usize,
) -> Result<Embedding, DenseError> {
    if !o.is_linear() {
        return Err(DenseError::NotLinear(o.to_string()));
    }
    let mut placed: Embedding = Vec::with_capacity(source.len());
    let mut used = vec![false; budget];
    for s in source {
        let mut lower: Option<&(Element, ExactRational)> = None;
        let mut upper: Option<&(Element, ExactRational)> = None;
        let mut same = None;
        for entry in &placed {
            match o.compare(&entry.0, s)? {
                Comparison::Less => {
                    if lower.is_none_or(|l| entry.1 > l.1) {
                        lower = Some(entry);
                    }
                }
                Comparison::Greater => {
                    if upper.is_none_or(|u| entry.1 < u.1) {
                        upper = Some(entry);
                    }
                }
                Comparison::Equal => same = Some(entry.1.clone()),
                Comparison::Incomparable => return Err(DenseError::NotLinear(o.to_string())),
            }
        }
        if let Some(image) = same {
            placed.push((s.clone(), image));
            continue;
        }
        let (lo, hi) = (lower.map(|l| l.1.clone()), upper.map(|u| u.1.clone()));
        let admissible = |v: &ExactRational| lo.as_ref().is_none_or(|l| l < v) && hi.as_ref().is_none_or(|h| v < h);
        let pick = (0..budget)
            .map_while(|i| target.element(i).map(|v| (i, v)))
            .find(|(i, v)| !used[*i] && admissible(v));
        let Some((i, v)) = pick else {
            return Err(DenseError::BudgetExhausted {
                element: s.to_string(),
                budget,
            });
        };
        used[i] = true;
        placed.push((s.clone(), v));
    }
    Ok(placed)
}

/// Pairs `(a, b)` from the embedding where `a < b` and `image(a) < image(b)`
/// disagree; empty for a correct embedding.
pub fn order_violations(embedding: &Embedding, o: &OrderOracle) -> Result<Vec<(Element, Element)>, DenseError> {
    let mut bad = Vec::new();
    for (i, (a, fa)) in embedding.iter().enumerate() {
        for (b, fb) in &embedding[i + 1..] {
            let source = o.compare(a, b)?;
            let image = match fa.cmp(fb) {
                std::cmp::Ordering::Less => Comparison::Less,
                std::cmp::Ordering::Equal => Comparison::Equal,
                std::cmp::Ordering::Greater => Comparison::Greater,
            };
            if source != image {
                bad.push((a.clone(), b.clone()));
            }
        }
    }
    Ok(bad)
}
