//! Enumerations of countable subsets of `[0, 1]`.

use crate::encodings::phi_rational;
use crate::rational::ExactRational;
use crate::trees::word_at;

/// An injective enumeration `i ↦ x_i`; `None` past the end of a finite set.
pub trait CountableSetStream {
    fn element(&self, i: usize) -> Option<ExactRational>;

    fn name(&self) -> String;

    /// The first `n` elements (fewer if the stream is shorter).
    fn take(&self, n: usize) -> Vec<ExactRational> {
        (0..n).map_while(|i| self.element(i)).collect()
    }
}

/// Level `k ≥ 1` and position `j` of the `g`-th gap (0-based) when gaps are
/// listed level by level, left to right; level `k` holds `2^(k-1)` gaps.
fn gap_position(g: usize) -> (u32, usize) {
    let k = (g + 1).ilog2() + 1;
    (k, g + 1 - (1usize << (k - 1)))
}

/// Left end of the `j`-th level-`(k-1)` interval of the middle-thirds
/// construction: `Σ 2 d_t 3^-t` over the binary digits `d_t` of `j`.
fn cantor_left_end(k: u32, j: usize) -> ExactRational {
    let mut x = ExactRational::zero();
    for t in 1..k {
        if (j >> (k - 1 - t)) & 1 == 1 {
            x = x + ExactRational::new(2, 3i64.pow(t));
        }
    }
    x
}

/// `0, 1`, then both endpoints of every middle-thirds gap, level by level.
#[derive(Clone, Copy, Debug, Default)]
pub struct CantorEndpoints;

impl CountableSetStream for CantorEndpoints {
    fn element(&self, i: usize) -> Option<ExactRational> {
        match i {
            0 => Some(ExactRational::zero()),
            1 => Some(ExactRational::one()),
            _ => {
                let (k, j) = gap_position((i - 2) / 2);
                if k > 38 {
                    return None;
                }
                let third = ExactRational::new(1, 3i64.pow(k));
                let lo = cantor_left_end(k, j) + &third;
                Some(if (i - 2).is_multiple_of(2) { lo } else { lo + third })
            }
        }
    }

    fn name(&self) -> String {
        "cantor3 gap endpoints".to_string()
    }
}

/// The midpoint of every middle-thirds gap, level by level.
#[derive(Clone, Copy, Debug, Default)]
pub struct GapMidpoints;

impl CountableSetStream for GapMidpoints {
    fn element(&self, i: usize) -> Option<ExactRational> {
        let (k, j) = gap_position(i);
        if k > 38 {
            return None;
        }
        Some(cantor_left_end(k, j) + ExactRational::new(1, 2 * 3i64.pow(k - 1)))
    }

    fn name(&self) -> String {
        "cantor3 gap midpoints".to_string()
    }
}

/// Dyadic rationals in `(0, 1)` by level: `1/2, 1/4, 3/4, 1/8, …`.
#[derive(Clone, Copy, Debug, Default)]
pub struct DyadicGrid;

impl CountableSetStream for DyadicGrid {
    fn element(&self, i: usize) -> Option<ExactRational> {
        let level = (i + 1).ilog2() + 1;
        let offset = (i + 1 - (1usize << (level - 1))) as i64;
        Some(ExactRational::new(2 * offset + 1, 1i64 << level))
    }

    fn name(&self) -> String {
        "dyadic grid".to_string()
    }
}

/// Images of the enumerated ω-words under `phi_rational`.
#[derive(Clone, Copy, Debug, Default)]
pub struct PhiRationalImage;

impl CountableSetStream for PhiRationalImage {
    fn element(&self, i: usize) -> Option<ExactRational> {
        phi_rational(&word_at(i as u64)).ok()
    }

    fn name(&self) -> String {
        "phi_rational image".to_string()
    }
}

/// A finite list.
#[derive(Clone, Debug, Default)]
pub struct ListStream(pub Vec<ExactRational>);

impl CountableSetStream for ListStream {
    fn element(&self, i: usize) -> Option<ExactRational> {
        self.0.get(i).cloned()
    }

    fn name(&self) -> String {
        format!("list of {}", self.0.len())
    }
}
