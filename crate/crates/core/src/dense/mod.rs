//! Finite-scale tools around dense suborders of subsets of `[0, 1] ∩ ℚ`:
//! Cantor interval schemes over staged closed sets, the dense subsets `P`
//! and `Y` read off a scheme, the `L_g` test, splitting depth, and a greedy
//! embedding into a dense target.

mod closed_set;
mod depth;
mod embed;
mod extract;
mod scheme;
mod streams;

use thiserror::Error;

use crate::orders::OrderError;
use crate::word::BitWord;

pub use closed_set::{ClosedSetOracle, Interval, MiddleThirds, StagedSet};
pub use depth::{depth_trend, splitting_depth};
pub use embed::{dense_embed, order_violations, Embedding};
pub use extract::{check_lg, extract_p, extract_y, spot_check_density, DensityReport};
pub use scheme::{build_scheme, build_scheme_at, IntervalScheme};
pub use streams::{CantorEndpoints, CountableSetStream, DyadicGrid, GapMidpoints, ListStream, PhiRationalImage};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DenseError {
    #[error("no gap of the working stage inside C_{sigma}; resolution too coarse")]
    NoGap { sigma: BitWord },
    #[error("splitting C_{sigma} leaves a degenerate interval; the set has an isolated point there")]
    DegenerateSplit { sigma: BitWord },
    #[error("the closed set must contain 0 and 1 as the ends of its stages")]
    MissingUnitEndpoints,
    #[error("the closed-set oracle has no such stage")]
    NoStage,
    #[error("invalid stages: {0}")]
    BadStages(String),
    #[error("no admissible target value for `{element}` among the first {budget} target elements")]
    BudgetExhausted { element: String, budget: usize },
    #[error("embedding needs a linear source order, {0} is not one")]
    NotLinear(String),
    #[error(transparent)]
    Order(#[from] OrderError),
}
