//! Closed-form parameter values for joins and products, together with the
//! colorings that realize them.
//!
//! Every operation returns a [`TheoremReport`]: the predicted value (a point, an
//! interval, or an explicit "unknown"), the constructed coloring of the
//! product, per-pair witnesses, and whether the coloring passed the exact
//! verifiers. Colorings index product vertices as `g * |H| + h`; joins put the
//! left graph first.
//!
//! Witnesses come from path templates where a construction lists its paths,
//! and from the exact search otherwise. A template path that fails validation
//! is replaced by a searched one and the fallback is counted, never hidden.

mod base;
mod cartesian;
mod direct;
mod dispatch;
mod join;
mod lexicographic;
mod strong;
mod support;

pub use base::{base_report, predicted_base};
pub use cartesian::{cartesian_pvc, cartesian_pvc2, cartesian_spvc_bound};
pub use direct::{direct_complete_cases, direct_kn_times_h, direct_pvc_spvc};
pub use dispatch::{evaluate_graph, evaluate_product};
pub use join::{complete_bipartite_pvck, complete_pvck, join_pvck};
pub use lexicographic::{lex_pvc, lex_pvc2, lex_spvc};
pub use strong::{strong_blocked_pair, strong_pvc, strong_pvc2, strong_spvc, BlockedPair};
pub use support::tree_parity_coloring;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::colorverify::{VertexColoring, Witness};
use crate::error::Result;
use crate::graph::{Distance, Graph};
use crate::oracle::{brute_spvc, OracleConfig};
use crate::parameter::Parameter;

/// Stable identifiers of the statements evaluated here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "base.pvc")]
    BasePvc,
    #[serde(rename = "base.spvc")]
    BaseSpvc,
    #[serde(rename = "lemma.J1.complete")]
    CompleteGraph,
    #[serde(rename = "lemma.J1.bipartite")]
    CompleteBipartite,
    #[serde(rename = "join.pvck")]
    Join,
    #[serde(rename = "cart.pvc")]
    CartesianPvc,
    #[serde(rename = "cart.pvc2")]
    CartesianPvc2,
    #[serde(rename = "cart.spvc")]
    CartesianSpvc,
    #[serde(rename = "lex.pvc")]
    LexPvc,
    #[serde(rename = "lex.spvc")]
    LexSpvc,
    #[serde(rename = "lex.pvc2")]
    LexPvc2,
    #[serde(rename = "strong.pvc")]
    StrongPvc,
    #[serde(rename = "strong.pvc2")]
    StrongPvc2,
    #[serde(rename = "strong.spvc")]
    StrongSpvc,
    #[serde(rename = "direct.pvc")]
    DirectPvc,
    #[serde(rename = "direct.D2")]
    DirectCompleteFactors,
    #[serde(rename = "direct.D3")]
    DirectCompleteTimesAny,
}

impl TheoremId {
    pub const ALL: [TheoremId; 17] = [
        TheoremId::BasePvc,
        TheoremId::BaseSpvc,
        TheoremId::CompleteGraph,
        TheoremId::CompleteBipartite,
        TheoremId::Join,
        TheoremId::CartesianPvc,
        TheoremId::CartesianPvc2,
        TheoremId::CartesianSpvc,
        TheoremId::LexPvc,
        TheoremId::LexSpvc,
        TheoremId::LexPvc2,
        TheoremId::StrongPvc,
        TheoremId::StrongPvc2,
        TheoremId::StrongSpvc,
        TheoremId::DirectPvc,
        TheoremId::DirectCompleteFactors,
        TheoremId::DirectCompleteTimesAny,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::BasePvc => "base.pvc",
            TheoremId::BaseSpvc => "base.spvc",
            TheoremId::CompleteGraph => "lemma.J1.complete",
            TheoremId::CompleteBipartite => "lemma.J1.bipartite",
            TheoremId::Join => "join.pvck",
            TheoremId::CartesianPvc => "cart.pvc",
            TheoremId::CartesianPvc2 => "cart.pvc2",
            TheoremId::CartesianSpvc => "cart.spvc",
            TheoremId::LexPvc => "lex.pvc",
            TheoremId::LexSpvc => "lex.spvc",
            TheoremId::LexPvc2 => "lex.pvc2",
            TheoremId::StrongPvc => "strong.pvc",
            TheoremId::StrongPvc2 => "strong.pvc2",
            TheoremId::StrongSpvc => "strong.spvc",
            TheoremId::DirectPvc => "direct.pvc",
            TheoremId::DirectCompleteFactors => "direct.D2",
            TheoremId::DirectCompleteTimesAny => "direct.D3",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A predicted parameter value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Prediction {
    Exact(u32),
    Interval {
        lo: u32,
        hi: u32,
    },
    /// No formula applies; never a guess.
    Unknown,
}

impl Prediction {
    /// An interval, collapsed to a point when `lo == hi`.
    pub fn interval(lo: u32, hi: u32) -> Self {
        debug_assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        if lo == hi {
            Prediction::Exact(lo)
        } else {
            Prediction::Interval { lo, hi }
        }
    }

    pub fn contains(self, value: u32) -> bool {
        match self {
            Prediction::Exact(v) => v == value,
            Prediction::Interval { lo, hi } => (lo..=hi).contains(&value),
            Prediction::Unknown => false,
        }
    }

    pub fn exact(self) -> Option<u32> {
        match self {
            Prediction::Exact(v) => Some(v),
            _ => None,
        }
    }

    pub fn upper(self) -> Option<u32> {
        match self {
            Prediction::Exact(v) | Prediction::Interval { hi: v, .. } => Some(v),
            Prediction::Unknown => None,
        }
    }
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prediction::Exact(v) => write!(f, "{v}"),
            Prediction::Interval { lo, hi } => write!(f, "[{lo},{hi}]"),
            Prediction::Unknown => f.write_str("unknown"),
        }
    }
}

/// Outcome of evaluating one statement on concrete inputs.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    /// graph6 encodings of the inputs, left factor first.
    pub inputs: Vec<String>,
    /// Parameters the prediction applies to; all share the same value.
    pub params: Vec<Parameter>,
    pub predicted: Prediction,
    pub coloring: Option<VertexColoring>,
    pub witnesses: Vec<Witness>,
    /// Witnesses built from a path template and accepted as is.
    pub templated_witnesses: usize,
    /// Witnesses produced by the exact search, including template fallbacks.
    pub searched_witnesses: usize,
    /// The coloring passed every verifier and every witness validated, or the
    /// value is 0 and the graph is complete.
    pub verified: bool,
    pub notes: Vec<String>,
}

/// spvc of a factor with a coloring attaining it (one color when the value is 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSpvc {
    pub value: u32,
    pub coloring: VertexColoring,
}

impl FactorSpvc {
    /// Uses the closed form when the diameter is at most 2 and the oracle otherwise.
    pub fn compute(g: &Graph, cfg: &OracleConfig) -> Result<Self> {
        let value = match g.diameter() {
            Distance::Finite(0 | 1) => 0,
            Distance::Finite(2) => 1,
            _ => {
                let found = brute_spvc(g, cfg)?;
                let coloring = found.optimal_coloring.unwrap_or_else(|| VertexColoring::monochromatic(g.order()));
                return Ok(FactorSpvc { value: found.value, coloring });
            }
        };
        Ok(FactorSpvc { value, coloring: VertexColoring::monochromatic(g.order()) })
    }

    /// Palette size of the coloring: complete factors still need one color.
    pub fn effective(&self) -> u32 {
        self.value.max(1)
    }
}
