//! Ground truth by exhaustive search, plus graph generators and enumerators.
//!
//! Palette sizes are tried in increasing order; within a size, colorings are
//! restricted-growth strings (vertex 0 gets color 1, each vertex uses at most one
//! color beyond those already seen), which removes color-permutation symmetry.
//! The first success at the first feasible size is the answer.

mod enumerate;
pub mod exhaustive;
mod families;

pub use enumerate::{
    canonical_form, enumerate_connected, enumerate_graphs, MAX_CANONICAL_ORDER, MAX_ENUMERATION_ORDER,
};
pub use families::{generate, Family};

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::colorverify::{
    first_pvck_failure_unchecked, is_proper_vertex_k_connected, is_strong_proper_vertex_connected, pairs_hardest_first,
    GeodesicIndex, SearchBudget, VertexColoring,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::parameter::Parameter;

pub const DEFAULT_PVC_ORDER_CAP: usize = 16;
pub const DEFAULT_PVCK_ORDER_CAP: usize = 12;
pub const DEFAULT_SPVC_ORDER_CAP: usize = 14;
pub const DEFAULT_PALETTE_CAP: u32 = 6;

#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    /// Order limit; `None` selects the per-parameter default.
    pub max_order: Option<usize>,
    pub palette_cap: u32,
    pub budget: SearchBudget,
    /// Re-verify the optimum with the public verifiers and re-exhaust every
    /// smaller palette sequentially.
    pub reconfirm: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_order: None,
            palette_cap: DEFAULT_PALETTE_CAP,
            budget: SearchBudget::default(),
            reconfirm: cfg!(debug_assertions),
        }
    }
}

impl OracleConfig {
    pub fn with_max_order(mut self, max_order: usize) -> Self {
        self.max_order = Some(max_order);
        self
    }

    fn order_cap(&self, parameter: Parameter) -> usize {
        self.max_order.unwrap_or(match parameter {
            Parameter::Pvck(1) => DEFAULT_PVC_ORDER_CAP,
            Parameter::Pvck(_) => DEFAULT_PVCK_ORDER_CAP,
            Parameter::Spvc => DEFAULT_SPVC_ORDER_CAP,
        })
    }
}

#[derive(Clone, Debug)]
pub struct OracleResult {
    pub parameter: Parameter,
    pub value: u32,
    /// `None` exactly when the value is 0 (complete graphs).
    pub optimal_coloring: Option<VertexColoring>,
    pub colorings_examined: u64,
    pub elapsed: Duration,
}

/// Exact pvc_k(G). Requires `1 <= k <= κ(G)`.
pub fn brute_pvc_k(g: &Graph, k: usize, cfg: &OracleConfig) -> Result<OracleResult> {
    let parameter = Parameter::Pvck(k);
    let cap = cfg.order_cap(parameter);
    if g.order() > cap {
        return Err(Error::CapExceeded { order: g.order(), cap });
    }
    let kappa = g.vertex_connectivity();
    if k == 0 || k > kappa {
        return Err(Error::InvalidK { k, connectivity: kappa });
    }
    let pairs = pairs_hardest_first(g);
    let lower = if k == 1 && g.is_complete() { 0 } else { 1 };
    let budget = cfg.budget;
    let check = |colors: &VertexColoring| -> Result<bool> {
        Ok(first_pvck_failure_unchecked(g, colors, k, &pairs, budget)?.is_none())
    };
    let public = |colors: &VertexColoring| is_proper_vertex_k_connected(g, colors, k, budget);
    run(g, parameter, lower, cfg, check, public)
}

/// Exact spvc(G) for connected G.
pub fn brute_spvc(g: &Graph, cfg: &OracleConfig) -> Result<OracleResult> {
    let parameter = Parameter::Spvc;
    let cap = cfg.order_cap(parameter);
    if g.order() > cap {
        return Err(Error::CapExceeded { order: g.order(), cap });
    }
    let index = GeodesicIndex::new(g)?;
    let lower = if g.is_complete() { 0 } else { 1 };
    let check = |colors: &VertexColoring| -> Result<bool> { Ok(index.first_failure(colors).is_none()) };
    let public = |colors: &VertexColoring| is_strong_proper_vertex_connected(g, colors);
    run(g, parameter, lower, cfg, check, public)
}

/// Dispatch on the parameter.
pub fn brute(g: &Graph, parameter: Parameter, cfg: &OracleConfig) -> Result<OracleResult> {
    match parameter {
        Parameter::Pvck(k) => brute_pvc_k(g, k, cfg),
        Parameter::Spvc => brute_spvc(g, cfg),
    }
}

/// Number of leading vertices fixed per parallel work item.
const PREFIX_LEN: usize = 7;

fn run<C, P>(
    g: &Graph,
    parameter: Parameter,
    lower: u32,
    cfg: &OracleConfig,
    check: C,
    public: P,
) -> Result<OracleResult>
where
    C: Fn(&VertexColoring) -> Result<bool> + Sync,
    P: Fn(&VertexColoring) -> Result<bool>,
{
    let start = Instant::now();
    let n = g.order();
    let examined = AtomicU64::new(0);
    let finish = |value: u32, coloring: Option<VertexColoring>| OracleResult {
        parameter,
        value,
        optimal_coloring: coloring,
        colorings_examined: examined.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
    };
    if lower == 0 {
        return Ok(finish(0, None));
    }
    for palette in 1..=cfg.palette_cap.min(n as u32) {
        let prefixes = rgs_prefixes(n, palette, PREFIX_LEN.min(n));
        let found = prefixes.par_iter().find_map_first(|prefix| {
            let mut colors = prefix.clone();
            let max = prefix.iter().copied().max().unwrap_or(0);
            match complete_rgs(&mut colors, n, palette, max, &examined, &check) {
                Ok(Some(c)) => Some(Ok(c)),
                Ok(None) => None,
                Err(e) => Some(Err(e)),
            }
        });
        if let Some(found) = found {
            let coloring = found?;
            if cfg.reconfirm {
                reconfirm(n, palette, &coloring, &public)?;
            }
            return Ok(finish(palette, Some(coloring)));
        }
    }
    Err(Error::PaletteExhausted(cfg.palette_cap.min(n as u32)))
}

/// All restricted-growth prefixes of length `len` that can still be completed
/// to use exactly `palette` colors on `n` vertices, in lexicographic order.
fn rgs_prefixes(n: usize, palette: u32, len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(prefix: &mut Vec<u32>, max: u32, n: usize, palette: u32, len: usize, out: &mut Vec<Vec<u32>>) {
        if (palette - max) as usize > n - prefix.len() {
            return;
        }
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for c in 1..=(max + 1).min(palette) {
            prefix.push(c);
            rec(prefix, max.max(c), n, palette, len, out);
            prefix.pop();
        }
    }
    rec(&mut Vec::with_capacity(n), 0, n, palette, len, &mut out);
    out
}

/// Completes `colors` in lexicographic order; returns the first passing coloring.
fn complete_rgs<C>(
    colors: &mut Vec<u32>,
    n: usize,
    palette: u32,
    max: u32,
    examined: &AtomicU64,
    check: &C,
) -> Result<Option<VertexColoring>>
where
    C: Fn(&VertexColoring) -> Result<bool>,
{
    if (palette - max) as usize > n - colors.len() {
        return Ok(None);
    }
    if colors.len() == n {
        examined.fetch_add(1, Ordering::Relaxed);
        let candidate = VertexColoring::new(colors.clone())?;
        return Ok(check(&candidate)?.then_some(candidate));
    }
    for c in 1..=(max + 1).min(palette) {
        colors.push(c);
        let found = complete_rgs(colors, n, palette, max.max(c), examined, check)?;
        colors.pop();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Second, sequential pass through the public verifiers.
fn reconfirm<P>(n: usize, palette: u32, optimum: &VertexColoring, public: &P) -> Result<()>
where
    P: Fn(&VertexColoring) -> Result<bool>,
{
    if !public(optimum)? {
        return Err(Error::Inconsistent(format!("optimal coloring {:?} fails re-verification", optimum.colors())));
    }
    let sink = AtomicU64::new(0);
    for smaller in 1..palette {
        let mut colors = Vec::with_capacity(n);
        if let Some(c) = complete_rgs(&mut colors, n, smaller, 0, &sink, public)? {
            return Err(Error::Inconsistent(format!(
                "coloring {:?} with {smaller} colors passes but the search reported {palette}",
                c.colors()
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn cfg() -> OracleConfig {
        OracleConfig { reconfirm: true, ..OracleConfig::default() }
    }

    #[test]
    fn rgs_prefix_counts_are_stirling_numbers() {
        // S(5,2) = 15, S(5,3) = 25
        assert_eq!(rgs_prefixes(5, 2, 5).len(), 15);
        assert_eq!(rgs_prefixes(5, 3, 5).len(), 25);
        assert_eq!(rgs_prefixes(3, 1, 3), vec![vec![1, 1, 1]]);
    }

    #[test]
    fn pvck_examples() {
        assert_eq!(brute_pvc_k(&complete(5), 3, &cfg()).unwrap().value, 1);
        let c6 = brute_pvc_k(&cycle(6), 2, &cfg()).unwrap();
        assert_eq!(c6.value, 2);
        assert_eq!(c6.optimal_coloring.unwrap().distinct_colors(), 2);
        assert_eq!(brute_pvc_k(&path(4), 1, &cfg()).unwrap().value, 2);
        let k4 = brute_pvc_k(&complete(4), 1, &cfg()).unwrap();
        assert_eq!((k4.value, k4.optimal_coloring), (0, None));
    }

    #[test]
    fn pvck_preconditions() {
        assert!(matches!(brute_pvc_k(&path(4), 2, &cfg()), Err(Error::InvalidK { k: 2, connectivity: 1 })));
        assert!(matches!(brute_pvc_k(&cycle(13), 2, &cfg()), Err(Error::CapExceeded { order: 13, cap: 12 })));
    }

    #[test]
    fn spvc_examples() {
        assert_eq!(brute_spvc(&cycle(5), &cfg()).unwrap().value, 1);
        let p4 = brute_spvc(&path(4), &cfg()).unwrap();
        assert_eq!(p4.value, 2);
        // lexicographically least passing restricted-growth string
        assert_eq!(p4.optimal_coloring.unwrap().colors(), &[1, 1, 2, 1]);
        let k2k4 = crate::products::direct(&complete(2), &complete(4)).graph;
        assert_eq!(brute_spvc(&k2k4, &cfg()).unwrap().value, 2);
    }
}
