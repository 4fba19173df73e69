//! Decision procedures for colored graphs: vertex-proper paths and geodesics,
//! k internally disjoint vertex-proper paths, and witness validation.
//!
//! Only consecutive *internal* vertices of a path are constrained; endpoint
//! colors never matter.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Distance, Graph};

/// Assignment of colors `1..=palette_size` to the vertices of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct VertexColoring {
    colors: Vec<u32>,
}

impl VertexColoring {
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if colors.is_empty() {
            return Err(Error::EmptyGraph);
        }
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::InvalidColor(v));
        }
        Ok(VertexColoring { colors })
    }

    pub fn monochromatic(n: usize) -> Self {
        VertexColoring { colors: vec![1; n.max(1)] }
    }

    /// Builds a coloring from `f(v)` for every vertex.
    pub fn from_fn(n: usize, f: impl FnMut(usize) -> u32) -> Result<Self> {
        Self::new((0..n).map(f).collect())
    }

    #[inline]
    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Largest color in use.
    pub fn palette_size(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Number of distinct colors in use.
    pub fn distinct_colors(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Renumbers colors to `1..=distinct` in order of first appearance.
    pub fn normalized(&self) -> Self {
        let mut map: Vec<(u32, u32)> = Vec::new();
        let colors = self
            .colors
            .iter()
            .map(|&c| match map.iter().find(|(from, _)| *from == c) {
                Some(&(_, to)) => to,
                None => {
                    let to = map.len() as u32 + 1;
                    map.push((c, to));
                    to
                }
            })
            .collect();
        VertexColoring { colors }
    }

    pub fn check_against(&self, g: &Graph) -> Result<()> {
        if self.len() != g.order() {
            return Err(Error::DimensionMismatch { expected: g.order(), got: self.len() });
        }
        Ok(())
    }
}

impl TryFrom<Vec<u32>> for VertexColoring {
    type Error = Error;

    fn try_from(colors: Vec<u32>) -> Result<Self> {
        Self::new(colors)
    }
}

impl From<VertexColoring> for Vec<u32> {
    fn from(c: VertexColoring) -> Self {
        c.colors
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessMode {
    KDisjoint,
    Geodesic,
}

/// Paths certifying one connection requirement between a vertex pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub pair: (usize, usize),
    pub mode: WitnessMode,
    pub paths: Vec<Vec<usize>>,
}

/// Why a witness was rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessDefect {
    NoPaths,
    DimensionMismatch,
    SameEndpoints,
    WrongEndpoints,
    NotAnEdge,
    NotSimple,
    NotProper,
    NotDisjoint,
    NotGeodesic,
}

impl fmt::Display for WitnessDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            WitnessDefect::NoPaths => "no_paths",
            WitnessDefect::DimensionMismatch => "dimension_mismatch",
            WitnessDefect::SameEndpoints => "same_endpoints",
            WitnessDefect::WrongEndpoints => "wrong_endpoints",
            WitnessDefect::NotAnEdge => "not_an_edge",
            WitnessDefect::NotSimple => "not_simple",
            WitnessDefect::NotProper => "not_proper",
            WitnessDefect::NotDisjoint => "not_disjoint",
            WitnessDefect::NotGeodesic => "not_geodesic",
        };
        f.write_str(s)
    }
}

/// Node budget for the exact k-disjoint path search, per vertex pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
}

impl SearchBudget {
    pub const DEFAULT_NODES: u64 = 50_000_000;

    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget { max_nodes }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: Self::DEFAULT_NODES }
    }
}

fn check_pair(g: &Graph, u: usize, v: usize) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameEndpoints(u));
    }
    Ok(())
}

fn simple_path_defect(g: &Graph, path: &[usize]) -> Option<WitnessDefect> {
    if path.len() < 2 {
        return Some(WitnessDefect::NoPaths);
    }
    if path.iter().any(|&x| x >= g.order()) {
        return Some(WitnessDefect::NotAnEdge);
    }
    if path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
        return Some(WitnessDefect::NotAnEdge);
    }
    let mut seen = BitSet::new(g.order());
    for &x in path {
        if seen.contains(x) {
            return Some(WitnessDefect::NotSimple);
        }
        seen.insert(x);
    }
    None
}

/// Properness of an already validated path: consecutive internal vertices differ.
fn internal_pairs_proper(c: &VertexColoring, path: &[usize]) -> bool {
    let internal = &path[1..path.len() - 1];
    internal.windows(2).all(|w| c.color(w[0]) != c.color(w[1]))
}

/// True iff the simple path `path` is vertex-proper under `c`. Paths with at most
/// one internal vertex are vacuously proper.
pub fn is_vertex_proper_path(g: &Graph, c: &VertexColoring, path: &[usize]) -> Result<bool> {
    c.check_against(g)?;
    if let Some(defect) = simple_path_defect(g, path) {
        return Err(Error::NotAPath(format!("{path:?}: {defect}")));
    }
    Ok(internal_pairs_proper(c, path))
}

/// BFS for a vertex-proper `u`–`v` path whose internal vertices avoid `blocked`,
/// optionally requiring the first internal vertex to exceed `min_first`. The
/// direct edge `uv` is not considered. Returns the BFS-tree path, which is simple
/// and proper by construction.
fn proper_path_avoiding(
    g: &Graph,
    c: &VertexColoring,
    u: usize,
    v: usize,
    blocked: Option<&BitSet>,
    min_first: Option<usize>,
) -> Option<Vec<usize>> {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    let allowed = |x: usize| x != u && x != v && !blocked.is_some_and(|b| b.contains(x));
    for w in g.neighbors(u) {
        if allowed(w) && min_first.is_none_or(|m| w > m) {
            parent[w] = u;
            queue.push_back(w);
        }
    }
    while let Some(w) = queue.pop_front() {
        if g.has_edge(w, v) {
            let mut path = vec![v, w];
            let mut x = w;
            while parent[x] != u {
                x = parent[x];
                path.push(x);
            }
            path.push(u);
            path.reverse();
            return Some(path);
        }
        for z in g.neighbors(w) {
            if parent[z] == usize::MAX && allowed(z) && c.color(z) != c.color(w) {
                parent[z] = w;
                queue.push_back(z);
            }
        }
    }
    None
}

/// One shortest vertex-proper `u`–`v` path, if any.
pub fn find_proper_path(g: &Graph, c: &VertexColoring, u: usize, v: usize) -> Result<Option<Vec<usize>>> {
    check_pair(g, u, v)?;
    c.check_against(g)?;
    if g.has_edge(u, v) {
        return Ok(Some(vec![u, v]));
    }
    Ok(proper_path_avoiding(g, c, u, v, None, None))
}

/// Decides whether some vertex-proper `u`–`v` path exists.
///
/// A shortest vertex-proper walk is a path: splicing out the closed sub-walk
/// at a repeated vertex keeps every constraint, since each constraint involves
/// only two consecutive internal vertices. So reachability over vertex states
/// decides the question exactly.
pub fn exists_proper_path(g: &Graph, c: &VertexColoring, u: usize, v: usize) -> Result<bool> {
    Ok(find_proper_path(g, c, u, v)?.is_some())
}

/// Breadth-first geodesic DAG from one source.
#[derive(Clone, Debug)]
struct GeodesicDag {
    level: Vec<u32>,
    /// Vertices other than the source, in BFS order.
    order: Vec<usize>,
    preds: Vec<Vec<usize>>,
}

impl GeodesicDag {
    fn new(g: &Graph, source: usize) -> Self {
        let level = g.bfs_levels(source);
        let mut order: Vec<usize> = (0..g.order()).filter(|&w| w != source && level[w] != u32::MAX).collect();
        order.sort_by_key(|&w| (level[w], w));
        let preds = (0..g.order())
            .map(|w| {
                if level[w] == u32::MAX || w == source {
                    Vec::new()
                } else {
                    g.neighbors(w).filter(|&p| level[p] + 1 == level[w]).collect()
                }
            })
            .collect();
        GeodesicDag { level, order, preds }
    }

    /// `via[w]` is the predecessor that makes `w` reachable as an internal vertex
    /// of a vertex-proper geodesic prefix (`usize::MAX` when unreachable).
    fn feasible(&self, c: &VertexColoring, source: usize) -> Vec<usize> {
        let mut via = vec![usize::MAX; self.level.len()];
        for &w in &self.order {
            if self.level[w] == 1 {
                via[w] = source;
                continue;
            }
            if let Some(&p) = self.preds[w].iter().find(|&&p| via[p] != usize::MAX && c.color(p) != c.color(w)) {
                via[w] = p;
            }
        }
        via
    }

    /// Whether `v` ends some vertex-proper geodesic, given `via` from [`Self::feasible`].
    fn reaches(&self, via: &[usize], v: usize) -> bool {
        self.level[v] == 1 || self.preds[v].iter().any(|&p| via[p] != usize::MAX)
    }
}

/// One vertex-proper `u`–`v` geodesic, if any. Errors on disconnected pairs.
pub fn find_proper_geodesic(g: &Graph, c: &VertexColoring, u: usize, v: usize) -> Result<Option<Vec<usize>>> {
    check_pair(g, u, v)?;
    c.check_against(g)?;
    let dag = GeodesicDag::new(g, u);
    if dag.level[v] == u32::MAX {
        return Err(Error::DisconnectedPair(u, v));
    }
    if dag.level[v] == 1 {
        return Ok(Some(vec![u, v]));
    }
    let via = dag.feasible(c, u);
    let Some(&last) = dag.preds[v].iter().find(|&&p| via[p] != usize::MAX) else {
        return Ok(None);
    };
    let mut path = vec![v, last];
    let mut x = last;
    while x != u {
        x = via[x];
        path.push(x);
    }
    path.reverse();
    Ok(Some(path))
}

/// Exact decision of whether a vertex-proper `u`–`v` geodesic exists, by dynamic
/// programming over the shortest-path DAG rooted at `u`.
pub fn exists_proper_geodesic(g: &Graph, c: &VertexColoring, u: usize, v: usize) -> Result<bool> {
    Ok(find_proper_geodesic(g, c, u, v)?.is_some())
}

/// Searches for `k` internally disjoint vertex-proper `u`–`v` paths.
///
/// The direct edge, when present, is always taken: any solution can swap one of
/// its paths for it. The remaining paths are ordered by their first internal
/// vertex, candidates are tried shortest first (lexicographic within a length),
/// and the last path is found by the polynomial reachability search. The search
/// is exact; if it visits more than `budget.max_nodes` nodes it returns
/// [`Error::BudgetExceeded`] instead of a verdict.
pub fn find_k_disjoint_proper_paths(
    g: &Graph,
    c: &VertexColoring,
    u: usize,
    v: usize,
    k: usize,
    budget: SearchBudget,
) -> Result<Option<Witness>> {
    check_pair(g, u, v)?;
    c.check_against(g)?;
    if k == 0 {
        return Err(Error::InvalidK { k, connectivity: g.vertex_connectivity() });
    }
    let witness = |paths| Witness { pair: (u, v), mode: WitnessMode::KDisjoint, paths };
    if k == 1 {
        return Ok(find_proper_path(g, c, u, v)?.map(|p| witness(vec![p])));
    }
    let mut search = DisjointSearch::new(g, c, u, v, budget);
    let mut remaining = k;
    if g.has_edge(u, v) {
        search.paths.push(vec![u, v]);
        remaining -= 1;
    }
    if g.disjoint_paths(u, v, None, k) < k {
        return Ok(None);
    }
    let blocked = BitSet::new(g.order());
    if remaining == 0 || search.solve(remaining, &blocked, None)? {
        let mut paths = search.paths;
        paths.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        return Ok(Some(witness(paths)));
    }
    Ok(None)
}

struct DisjointSearch<'a> {
    g: &'a Graph,
    c: &'a VertexColoring,
    u: usize,
    v: usize,
    to_target: Vec<u32>,
    nodes: u64,
    budget: SearchBudget,
    paths: Vec<Vec<usize>>,
}

impl<'a> DisjointSearch<'a> {
    fn new(g: &'a Graph, c: &'a VertexColoring, u: usize, v: usize, budget: SearchBudget) -> Self {
        DisjointSearch { g, c, u, v, to_target: g.bfs_levels(v), nodes: 0, budget, paths: Vec::new() }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(Error::BudgetExceeded(self.budget.max_nodes));
        }
        Ok(())
    }

    fn eligible_first(&self, blocked: &BitSet, min_first: Option<usize>) -> impl Iterator<Item = usize> + '_ {
        let blocked = blocked.clone();
        self.g
            .neighbors(self.u)
            .filter(move |&w| w != self.v && !blocked.contains(w) && min_first.is_none_or(|m| w > m))
    }

    /// Finds `remaining` more paths, each with first internal vertex above `min_first`.
    fn solve(&mut self, remaining: usize, blocked: &BitSet, min_first: Option<usize>) -> Result<bool> {
        self.tick()?;
        if remaining == 1 {
            return Ok(match proper_path_avoiding(self.g, self.c, self.u, self.v, Some(blocked), min_first) {
                Some(p) => {
                    self.paths.push(p);
                    true
                }
                None => false,
            });
        }
        if self.eligible_first(blocked, min_first).count() < remaining {
            return Ok(false);
        }
        let last_ok = self.g.neighbors(self.v).filter(|&w| w != self.u && !blocked.contains(w)).count();
        if last_ok < remaining {
            return Ok(false);
        }
        let direct = usize::from(self.g.has_edge(self.u, self.v));
        if self.g.disjoint_paths(self.u, self.v, Some(blocked), remaining + direct) < remaining + direct {
            return Ok(false);
        }
        let firsts: Vec<usize> = self.eligible_first(blocked, min_first).collect();
        let max_len = self.g.order() - 1;
        for len in 2..=max_len {
            for &w in &firsts {
                if self.to_target[w] == u32::MAX || self.to_target[w] as usize + 1 > len {
                    continue;
                }
                let mut path = vec![self.u, w];
                let mut on_path = blocked.clone();
                on_path.insert(w);
                if self.extend(&mut path, &mut on_path, len, remaining, blocked, w)? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// Depth-first extension of `path` to exactly `len` edges ending at `v`; on each
    /// completion, recurses for the other paths.
    fn extend(
        &mut self,
        path: &mut Vec<usize>,
        on_path: &mut BitSet,
        len: usize,
        remaining: usize,
        blocked: &BitSet,
        first: usize,
    ) -> Result<bool> {
        self.tick()?;
        let cur = *path.last().unwrap();
        let edges = path.len() - 1;
        if edges + 1 == len {
            if !self.g.has_edge(cur, self.v) {
                return Ok(false);
            }
            let mut next_blocked = blocked.clone();
            path[1..].iter().for_each(|&x| next_blocked.insert(x));
            let mark = self.paths.len();
            if self.solve(remaining - 1, &next_blocked, Some(first))? {
                let mut done = path.clone();
                done.push(self.v);
                self.paths.push(done);
                return Ok(true);
            }
            self.paths.truncate(mark);
            return Ok(false);
        }
        let candidates: Vec<usize> = self.g.neighbors(cur).collect();
        for z in candidates {
            if z == self.u || z == self.v || on_path.contains(z) || self.c.color(z) == self.c.color(cur) {
                continue;
            }
            let rest = self.to_target[z];
            if rest == u32::MAX || edges + 1 + rest as usize > len {
                continue;
            }
            path.push(z);
            on_path.insert(z);
            let found = self.extend(path, on_path, len, remaining, blocked, first)?;
            path.pop();
            on_path.remove(z);
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Unordered vertex pairs, farthest first (ties lexicographic).
pub(crate) fn pairs_hardest_first(g: &Graph) -> Vec<(usize, usize)> {
    let dist = g.distance_matrix();
    let n = g.order();
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.sort_by_key(|&(u, v)| (std::cmp::Reverse(dist[u][v]), u, v));
    pairs
}

/// First pair (hardest first) lacking `k` disjoint vertex-proper paths, without
/// checking `k` against κ(G).
pub(crate) fn first_pvck_failure_unchecked(
    g: &Graph,
    c: &VertexColoring,
    k: usize,
    pairs: &[(usize, usize)],
    budget: SearchBudget,
) -> Result<Option<(usize, usize)>> {
    if k == 1 {
        return Ok(first_pvc1_failure(g, c, pairs));
    }
    for &(u, v) in pairs {
        if find_k_disjoint_proper_paths(g, c, u, v, k, budget)?.is_none() {
            return Ok(Some((u, v)));
        }
    }
    Ok(None)
}

/// k = 1 for all pairs at once: one vertex-state search per source.
fn first_pvc1_failure(g: &Graph, c: &VertexColoring, pairs: &[(usize, usize)]) -> Option<(usize, usize)> {
    let n = g.order();
    let mut reach: Vec<Option<BitSet>> = vec![None; n];
    for &(u, v) in pairs {
        let r = reach[u].get_or_insert_with(|| proper_reach(g, c, u));
        // a proper walk through v can be cut at its first visit to v
        if !g.has_edge(u, v) && !g.neighbor_set(v).intersects(r) {
            return Some((u, v));
        }
    }
    None
}

/// Vertices reachable from `u` as the last internal vertex of a proper walk.
fn proper_reach(g: &Graph, c: &VertexColoring, u: usize) -> BitSet {
    let mut seen = BitSet::new(g.order());
    let mut queue = VecDeque::new();
    for w in g.neighbors(u) {
        seen.insert(w);
        queue.push_back(w);
    }
    while let Some(w) = queue.pop_front() {
        for z in g.neighbors(w) {
            if z != u && !seen.contains(z) && c.color(z) != c.color(w) {
                seen.insert(z);
                queue.push_back(z);
            }
        }
    }
    seen
}

fn check_k(g: &Graph, k: usize) -> Result<()> {
    let kappa = g.vertex_connectivity();
    if k == 0 || k > kappa {
        return Err(Error::InvalidK { k, connectivity: kappa });
    }
    Ok(())
}

/// First vertex pair (farthest first) not joined by `k` disjoint vertex-proper
/// paths; `None` when `c` makes `g` proper vertex k-connected.
pub fn first_pvck_failure(
    g: &Graph,
    c: &VertexColoring,
    k: usize,
    budget: SearchBudget,
) -> Result<Option<(usize, usize)>> {
    c.check_against(g)?;
    check_k(g, k)?;
    first_pvck_failure_unchecked(g, c, k, &pairs_hardest_first(g), budget)
}

/// Whether `c` makes `g` proper vertex k-connected. Requires `1 <= k <= κ(g)`.
pub fn is_proper_vertex_k_connected(g: &Graph, c: &VertexColoring, k: usize, budget: SearchBudget) -> Result<bool> {
    Ok(first_pvck_failure(g, c, k, budget)?.is_none())
}

/// Reusable per-graph data for checking many colorings for strong proper
/// vertex-connectivity.
#[derive(Clone, Debug)]
pub struct GeodesicIndex {
    dags: Vec<GeodesicDag>,
    sources: Vec<usize>,
}

impl GeodesicIndex {
    pub fn new(g: &Graph) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let dags: Vec<GeodesicDag> = (0..g.order()).map(|u| GeodesicDag::new(g, u)).collect();
        let mut sources: Vec<usize> = (0..g.order()).collect();
        let ecc = |u: usize| dags[u].level.iter().copied().max().unwrap_or(0);
        sources.sort_by_key(|&u| (std::cmp::Reverse(ecc(u)), u));
        Ok(GeodesicIndex { dags, sources })
    }

    /// First pair without a vertex-proper geodesic, sources of largest eccentricity first.
    pub fn first_failure(&self, c: &VertexColoring) -> Option<(usize, usize)> {
        for &u in &self.sources {
            let dag = &self.dags[u];
            // pairs at distance <= 2 have at most one internal vertex
            if dag.order.last().is_none_or(|&w| dag.level[w] <= 2) {
                continue;
            }
            let via = dag.feasible(c, u);
            for &v in dag.order.iter().rev() {
                if dag.level[v] <= 2 {
                    break;
                }
                if !dag.reaches(&via, v) {
                    return Some((u.min(v), u.max(v)));
                }
            }
        }
        None
    }
}

/// First pair lacking a vertex-proper geodesic; `None` when `c` makes `g` strong
/// proper vertex-connected.
pub fn first_spvc_failure(g: &Graph, c: &VertexColoring) -> Result<Option<(usize, usize)>> {
    c.check_against(g)?;
    Ok(GeodesicIndex::new(g)?.first_failure(c))
}

pub fn is_strong_proper_vertex_connected(g: &Graph, c: &VertexColoring) -> Result<bool> {
    Ok(first_spvc_failure(g, c)?.is_none())
}

/// Validates a witness: shape, simplicity, edges, properness, and disjointness or
/// geodesic length depending on its mode.
pub fn check_witness(g: &Graph, c: &VertexColoring, w: &Witness) -> std::result::Result<(), WitnessDefect> {
    if c.len() != g.order() {
        return Err(WitnessDefect::DimensionMismatch);
    }
    let (u, v) = w.pair;
    if u >= g.order() || v >= g.order() {
        return Err(WitnessDefect::WrongEndpoints);
    }
    if u == v {
        return Err(WitnessDefect::SameEndpoints);
    }
    if w.paths.is_empty() || (w.mode == WitnessMode::Geodesic && w.paths.len() != 1) {
        return Err(WitnessDefect::NoPaths);
    }
    for path in &w.paths {
        if path.first() != Some(&u) || path.last() != Some(&v) {
            return Err(WitnessDefect::WrongEndpoints);
        }
        if let Some(defect) = simple_path_defect(g, path) {
            return Err(defect);
        }
        if !internal_pairs_proper(c, path) {
            return Err(WitnessDefect::NotProper);
        }
    }
    match w.mode {
        WitnessMode::KDisjoint => {
            let mut used = BitSet::new(g.order());
            let mut direct = false;
            for path in &w.paths {
                if path.len() == 2 {
                    if direct {
                        return Err(WitnessDefect::NotDisjoint);
                    }
                    direct = true;
                }
                for &x in &path[1..path.len() - 1] {
                    if used.contains(x) {
                        return Err(WitnessDefect::NotDisjoint);
                    }
                    used.insert(x);
                }
            }
        }
        WitnessMode::Geodesic => {
            if g.bfs(u)[v] != Distance::Finite(w.paths[0].len() as u32 - 1) {
                return Err(WitnessDefect::NotGeodesic);
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn colors(c: &[u32]) -> VertexColoring {
        VertexColoring::new(c.to_vec()).unwrap()
    }

    fn alternating(n: usize) -> VertexColoring {
        VertexColoring::from_fn(n, |v| 1 + (v % 2) as u32).unwrap()
    }

    #[test]
    fn coloring_validation() {
        assert_eq!(VertexColoring::new(vec![1, 0]), Err(Error::InvalidColor(1)));
        assert_eq!(colors(&[3, 3, 7]).normalized(), colors(&[1, 1, 2]));
        assert_eq!(colors(&[2, 5]).palette_size(), 5);
        let json = serde_json::to_string(&colors(&[1, 2])).unwrap();
        assert_eq!(json, "[1,2]");
        assert!(serde_json::from_str::<VertexColoring>("[0]").is_err());
    }

    #[test]
    fn proper_path_examples() {
        let p4 = path(4);
        assert!(!is_vertex_proper_path(&p4, &VertexColoring::monochromatic(4), &[0, 1, 2, 3]).unwrap());
        assert!(is_vertex_proper_path(&p4, &colors(&[1, 1, 2, 1]), &[0, 1, 2, 3]).unwrap());
        assert!(is_vertex_proper_path(&p4, &VertexColoring::monochromatic(4), &[1, 2]).unwrap());
        assert!(is_vertex_proper_path(&p4, &VertexColoring::monochromatic(4), &[0, 2]).is_err());
        assert!(is_vertex_proper_path(&cycle(4), &VertexColoring::monochromatic(4), &[0, 1, 2, 3, 0]).is_err());
    }

    #[test]
    fn existence_examples() {
        let p4 = path(4);
        let mono = VertexColoring::monochromatic(4);
        assert!(!exists_proper_path(&p4, &mono, 0, 3).unwrap());
        assert!(exists_proper_path(&p4, &mono, 0, 2).unwrap());
        let c6 = cycle(6);
        for u in 0..6 {
            for v in u + 1..6 {
                assert!(exists_proper_path(&c6, &alternating(6), u, v).unwrap());
            }
        }
        assert!(exists_proper_path(&complete(5), &colors(&[1, 1, 1, 2, 2]), 0, 4).unwrap());
        assert_eq!(exists_proper_path(&p4, &mono, 1, 1), Err(Error::SameEndpoints(1)));
    }

    #[test]
    fn geodesic_examples() {
        let p4 = path(4);
        assert!(exists_proper_geodesic(&p4, &colors(&[1, 1, 2, 1]), 0, 3).unwrap());
        assert!(!exists_proper_geodesic(&p4, &VertexColoring::monochromatic(4), 0, 3).unwrap());
        assert!(exists_proper_geodesic(&cycle(4), &VertexColoring::monochromatic(4), 0, 2).unwrap());
        let split = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(
            exists_proper_geodesic(&split, &VertexColoring::monochromatic(3), 0, 2),
            Err(Error::DisconnectedPair(0, 2))
        );
    }

    #[test]
    fn geodesic_dp_needs_more_than_one_predecessor() {
        // 0 - {1,2} - 3 - 4 ; only the branch through 2 alternates colors with 3
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        let c = colors(&[1, 1, 2, 1, 1]);
        let p = find_proper_geodesic(&g, &c, 0, 4).unwrap().unwrap();
        assert_eq!(p, vec![0, 2, 3, 4]);
    }

    #[test]
    fn k_disjoint_examples() {
        let c6 = cycle(6);
        let budget = SearchBudget::default();
        let w = find_k_disjoint_proper_paths(&c6, &alternating(6), 0, 3, 2, budget).unwrap().unwrap();
        assert_eq!(w.paths, vec![vec![0, 1, 2, 3], vec![0, 5, 4, 3]]);
        assert_eq!(check_witness(&c6, &alternating(6), &w), Ok(()));
        assert!(find_k_disjoint_proper_paths(&c6, &VertexColoring::monochromatic(6), 0, 3, 2, budget)
            .unwrap()
            .is_none());

        let k4 = complete(4);
        let mono = VertexColoring::monochromatic(4);
        let w = find_k_disjoint_proper_paths(&k4, &mono, 0, 1, 3, budget).unwrap().unwrap();
        assert_eq!(w.paths, vec![vec![0, 1], vec![0, 2, 1], vec![0, 3, 1]]);
    }

    #[test]
    fn k_connectivity_examples() {
        let budget = SearchBudget::default();
        assert!(is_proper_vertex_k_connected(&cycle(6), &alternating(6), 2, budget).unwrap());
        assert!(!is_proper_vertex_k_connected(&cycle(6), &VertexColoring::monochromatic(6), 2, budget).unwrap());
        assert!(is_proper_vertex_k_connected(&complete(4), &VertexColoring::monochromatic(4), 3, budget).unwrap());
        assert!(matches!(
            is_proper_vertex_k_connected(&cycle(6), &alternating(6), 3, budget),
            Err(Error::InvalidK { k: 3, connectivity: 2 })
        ));
        assert_eq!(first_pvck_failure(&cycle(6), &VertexColoring::monochromatic(6), 2, budget).unwrap(), Some((0, 3)));
    }

    #[test]
    fn strong_examples() {
        assert!(is_strong_proper_vertex_connected(&path(4), &colors(&[1, 1, 2, 1])).unwrap());
        assert!(!is_strong_proper_vertex_connected(&path(4), &VertexColoring::monochromatic(4)).unwrap());
        assert!(is_strong_proper_vertex_connected(&complete(5), &VertexColoring::monochromatic(5)).unwrap());
        let split = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(
            is_strong_proper_vertex_connected(&split, &VertexColoring::monochromatic(3)),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let g = cycle(8);
        let r = find_k_disjoint_proper_paths(&g, &VertexColoring::monochromatic(8), 0, 4, 2, SearchBudget::nodes(1));
        assert_eq!(r, Err(Error::BudgetExceeded(1)));
    }

    #[test]
    fn witness_defects() {
        let c6 = cycle(6);
        let alt = alternating(6);
        let shared = Witness { pair: (0, 2), mode: WitnessMode::KDisjoint, paths: vec![vec![0, 1, 2], vec![0, 1, 2]] };
        assert_eq!(check_witness(&c6, &alt, &shared), Err(WitnessDefect::NotDisjoint));
        let long = Witness { pair: (0, 2), mode: WitnessMode::Geodesic, paths: vec![vec![0, 5, 4, 3, 2]] };
        assert_eq!(check_witness(&c6, &alt, &long), Err(WitnessDefect::NotGeodesic));
        let gap = Witness { pair: (0, 2), mode: WitnessMode::Geodesic, paths: vec![vec![0, 2]] };
        assert_eq!(check_witness(&c6, &alt, &gap), Err(WitnessDefect::NotAnEdge));
        let mono = Witness { pair: (0, 3), mode: WitnessMode::KDisjoint, paths: vec![vec![0, 1, 2, 3]] };
        assert_eq!(check_witness(&c6, &VertexColoring::monochromatic(6), &mono), Err(WitnessDefect::NotProper));
    }
}
