use crate::colorverify::{
    check_witness, find_k_disjoint_proper_paths, find_proper_geodesic, is_proper_vertex_k_connected,
    is_strong_proper_vertex_connected, SearchBudget, VertexColoring, Witness, WitnessMode,
};
use crate::error::{Error, Result};
use crate::graph::{Distance, Graph, SpanningTree};
use crate::graph6::emit_graph6;
use crate::parameter::Parameter;

use super::{Prediction, TheoremId, TheoremReport};

/// Paths proposed for one pair under one parameter, or `None` to defer to search.
pub(super) type Template<'a> = dyn Fn(Parameter, usize, usize) -> Option<Vec<Vec<usize>>> + 'a;

pub(super) fn no_template(_: Parameter, _: usize, _: usize) -> Option<Vec<Vec<usize>>> {
    None
}

/// A nontrivial connected factor, or the matching error.
pub(super) fn require_factor(g: &Graph, role: &str) -> Result<()> {
    if g.is_trivial() {
        return Err(Error::Precondition(format!("{role} factor must be nontrivial")));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Diameter of a connected graph as an integer.
pub(super) fn diam(g: &Graph) -> u32 {
    match g.diameter() {
        Distance::Finite(d) => d,
        Distance::Infinite => u32::MAX,
    }
}

pub(super) fn require_connectivity(g: &Graph, k: usize) -> Result<()> {
    let connectivity = g.vertex_connectivity();
    if k == 0 || k > connectivity {
        return Err(Error::InvalidK { k, connectivity });
    }
    Ok(())
}

/// Two colors by depth parity in a BFS spanning tree rooted at vertex 0. Tree
/// paths alternate colors, so every pair gets a vertex-proper path.
pub fn tree_parity_coloring(g: &Graph) -> Result<VertexColoring> {
    let tree = g.spanning_tree(0)?;
    VertexColoring::from_fn(g.order(), |v| if tree.depth[v] % 2 == 0 { 1 } else { 2 })
}

/// Tree paths as single-path witnesses for the coloring above.
pub(super) fn tree_path_template(
    tree: &SpanningTree,
) -> impl Fn(Parameter, usize, usize) -> Option<Vec<Vec<usize>>> + '_ {
    move |param, u, v| (param == Parameter::PVC).then(|| vec![tree.path(u, v)])
}

/// Spanning trees of both factors of a product on the index layout `g * |H| + h`.
/// Moves inside the product of the two trees flip the parity of
/// `depth(g) + depth(h)`, so coloring by that parity makes every such path proper.
pub(super) struct TreeProductFrame {
    left: SpanningTree,
    right: SpanningTree,
    right_order: usize,
}

impl TreeProductFrame {
    pub fn new(left: &Graph, right: &Graph) -> Result<Self> {
        Ok(TreeProductFrame {
            left: left.spanning_tree(0)?,
            right: right.spanning_tree(0)?,
            right_order: right.order(),
        })
    }

    fn at(&self, g: usize, h: usize) -> usize {
        g * self.right_order + h
    }

    pub fn coloring(&self) -> Result<VertexColoring> {
        let n = self.left.depth.len() * self.right_order;
        VertexColoring::from_fn(n, |v| {
            let (g, h) = (v / self.right_order, v % self.right_order);
            if (self.left.depth[g] + self.right.depth[h]).is_multiple_of(2) {
                1
            } else {
                2
            }
        })
    }

    /// Two internally disjoint paths inside the product of the two trees.
    pub fn two_paths(&self, u: usize, v: usize) -> Vec<Vec<usize>> {
        let (g, h) = (u / self.right_order, u % self.right_order);
        let (g2, h2) = (v / self.right_order, v % self.right_order);
        let row = |g: usize, hs: &[usize]| hs.iter().map(|&y| self.at(g, y)).collect::<Vec<_>>();
        let column = |gs: &[usize], h: usize| gs.iter().map(|&x| self.at(x, h)).collect::<Vec<_>>();
        if g == g2 {
            let along = self.right.path(h, h2);
            let side = tree_neighbor(&self.left, g);
            let mut detour = vec![u];
            detour.extend(row(side, &along));
            detour.push(v);
            vec![row(g, &along), detour]
        } else if h == h2 {
            let along = self.left.path(g, g2);
            let side = tree_neighbor(&self.right, h);
            let mut detour = vec![u];
            detour.extend(column(&along, side));
            detour.push(v);
            vec![column(&along, h), detour]
        } else {
            let (gs, hs) = (self.left.path(g, g2), self.right.path(h, h2));
            let mut first = row(g, &hs);
            first.extend(column(&gs[1..], h2));
            let mut second = column(&gs, h);
            second.extend(row(g2, &hs[1..]));
            vec![first, second]
        }
    }
}

fn tree_neighbor(tree: &SpanningTree, x: usize) -> usize {
    tree.tree.neighbors(x).next().expect("nontrivial factor")
}

/// A report under construction.
pub(super) struct Draft {
    id: TheoremId,
    inputs: Vec<String>,
    params: Vec<Parameter>,
    predicted: Prediction,
    coloring: Option<VertexColoring>,
    notes: Vec<String>,
    budget: SearchBudget,
}

impl Draft {
    pub fn new(id: TheoremId, inputs: &[&Graph], params: Vec<Parameter>, predicted: Prediction) -> Self {
        Draft {
            id,
            inputs: inputs.iter().map(|g| emit_graph6(g)).collect(),
            params,
            predicted,
            coloring: None,
            notes: Vec::new(),
            budget: SearchBudget::default(),
        }
    }

    pub fn coloring(mut self, coloring: VertexColoring) -> Self {
        self.coloring = Some(coloring);
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Verifies the coloring on `g` and gathers one witness per pair and parameter.
    pub fn finish(self, g: &Graph, template: &Template<'_>) -> Result<TheoremReport> {
        let mut report = TheoremReport {
            theorem_id: self.id,
            inputs: self.inputs,
            params: self.params,
            predicted: self.predicted,
            coloring: None,
            witnesses: Vec::new(),
            templated_witnesses: 0,
            searched_witnesses: 0,
            verified: false,
            notes: self.notes,
        };
        let Some(coloring) = self.coloring else {
            report.verified = report.predicted == Prediction::Exact(0) && g.is_complete();
            if report.predicted == Prediction::Unknown {
                report.notes.push("no closed form applies; no coloring constructed".into());
            }
            return Ok(report);
        };
        coloring.check_against(g)?;
        let used = coloring.distinct_colors() as u32;
        let mut ok = match report.predicted {
            Prediction::Exact(v) => used == v.max(1),
            Prediction::Interval { lo, hi } => (lo..=hi).contains(&used),
            Prediction::Unknown => true,
        };
        if !ok {
            report.notes.push(format!("coloring uses {used} colors, outside the prediction {}", report.predicted));
        }
        for &param in &report.params.clone() {
            let passes = match param {
                Parameter::Pvck(k) => is_proper_vertex_k_connected(g, &coloring, k, self.budget)?,
                Parameter::Spvc => is_strong_proper_vertex_connected(g, &coloring)?,
            };
            if !passes {
                report.notes.push(format!("coloring fails the {param} verifier"));
            }
            ok &= passes;
            ok &= collect_witnesses(g, &coloring, param, template, self.budget, &mut report)?;
        }
        report.verified = ok;
        report.coloring = Some(coloring);
        Ok(report)
    }
}

/// Appends one witness per unordered pair; false if some pair has none.
fn collect_witnesses(
    g: &Graph,
    c: &VertexColoring,
    param: Parameter,
    template: &Template<'_>,
    budget: SearchBudget,
    report: &mut TheoremReport,
) -> Result<bool> {
    let (mode, k) = match param {
        Parameter::Pvck(k) => (WitnessMode::KDisjoint, k),
        Parameter::Spvc => (WitnessMode::Geodesic, 1),
    };
    let n = g.order();
    let (mut fallbacks, mut missing) = (0usize, 0usize);
    for u in 0..n {
        for v in u + 1..n {
            if let Some(paths) = template(param, u, v) {
                let witness = Witness { pair: (u, v), mode, paths };
                let shaped = witness.paths.len() == k;
                match check_witness(g, c, &witness) {
                    Ok(()) if shaped => {
                        report.templated_witnesses += 1;
                        report.witnesses.push(witness);
                        continue;
                    }
                    Ok(()) => {
                        report.notes.push(format!("template for {param} at {:?} has the wrong path count", (u, v)))
                    }
                    Err(defect) => {
                        report.notes.push(format!("template for {param} at {:?} rejected: {defect}", (u, v)))
                    }
                }
                fallbacks += 1;
            }
            let found = match mode {
                WitnessMode::KDisjoint => find_k_disjoint_proper_paths(g, c, u, v, k, budget)?,
                WitnessMode::Geodesic => {
                    find_proper_geodesic(g, c, u, v)?.map(|path| Witness { pair: (u, v), mode, paths: vec![path] })
                }
            };
            match found {
                Some(witness) => {
                    report.searched_witnesses += 1;
                    report.witnesses.push(witness);
                }
                None => missing += 1,
            }
        }
    }
    if fallbacks > 0 {
        report.notes.push(format!("{fallbacks} template witnesses for {param} replaced by search"));
    }
    if missing > 0 {
        report.notes.push(format!("{missing} pairs have no witness for {param}"));
    }
    Ok(missing == 0)
}
