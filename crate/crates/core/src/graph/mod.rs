//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! Adjacency is a bitset per vertex. A [`Graph`] is immutable once built;
//! every query here is a pure function of the graph.

mod chromatic;
mod connectivity;
mod distance;
mod structure;

pub use chromatic::{Chromatic, DEFAULT_CHROMATIC_CAP};
pub use connectivity::BRUTE_CUT_LIMIT;
pub use distance::{Distance, Parity, ParityDistance};
pub use structure::{SpanningTree, StructuralPredicates};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BitSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n >= 1` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(Graph { adj: vec![BitSet::new(n); n], labels: None })
    }

    /// Builds a graph from an edge list. Repeated edges collapse; loops are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Attaches per-vertex labels. The label count must match the order.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order() {
            return Err(Error::DimensionMismatch { expected: self.order(), got: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Neighborhood of `v` as a bitset.
    #[inline]
    pub fn neighbor_set(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, order: self.order() })
        }
    }

    /// Nontrivial means at least two vertices.
    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        (0..n).all(|v| self.degree(v) == n - 1)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Subgraph induced by deleting the vertices in `removed`; surviving vertices are
    /// renumbered in increasing order. Returns `None` if nothing survives.
    pub fn without_vertices(&self, removed: &BitSet) -> Option<Graph> {
        let keep: Vec<usize> = (0..self.order()).filter(|&v| !removed.contains(v)).collect();
        if keep.is_empty() {
            return None;
        }
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(keep.len()).ok()?;
        for (u, v) in self.edges() {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                g.insert_edge(index[u], index[v]);
            }
        }
        Some(g)
    }

    /// Same edge set as `other` (labels ignored).
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.adj == other.adj
    }

    /// True iff every edge of `self` is an edge of `other` on the same vertex set.
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.order() == other.order() && self.edges().all(|(u, v)| other.has_edge(u, v))
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.order() {
            return Err(Error::DimensionMismatch { expected: self.order(), got: perm.len() });
        }
        let mut g = Graph::empty(self.order())?;
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        Ok(g)
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }
}
