//! Small-graph enumeration and brute-force canonical forms.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by the enumerators.
pub const MAX_ENUMERATION_ORDER: usize = 7;
/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL_ORDER: usize = 11;

/// Bit position of pair `(q, p)`, `q < p`, in upper-triangle column-major order.
#[inline]
fn pair_index(q: usize, p: usize) -> usize {
    p * (p - 1) / 2 + q
}

/// Minimum adjacency code over all relabelings that list vertices by
/// nondecreasing degree. The degree constraint is invariant under isomorphism,
/// so two graphs are isomorphic iff their forms are equal.
///
/// The code packs the upper triangle in column-major order with the first pair
/// as the most significant bit, so the minimum is also lexicographically least.
pub fn canonical_form(g: &Graph) -> Result<(usize, u64)> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::CapExceeded { order: n, cap: MAX_CANONICAL_ORDER });
    }
    let total = n * (n - 1) / 2;
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| g.degree(v));
    let slot_degree: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();
    let mut state = Canon { g, n, total, slot_degree, placed: vec![0; n], used: vec![false; n], best: u64::MAX };
    state.place(0, 0);
    Ok((n, state.best))
}

struct Canon<'a> {
    g: &'a Graph,
    n: usize,
    total: usize,
    slot_degree: Vec<usize>,
    placed: Vec<usize>,
    used: Vec<bool>,
    best: u64,
}

impl Canon<'_> {
    fn place(&mut self, pos: usize, code: u64) {
        if pos == self.n {
            self.best = self.best.min(code);
            return;
        }
        for v in 0..self.n {
            if self.used[v] || self.g.degree(v) != self.slot_degree[pos] {
                continue;
            }
            let mut next = code;
            for q in 0..pos {
                if self.g.has_edge(self.placed[q], v) {
                    next |= 1 << (self.total - 1 - pair_index(q, pos));
                }
            }
            // bits of all columns up to `pos` are final
            let decided = if pos == 0 { 0 } else { pair_index(pos - 1, pos) + 1 };
            let shift = self.total - decided;
            if decided > 0 && self.best != u64::MAX && (next >> shift) > (self.best >> shift) {
                continue;
            }
            self.used[v] = true;
            self.placed[pos] = v;
            self.place(pos + 1, next);
            self.used[v] = false;
        }
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::CapExceeded { order: n, cap: MAX_ENUMERATION_ORDER });
    }
    Ok(())
}

/// Every graph on vertex set `0..n` (labeled), in order of the edge bitmask.
fn labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|p| (0..p).map(move |q| (q, p))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e))
            .expect("valid pairs")
    })
}

/// One representative per isomorphism class, built by adding a vertex to each
/// class on `n - 1` vertices. Deleting a non-cut vertex (a leaf of a spanning
/// tree) keeps a graph connected, so extending connected classes reaches every
/// connected class.
fn classes(n: usize, connected: bool) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1).unwrap()];
    for order in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for base in &level {
            let m = base.order();
            let first = if connected { 1 } else { 0 };
            for subset in first..1u64 << m {
                let edges = base.edges().chain((0..m).filter(|&v| subset >> v & 1 == 1).map(|v| (v, m)));
                let g = Graph::from_edges(order, edges).expect("valid edges");
                if seen.insert(canonical_form(&g).expect("order within cap")) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    level
}

/// Connected graphs on `n <= 7` vertices, either every labeled graph or one per
/// isomorphism class.
pub fn enumerate_connected(n: usize, up_to_isomorphism: bool) -> Result<Box<dyn Iterator<Item = Graph>>> {
    check_order(n)?;
    if up_to_isomorphism {
        Ok(Box::new(classes(n, true).into_iter()))
    } else {
        Ok(Box::new(labeled(n).filter(Graph::is_connected)))
    }
}

/// All graphs (connected or not) on `n <= 7` vertices.
pub fn enumerate_graphs(n: usize, up_to_isomorphism: bool) -> Result<Box<dyn Iterator<Item = Graph>>> {
    check_order(n)?;
    if up_to_isomorphism {
        Ok(Box::new(classes(n, false).into_iter()))
    } else {
        Ok(Box::new(labeled(n)))
    }
}
