use std::collections::VecDeque;

use super::Graph;
use crate::bitset::BitSet;
use crate::error::Result;

/// Largest order for which vertex connectivity is computed by exhaustive cut search.
pub const BRUTE_CUT_LIMIT: usize = 12;

impl Graph {
    /// Vertex connectivity κ(G): `n - 1` for complete graphs, 0 when disconnected,
    /// otherwise the size of a minimum vertex cut.
    pub fn vertex_connectivity(&self) -> usize {
        if self.order() <= BRUTE_CUT_LIMIT {
            self.vertex_connectivity_by_cuts()
        } else {
            self.vertex_connectivity_by_flow()
        }
    }

    /// κ(G) by enumerating vertex subsets in order of size.
    pub fn vertex_connectivity_by_cuts(&self) -> usize {
        let n = self.order();
        if self.is_complete() {
            return n - 1;
        }
        assert!(n < 64, "exhaustive cut search needs n < 64");
        let mut masks: Vec<u64> = (0..1u64 << n).collect();
        masks.sort_by_key(|m| m.count_ones());
        for mask in masks {
            let size = mask.count_ones() as usize;
            if size + 2 > n {
                break;
            }
            let mut removed = BitSet::new(n);
            (0..n).filter(|&v| mask >> v & 1 == 1).for_each(|v| removed.insert(v));
            if let Some(rest) = self.without_vertices(&removed) {
                if !rest.is_connected() {
                    return size;
                }
            }
        }
        n - 1
    }

    /// κ(G) as the minimum local connectivity over nonadjacent pairs, restricted to
    /// the pairs Even's argument requires.
    pub fn vertex_connectivity_by_flow(&self) -> usize {
        let n = self.order();
        if self.is_complete() {
            return n - 1;
        }
        if !self.is_connected() {
            return 0;
        }
        let mut best = self.min_degree();
        let mut i = 0;
        while i <= best && i < n {
            for j in i + 1..n {
                if !self.has_edge(i, j) {
                    best = best.min(self.disjoint_paths(i, j, None, best));
                }
            }
            i += 1;
        }
        best
    }

    /// Maximum number of internally disjoint `u`–`v` paths (the edge `uv`, when
    /// present, counts as one path).
    pub fn local_connectivity(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(crate::Error::SameEndpoints(u));
        }
        Ok(self.disjoint_paths(u, v, None, usize::MAX))
    }

    /// Unit-capacity max flow on the split-vertex network. Vertices in `blocked`
    /// may not be used as internal vertices. Stops early once `limit` paths exist.
    pub(crate) fn disjoint_paths(&self, u: usize, v: usize, blocked: Option<&BitSet>, limit: usize) -> usize {
        let n = self.order();
        let nodes = 2 * n;
        let idx = |a: usize, b: usize| a * nodes + b;
        // in(x) = 2x, out(x) = 2x + 1; source out(u), sink in(v).
        let mut cap = vec![0i32; nodes * nodes];
        for x in 0..n {
            if x != u && x != v && !blocked.is_some_and(|b| b.contains(x)) {
                cap[idx(2 * x, 2 * x + 1)] = 1;
            }
        }
        for (a, b) in self.edges() {
            cap[idx(2 * a + 1, 2 * b)] = 1;
            cap[idx(2 * b + 1, 2 * a)] = 1;
        }
        let (source, sink) = (2 * u + 1, 2 * v);
        let mut flow = 0;
        let mut parent = vec![usize::MAX; nodes];
        while flow < limit {
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            parent[source] = source;
            let mut queue = VecDeque::from([source]);
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    break;
                }
                for y in self.residual_candidates(x) {
                    if parent[y] == usize::MAX && cap[idx(x, y)] > 0 {
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if parent[sink] == usize::MAX {
                break;
            }
            let mut y = sink;
            while y != source {
                let x = parent[y];
                cap[idx(x, y)] -= 1;
                cap[idx(y, x)] += 1;
                y = x;
            }
            flow += 1;
        }
        flow
    }

    /// Nodes that can share an arc (in either direction) with split node `x`.
    fn residual_candidates(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        let vertex = x / 2;
        let twin = x ^ 1;
        let across = self.neighbors(vertex).map(move |y| if x % 2 == 1 { 2 * y } else { 2 * y + 1 });
        std::iter::once(twin).chain(across)
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn connectivity_of_standard_graphs() {
        assert_eq!(complete(4).vertex_connectivity(), 3);
        assert_eq!(cycle(6).vertex_connectivity(), 2);
        assert_eq!(path(4).vertex_connectivity(), 1);
        assert_eq!(Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap().vertex_connectivity(), 0);
        assert_eq!(Graph::empty(1).unwrap().vertex_connectivity(), 0);
    }

    #[test]
    fn flow_and_cut_routes_agree() {
        let petersen = Graph::from_edges(
            10,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        for g in [petersen, cycle(7), path(5), complete(6)] {
            assert_eq!(g.vertex_connectivity_by_cuts(), g.vertex_connectivity_by_flow());
        }
        assert_eq!(complete(5).local_connectivity(0, 1).unwrap(), 4);
    }
}
