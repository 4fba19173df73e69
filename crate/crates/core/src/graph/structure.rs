use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Structural facts used as theorem preconditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralPredicates {
    pub is_complete: bool,
    pub is_connected: bool,
    pub is_bipartite: bool,
    pub is_tree: bool,
    pub min_degree: usize,
    pub every_edge_in_triangle: bool,
    pub has_dist2_pair_with_unique_common_neighbor: bool,
}

/// BFS spanning tree with depths and parents.
#[derive(Clone, Debug)]
pub struct SpanningTree {
    pub tree: Graph,
    pub root: usize,
    pub depth: Vec<u32>,
    pub parent: Vec<Option<usize>>,
}

impl SpanningTree {
    /// The unique tree path from `a` to `b`.
    pub fn path(&self, a: usize, b: usize) -> Vec<usize> {
        let (mut x, mut y) = (a, b);
        let mut front = vec![];
        let mut back = vec![];
        while self.depth[x] > self.depth[y] {
            front.push(x);
            x = self.parent[x].unwrap();
        }
        while self.depth[y] > self.depth[x] {
            back.push(y);
            y = self.parent[y].unwrap();
        }
        while x != y {
            front.push(x);
            back.push(y);
            x = self.parent[x].unwrap();
            y = self.parent[y].unwrap();
        }
        front.push(x);
        front.extend(back.into_iter().rev());
        front
    }
}

impl Graph {
    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Side assignment (0/1) of a bipartition, if one exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let n = self.order();
        let mut side = vec![u8::MAX; n];
        for start in 0..n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if side[y] == u8::MAX {
                        side[y] = 1 - side[x];
                        queue.push_back(y);
                    } else if side[y] == side[x] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.order()
    }

    pub fn every_edge_in_triangle(&self) -> bool {
        self.edges().all(|(u, v)| self.neighbor_set(u).intersects(self.neighbor_set(v)))
    }

    /// Number of common neighbors, i.e. of `u`–`v` walks of length 2 through a third vertex.
    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.neighbor_set(u).intersection_len(self.neighbor_set(v))
    }

    /// First pair (lexicographic) at distance exactly 2 with exactly one common neighbor.
    pub fn dist2_pair_with_unique_common_neighbor(&self) -> Option<(usize, usize)> {
        let n = self.order();
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .find(|&(u, v)| !self.has_edge(u, v) && self.common_neighbor_count(u, v) == 1)
    }

    pub fn structural_predicates(&self) -> StructuralPredicates {
        StructuralPredicates {
            is_complete: self.is_complete(),
            is_connected: self.is_connected(),
            is_bipartite: self.is_bipartite(),
            is_tree: self.is_tree(),
            min_degree: self.min_degree(),
            every_edge_in_triangle: self.every_edge_in_triangle(),
            has_dist2_pair_with_unique_common_neighbor: self.dist2_pair_with_unique_common_neighbor().is_some(),
        }
    }

    /// BFS spanning tree rooted at `root`; neighbors are visited in index order.
    pub fn spanning_tree(&self, root: usize) -> Result<SpanningTree> {
        self.check_vertex(root)?;
        let n = self.order();
        let mut depth = vec![u32::MAX; n];
        let mut parent = vec![None; n];
        let mut tree = Graph::empty(n)?;
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for y in self.neighbors(x) {
                if depth[y] == u32::MAX {
                    depth[y] = depth[x] + 1;
                    parent[y] = Some(x);
                    tree.insert_edge(x, y);
                    queue.push_back(y);
                }
            }
        }
        if depth.contains(&u32::MAX) {
            return Err(Error::Disconnected);
        }
        Ok(SpanningTree { tree, root, depth, parent })
    }
}
