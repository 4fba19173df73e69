use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::Result;

/// Shortest-walk length, with an explicit variant for unreachable pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    /// Sum with `Infinite` absorbing.
    pub fn plus(self, other: Distance) -> Distance {
        match (self, other) {
            (Distance::Finite(a), Distance::Finite(b)) => Distance::Finite(a + b),
            _ => Distance::Infinite,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// Lengths of the shortest even and shortest odd walks between two vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParityDistance {
    pub even: Distance,
    pub odd: Distance,
}

impl ParityDistance {
    pub fn get(&self, parity: Parity) -> Distance {
        match parity {
            Parity::Even => self.even,
            Parity::Odd => self.odd,
        }
    }
}

impl Graph {
    /// BFS distances from `source` to every vertex.
    pub fn bfs(&self, source: usize) -> Vec<Distance> {
        self.bfs_levels(source)
            .into_iter()
            .map(|d| if d == u32::MAX { Distance::Infinite } else { Distance::Finite(d) })
            .collect()
    }

    /// BFS levels with `u32::MAX` for unreachable vertices.
    pub(crate) fn bfs_levels(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            for y in self.neighbors(x) {
                if dist[y] == u32::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<Distance> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs(u)[v])
    }

    /// All-pairs distances, row `u` is the BFS from `u`.
    pub fn distance_matrix(&self) -> Vec<Vec<Distance>> {
        (0..self.order()).map(|u| self.bfs(u)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_levels(0).iter().all(|&d| d != u32::MAX)
    }

    /// Maximum pairwise distance; `Infinite` for disconnected graphs.
    pub fn diameter(&self) -> Distance {
        let mut best = 0;
        for u in 0..self.order() {
            for d in self.bfs_levels(u) {
                if d == u32::MAX {
                    return Distance::Infinite;
                }
                best = best.max(d);
            }
        }
        Distance::Finite(best)
    }

    /// Breadth-first search over `(vertex, parity)` states from `source`.
    /// Entry `2 * v + p` holds the length of the shortest walk to `v` with parity `p`
    /// and the predecessor state on one such walk.
    fn parity_bfs(&self, source: usize) -> (Vec<u32>, Vec<usize>) {
        let states = 2 * self.order();
        let mut dist = vec![u32::MAX; states];
        let mut parent = vec![usize::MAX; states];
        let mut queue = VecDeque::new();
        dist[2 * source] = 0;
        queue.push_back(2 * source);
        while let Some(s) = queue.pop_front() {
            let (x, p) = (s / 2, s % 2);
            for y in self.neighbors(x) {
                let t = 2 * y + (1 - p);
                if dist[t] == u32::MAX {
                    dist[t] = dist[s] + 1;
                    parent[t] = s;
                    queue.push_back(t);
                }
            }
        }
        (dist, parent)
    }

    /// Shortest even and odd walk lengths from `u` to `v`. The empty walk makes
    /// the even distance from a vertex to itself zero.
    pub fn parity_distances(&self, u: usize, v: usize) -> Result<ParityDistance> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let (dist, _) = self.parity_bfs(u);
        let wrap = |d: u32| if d == u32::MAX { Distance::Infinite } else { Distance::Finite(d) };
        Ok(ParityDistance { even: wrap(dist[2 * v]), odd: wrap(dist[2 * v + 1]) })
    }

    /// Parity distances from `u` to every vertex.
    pub fn parity_distances_from(&self, u: usize) -> Vec<ParityDistance> {
        let (dist, _) = self.parity_bfs(u);
        let wrap = |d: u32| if d == u32::MAX { Distance::Infinite } else { Distance::Finite(d) };
        (0..self.order()).map(|v| ParityDistance { even: wrap(dist[2 * v]), odd: wrap(dist[2 * v + 1]) }).collect()
    }

    /// One shortest walk of the given parity from `u` to `v`, as a vertex sequence
    /// including both ends. Deterministic: BFS explores neighbors in index order.
    pub fn parity_walk(&self, u: usize, v: usize, parity: Parity) -> Result<Option<Vec<usize>>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let (dist, parent) = self.parity_bfs(u);
        let mut state = 2 * v + usize::from(parity == Parity::Odd);
        if dist[state] == u32::MAX {
            return Ok(None);
        }
        let mut walk = vec![v];
        while state != 2 * u {
            state = parent[state];
            walk.push(state / 2);
        }
        walk.reverse();
        Ok(Some(walk))
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn plain_distances() {
        assert_eq!(path(4).distance(0, 3).unwrap(), Distance::Finite(3));
        assert_eq!(complete(4).distance(1, 3).unwrap(), Distance::Finite(1));
        assert_eq!(cycle(5).distance(0, 2).unwrap(), Distance::Finite(2));
        assert!(path(4).distance(0, 4).is_err());
    }

    #[test]
    fn diameters() {
        assert_eq!(complete(5).diameter(), Distance::Finite(1));
        assert_eq!(path(4).diameter(), Distance::Finite(3));
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_edges.diameter(), Distance::Infinite);
        assert_eq!(Graph::empty(1).unwrap().diameter(), Distance::Finite(0));
    }

    /// Walk lengths by exhaustive enumeration of all walks up to `max_len`.
    fn brute_parity(g: &Graph, u: usize, v: usize, max_len: u32) -> (Option<u32>, Option<u32>) {
        let mut frontier = vec![u];
        let mut best = [None, None];
        for len in 0..=max_len {
            for &x in &frontier {
                if x == v && best[(len % 2) as usize].is_none() {
                    best[(len % 2) as usize] = Some(len);
                }
            }
            frontier = frontier.iter().flat_map(|&x| g.neighbors(x)).collect();
        }
        (best[0], best[1])
    }

    #[test]
    fn parity_distances_small_cases() {
        let k2 = complete(2);
        let pd = k2.parity_distances(0, 1).unwrap();
        assert_eq!((pd.even, pd.odd), (Distance::Infinite, Distance::Finite(1)));

        // K3 (u,u): walks of length <= 3 enumerated give even 0, odd 3.
        let k3 = complete(3);
        assert_eq!(brute_parity(&k3, 0, 0, 3), (Some(0), Some(3)));
        let pd = k3.parity_distances(0, 0).unwrap();
        assert_eq!((pd.even, pd.odd), (Distance::Finite(0), Distance::Finite(3)));

        let pd = path(3).parity_distances(0, 2).unwrap();
        assert_eq!((pd.even, pd.odd), (Distance::Finite(2), Distance::Infinite));
    }

    #[test]
    fn parity_walks_are_walks_of_the_right_length() {
        let g = cycle(5);
        for u in 0..5 {
            for v in 0..5 {
                let pd = g.parity_distances(u, v).unwrap();
                for parity in [Parity::Even, Parity::Odd] {
                    let walk = g.parity_walk(u, v, parity).unwrap().unwrap();
                    assert_eq!(walk.first(), Some(&u));
                    assert_eq!(walk.last(), Some(&v));
                    assert!(walk.windows(2).all(|w| g.has_edge(w[0], w[1])));
                    assert_eq!(Distance::Finite(walk.len() as u32 - 1), pd.get(parity));
                }
            }
        }
        assert_eq!(path(3).parity_walk(0, 2, Parity::Odd).unwrap(), None);
    }
}
