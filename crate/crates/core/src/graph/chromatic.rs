use super::Graph;
use crate::error::{Error, Result};

/// Default order limit for the exact chromatic number.
pub const DEFAULT_CHROMATIC_CAP: usize = 32;

/// χ(G) together with one optimal proper coloring (colors `1..=number`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chromatic {
    pub number: u32,
    pub colors: Vec<u32>,
}

impl Graph {
    /// Exact chromatic number by DSATUR branch and bound.
    pub fn chromatic_number(&self) -> Result<Chromatic> {
        self.chromatic_number_capped(DEFAULT_CHROMATIC_CAP)
    }

    pub fn chromatic_number_capped(&self, cap: usize) -> Result<Chromatic> {
        let n = self.order();
        if n > cap {
            return Err(Error::CapExceeded { order: n, cap });
        }
        let mut best = self.dsatur_greedy();
        let lower = self.greedy_clique_size();
        let mut search =
            Search { graph: self, colors: vec![0; n], best_count: best.iter().copied().max().unwrap_or(1), best: None };
        if search.best_count as usize > lower {
            search.branch(0, 0);
            if let Some(better) = search.best.take() {
                best = better;
            }
        }
        let number = best.iter().copied().max().unwrap_or(1);
        Ok(Chromatic { number, colors: best })
    }

    fn saturation(&self, colors: &[u32], v: usize) -> usize {
        let mut seen = 0u128;
        let mut extra = Vec::new();
        for w in self.neighbors(v) {
            let c = colors[w];
            if c == 0 {
                continue;
            }
            if c < 128 {
                seen |= 1 << c;
            } else if !extra.contains(&c) {
                extra.push(c);
            }
        }
        seen.count_ones() as usize + extra.len()
    }

    /// Uncolored vertex of maximum saturation, ties by degree then index.
    fn dsatur_pick(&self, colors: &[u32]) -> Option<usize> {
        (0..self.order())
            .filter(|&v| colors[v] == 0)
            .max_by_key(|&v| (self.saturation(colors, v), self.degree(v), std::cmp::Reverse(v)))
    }

    fn dsatur_greedy(&self) -> Vec<u32> {
        let mut colors = vec![0; self.order()];
        while let Some(v) = self.dsatur_pick(&colors) {
            colors[v] = (1..).find(|&c| self.neighbors(v).all(|w| colors[w] != c)).unwrap();
        }
        colors
    }

    fn greedy_clique_size(&self) -> usize {
        let mut best = 1;
        for start in 0..self.order() {
            let mut clique = vec![start];
            let mut candidates: Vec<usize> = self.neighbors(start).collect();
            candidates.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
            for v in candidates {
                if clique.iter().all(|&c| self.has_edge(c, v)) {
                    clique.push(v);
                }
            }
            best = best.max(clique.len());
        }
        best
    }
}

struct Search<'g> {
    graph: &'g Graph,
    colors: Vec<u32>,
    best_count: u32,
    best: Option<Vec<u32>>,
}

impl Search<'_> {
    fn branch(&mut self, colored: usize, used: u32) {
        if used >= self.best_count {
            return;
        }
        if colored == self.graph.order() {
            self.best_count = used;
            self.best = Some(self.colors.clone());
            return;
        }
        let v = self.graph.dsatur_pick(&self.colors).expect("uncolored vertex remains");
        for c in 1..=(used + 1).min(self.best_count - 1) {
            if self.graph.neighbors(v).any(|w| self.colors[w] == c) {
                continue;
            }
            self.colors[v] = c;
            self.branch(colored + 1, used.max(c));
            self.colors[v] = 0;
            if used.max(c) >= self.best_count {
                // every later color is at least as expensive
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    fn assert_proper(g: &Graph, chi: &Chromatic) {
        assert!(g.edges().all(|(u, v)| chi.colors[u] != chi.colors[v]));
        assert_eq!(chi.colors.iter().copied().max(), Some(chi.number));
        assert!(chi.colors.iter().all(|&c| c >= 1));
    }

    #[test]
    fn standard_chromatic_numbers() {
        for (g, expected) in [(cycle(5), 3), (path(4), 2), (complete(6), 6), (cycle(6), 2)] {
            let chi = g.chromatic_number().unwrap();
            assert_eq!(chi.number, expected);
            assert_proper(&g, &chi);
        }
        assert_eq!(Graph::empty(3).unwrap().chromatic_number().unwrap().number, 1);
    }

    #[test]
    fn greedy_is_not_trusted_blindly() {
        // Crown graph on 8 vertices: bipartite, yet first-fit orderings can need 4 colors.
        let g = Graph::from_edges(8, (0..4).flat_map(|i| (0..4).filter(move |&j| j != i).map(move |j| (i, 4 + j))))
            .unwrap();
        let chi = g.chromatic_number().unwrap();
        assert_eq!(chi.number, 2);
        assert_proper(&g, &chi);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(path(5).chromatic_number_capped(4), Err(Error::CapExceeded { order: 5, cap: 4 }));
    }
}
