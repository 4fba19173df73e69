//! The join and the four standard graph products, with vertex provenance.
//!
//! Product vertex `(g, h)` is stored at index `g * |H| + h`. Join vertices keep
//! their left indices `0..|G|` and the right factor follows at `|G|..|G|+|H|`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Distance, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductKind {
    Join,
    Cartesian,
    Lexicographic,
    Strong,
    Direct,
}

impl ProductKind {
    pub const ALL: [ProductKind; 5] = [
        ProductKind::Join,
        ProductKind::Cartesian,
        ProductKind::Lexicographic,
        ProductKind::Strong,
        ProductKind::Direct,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Join => "join",
            ProductKind::Cartesian => "cartesian",
            ProductKind::Lexicographic => "lexicographic",
            ProductKind::Strong => "strong",
            ProductKind::Direct => "direct",
        }
    }

    /// Infix operator used in human-readable descriptions.
    pub fn symbol(self) -> &'static str {
        match self {
            ProductKind::Join => "∨",
            ProductKind::Cartesian => "□",
            ProductKind::Lexicographic => "∘",
            ProductKind::Strong => "⊠",
            ProductKind::Direct => "×",
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "join" => Ok(ProductKind::Join),
            "cartesian" | "box" => Ok(ProductKind::Cartesian),
            "lexicographic" | "lex" => Ok(ProductKind::Lexicographic),
            "strong" => Ok(ProductKind::Strong),
            "direct" | "tensor" => Ok(ProductKind::Direct),
            other => Err(Error::Precondition(format!("unknown product kind `{other}`"))),
        }
    }
}

/// Which factor a join vertex came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JoinSide {
    Left(usize),
    Right(usize),
}

#[derive(Clone, Debug)]
pub struct ProductGraph {
    pub graph: Graph,
    pub kind: ProductKind,
    pub left_order: usize,
    pub right_order: usize,
}

impl ProductGraph {
    /// Index of `(g, h)`; not meaningful for joins.
    #[inline]
    pub fn vertex(&self, g: usize, h: usize) -> usize {
        debug_assert!(self.kind != ProductKind::Join);
        g * self.right_order + h
    }

    #[inline]
    pub fn coords(&self, v: usize) -> (usize, usize) {
        debug_assert!(self.kind != ProductKind::Join);
        (v / self.right_order, v % self.right_order)
    }

    pub fn join_side(&self, v: usize) -> JoinSide {
        if v < self.left_order {
            JoinSide::Left(v)
        } else {
            JoinSide::Right(v - self.left_order)
        }
    }

    /// For strong products: true iff the edge moves in exactly one coordinate.
    pub fn is_cartesian_edge(&self, u: usize, v: usize) -> bool {
        if !self.graph.has_edge(u, v) || self.kind == ProductKind::Join {
            return false;
        }
        let ((g, h), (g2, h2)) = (self.coords(u), self.coords(v));
        g == g2 || h == h2
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}

fn product_by<F>(kind: ProductKind, left: &Graph, right: &Graph, adjacent: F) -> ProductGraph
where
    F: Fn(usize, usize, usize, usize) -> bool,
{
    let (n, m) = (left.order(), right.order());
    let mut graph = Graph::empty(n * m).expect("factors are nonempty");
    for u in 0..n * m {
        let (g, h) = (u / m, u % m);
        for v in u + 1..n * m {
            let (g2, h2) = (v / m, v % m);
            if adjacent(g, h, g2, h2) {
                graph.insert_edge(u, v);
            }
        }
    }
    let labels = (0..n * m).map(|v| format!("({},{})", v / m, v % m)).collect();
    ProductGraph { graph: graph.with_labels(labels).expect("label count"), kind, left_order: n, right_order: m }
}

/// G ∨ H: disjoint union plus every edge between the two sides.
pub fn join(left: &Graph, right: &Graph) -> ProductGraph {
    let (n, m) = (left.order(), right.order());
    let mut graph = Graph::empty(n + m).expect("factors are nonempty");
    for (u, v) in left.edges() {
        graph.insert_edge(u, v);
    }
    for (u, v) in right.edges() {
        graph.insert_edge(n + u, n + v);
    }
    for u in 0..n {
        for v in 0..m {
            graph.insert_edge(u, n + v);
        }
    }
    let labels = (0..n).map(|i| format!("L:{i}")).chain((0..m).map(|j| format!("R:{j}"))).collect();
    ProductGraph {
        graph: graph.with_labels(labels).expect("label count"),
        kind: ProductKind::Join,
        left_order: n,
        right_order: m,
    }
}

/// G □ H: move along a factor edge in exactly one coordinate.
pub fn cartesian(left: &Graph, right: &Graph) -> ProductGraph {
    product_by(ProductKind::Cartesian, left, right, |g, h, g2, h2| {
        (g == g2 && right.has_edge(h, h2)) || (h == h2 && left.has_edge(g, g2))
    })
}

/// G ∘ H: a G-edge in the first coordinate, or equal first coordinates and an H-edge.
pub fn lexicographic(left: &Graph, right: &Graph) -> ProductGraph {
    product_by(ProductKind::Lexicographic, left, right, |g, h, g2, h2| {
        left.has_edge(g, g2) || (g == g2 && right.has_edge(h, h2))
    })
}

/// G ⊠ H: Cartesian edges plus the diagonal edges of the direct product.
pub fn strong(left: &Graph, right: &Graph) -> ProductGraph {
    product_by(ProductKind::Strong, left, right, |g, h, g2, h2| {
        let eg = left.has_edge(g, g2);
        let eh = right.has_edge(h, h2);
        (eg && h == h2) || (g == g2 && eh) || (eg && eh)
    })
}

/// G × H: both coordinates move along factor edges.
pub fn direct(left: &Graph, right: &Graph) -> ProductGraph {
    product_by(ProductKind::Direct, left, right, |g, h, g2, h2| left.has_edge(g, g2) && right.has_edge(h, h2))
}

pub fn product(kind: ProductKind, left: &Graph, right: &Graph) -> ProductGraph {
    match kind {
        ProductKind::Join => join(left, right),
        ProductKind::Cartesian => cartesian(left, right),
        ProductKind::Lexicographic => lexicographic(left, right),
        ProductKind::Strong => strong(left, right),
        ProductKind::Direct => direct(left, right),
    }
}

/// Largest product order for which every vertex pair is compared.
pub const EXHAUSTIVE_PAIR_LIMIT: usize = 256;
/// Number of sampled pairs above [`EXHAUSTIVE_PAIR_LIMIT`].
pub const SAMPLED_PAIRS: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaMismatch {
    pub from: (usize, usize),
    pub to: (usize, usize),
    pub bfs: Distance,
    pub formula: Distance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceFormulaReport {
    pub kind: ProductKind,
    pub pairs_checked: usize,
    pub exhaustive: bool,
    pub counterexample: Option<FormulaMismatch>,
}

impl DistanceFormulaReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Product distance predicted from factor data alone.
struct FactorData {
    dist: Vec<Vec<Distance>>,
    even: Vec<Vec<Distance>>,
    odd: Vec<Vec<Distance>>,
    degree: Vec<usize>,
}

impl FactorData {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let parity: Vec<_> = (0..n).map(|u| g.parity_distances_from(u)).collect();
        FactorData {
            dist: g.distance_matrix(),
            even: parity.iter().map(|row| row.iter().map(|p| p.even).collect()).collect(),
            odd: parity.iter().map(|row| row.iter().map(|p| p.odd).collect()).collect(),
            degree: (0..n).map(|v| g.degree(v)).collect(),
        }
    }
}

fn formula_distance(
    kind: ProductKind,
    gd: &FactorData,
    hd: &FactorData,
    (g, h): (usize, usize),
    (g2, h2): (usize, usize),
) -> Distance {
    match kind {
        ProductKind::Cartesian => gd.dist[g][g2].plus(hd.dist[h][h2]),
        ProductKind::Lexicographic => {
            if g != g2 {
                gd.dist[g][g2]
            } else if gd.degree[g] == 0 {
                hd.dist[h][h2]
            } else {
                hd.dist[h][h2].min(Distance::Finite(2))
            }
        }
        ProductKind::Strong => gd.dist[g][g2].max(hd.dist[h][h2]),
        ProductKind::Direct => {
            // an isolated coordinate isolates the product vertex; padding by 2 needs a neighbor
            if gd.degree[g] == 0 || hd.degree[h] == 0 {
                return if (g, h) == (g2, h2) { Distance::Finite(0) } else { Distance::Infinite };
            }
            let even = gd.even[g][g2].max(hd.even[h][h2]);
            let odd = gd.odd[g][g2].max(hd.odd[h][h2]);
            even.min(odd)
        }
        ProductKind::Join => unreachable!("join has no coordinate distance formula"),
    }
}

/// Compares BFS distances in the product with the closed-form distance formula of
/// its kind. Every pair is checked up to 256 product vertices; above that,
/// 10,000 pairs are sampled with a generator seeded by `seed`.
pub fn verify_distance_formula(
    kind: ProductKind,
    left: &Graph,
    right: &Graph,
    seed: u64,
) -> Result<DistanceFormulaReport> {
    if kind == ProductKind::Join {
        return Err(Error::Precondition("the join has no coordinate distance formula".into()));
    }
    let p = product(kind, left, right);
    let (gd, hd) = (FactorData::new(left), FactorData::new(right));
    let total = p.graph.order();
    let mut report = DistanceFormulaReport {
        kind,
        pairs_checked: 0,
        exhaustive: total <= EXHAUSTIVE_PAIR_LIMIT,
        counterexample: None,
    };
    let mut check = |u: usize, bfs: &[Distance], v: usize| {
        let formula = formula_distance(kind, &gd, &hd, p.coords(u), p.coords(v));
        report.pairs_checked += 1;
        if bfs[v] != formula && report.counterexample.is_none() {
            report.counterexample = Some(FormulaMismatch { from: p.coords(u), to: p.coords(v), bfs: bfs[v], formula });
        }
    };
    if total <= EXHAUSTIVE_PAIR_LIMIT {
        for u in 0..total {
            let bfs = p.graph.bfs(u);
            (0..total).for_each(|v| check(u, &bfs, v));
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..SAMPLED_PAIRS {
            let (u, v) = (rng.gen_range(0..total), rng.gen_range(0..total));
            let bfs = p.graph.bfs(u);
            check(u, &bfs, v);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn isomorphic_small(a: &Graph, b: &Graph) -> bool {
        crate::oracle::canonical_form(a) == crate::oracle::canonical_form(b)
    }

    #[test]
    fn join_examples() {
        let e2 = Graph::empty(2).unwrap();
        let e3 = Graph::empty(3).unwrap();
        let k23 = join(&e2, &e3).graph;
        assert_eq!(k23.edge_count(), 6);
        assert!(k23.edges().all(|(u, v)| u < 2 && v >= 2));
        assert!(join(&Graph::empty(1).unwrap(), &Graph::empty(1).unwrap()).graph.same_edges(&complete(2)));
        assert!(isomorphic_small(&join(&e2, &e2).graph, &cycle(4)));
        assert_eq!(join(&e2, &e3).graph.label(3), Some("R:1"));
    }

    #[test]
    fn cartesian_examples() {
        let k2 = complete(2);
        assert!(isomorphic_small(&cartesian(&k2, &k2).graph, &cycle(4)));
        let ladder = cartesian(&k2, &path(3)).graph;
        let grid = Graph::from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(ladder.same_edges(&grid));
        let (g, h) = (cycle(5), path(4));
        assert_eq!(cartesian(&g, &h).graph.edge_count(), g.edge_count() * 4 + h.edge_count() * 5);
    }

    #[test]
    fn lexicographic_examples() {
        let k2 = complete(2);
        assert!(isomorphic_small(&lexicographic(&k2, &Graph::empty(2).unwrap()).graph, &cycle(4)));
        assert!(lexicographic(&k2, &k2).graph.is_complete());
        assert!(lexicographic(&path(3), &Graph::empty(1).unwrap()).graph.same_edges(&path(3)));
    }

    #[test]
    fn strong_examples() {
        let k2 = complete(2);
        assert!(strong(&k2, &k2).graph.is_complete());
        let (g, h) = (cycle(5), path(3));
        assert_eq!(
            strong(&g, &h).graph.edge_count(),
            cartesian(&g, &h).graph.edge_count() + 2 * g.edge_count() * h.edge_count()
        );
        assert!(strong(&path(3), &Graph::empty(1).unwrap()).graph.same_edges(&path(3)));
        let s = strong(&k2, &k2);
        assert!(s.is_cartesian_edge(0, 1));
        assert!(!s.is_cartesian_edge(0, 3));
    }

    #[test]
    fn direct_examples() {
        let k2k2 = direct(&complete(2), &complete(2)).graph;
        assert_eq!(k2k2.edge_count(), 2);
        assert!(!k2k2.is_connected());

        // K2 × K3 by adjacency enumeration: 6 vertices of degree 2, connected, bipartite.
        let d = direct(&complete(2), &complete(3)).graph;
        assert!((0..6).all(|v| d.degree(v) == 2));
        assert!(d.is_connected() && d.is_bipartite());
        assert!(isomorphic_small(&d, &cycle(6)));

        let k33 = direct(&complete(3), &complete(3)).graph;
        assert_eq!(k33.order(), 9);
        assert!((0..9).all(|v| k33.degree(v) == 4));
    }

    #[test]
    fn distance_formula_examples() {
        let r = verify_distance_formula(ProductKind::Cartesian, &path(3), &path(4), 0).unwrap();
        assert!(r.passed() && r.exhaustive);
        assert_eq!(r.pairs_checked, 144);
        assert!(verify_distance_formula(ProductKind::Direct, &complete(3), &complete(3), 0).unwrap().passed());
        assert!(verify_distance_formula(ProductKind::Lexicographic, &complete(2), &path(4), 0).unwrap().passed());
        // same first coordinate, far apart in P4: capped at 2
        let lex = lexicographic(&complete(2), &path(4));
        assert_eq!(lex.graph.distance(lex.vertex(0, 0), lex.vertex(0, 3)).unwrap(), Distance::Finite(2));
        assert!(verify_distance_formula(ProductKind::Join, &path(2), &path(2), 0).is_err());
    }

    #[test]
    fn distance_formula_on_disconnected_factors() {
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        for kind in [ProductKind::Cartesian, ProductKind::Lexicographic, ProductKind::Strong, ProductKind::Direct] {
            let r = verify_distance_formula(kind, &two_edges, &path(3), 0).unwrap();
            assert!(r.passed(), "{kind} {:?}", r.counterexample);
            let r = verify_distance_formula(kind, &Graph::empty(2).unwrap(), &path(3), 0).unwrap();
            assert!(r.passed(), "{kind} {:?}", r.counterexample);
        }
    }

    #[test]
    fn sampled_pairs_above_limit() {
        let r = verify_distance_formula(ProductKind::Strong, &cycle(17), &cycle(16), 7).unwrap();
        assert!(!r.exhaustive);
        assert_eq!(r.pairs_checked, SAMPLED_PAIRS);
        assert!(r.passed());
    }
}
