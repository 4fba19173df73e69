//! Structural invariants, checked on generated graphs.

use proptest::prelude::*;
use proptest::sample::Index;

use pvclab::colorverify::{
    exists_proper_geodesic, exists_proper_path, is_proper_vertex_k_connected, is_strong_proper_vertex_connected,
};
use pvclab::graph6::{emit_graph6, parse_graph6};
use pvclab::oracle::{brute_pvc_k, brute_spvc, enumerate_connected, exhaustive, OracleConfig};
use pvclab::products::{cartesian, direct, lexicographic, product, strong};
use pvclab::suite::{run_suite, SuiteOptions};
use pvclab::theorems::{evaluate_product, Prediction};
use pvclab::{Distance, Graph, Parameter, ProductKind, SearchBudget, VertexColoring};

fn from_bits(n: usize, tree: &[Index], bits: &[bool]) -> Graph {
    let mut edges: Vec<(usize, usize)> = tree.iter().enumerate().map(|(i, ix)| (ix.index(i + 1), i + 1)).collect();
    let mut b = bits.iter();
    for v in 1..n {
        for u in 0..v {
            if *b.next().unwrap_or(&false) {
                edges.push((u, v));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, edges).unwrap()
}

/// Any simple graph on `lo..=hi` vertices.
fn any_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(prop::bool::weighted(0.4), n * (n - 1) / 2)
            .prop_map(move |bits| from_bits(n, &[], &bits))
    })
}

/// A connected graph: a random spanning tree plus random extra edges.
fn connected_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        (
            proptest::collection::vec(any::<Index>(), n - 1),
            proptest::collection::vec(prop::bool::weighted(0.3), n * (n - 1) / 2),
        )
            .prop_map(move |(tree, bits)| from_bits(n, &tree, &bits))
    })
}

fn coloring_for(n: usize) -> impl Strategy<Value = VertexColoring> {
    (1u32..=3).prop_flat_map(move |palette| {
        proptest::collection::vec(1..=palette, n).prop_map(|colors| VertexColoring::new(colors).unwrap())
    })
}

fn graph_and_coloring(lo: usize, hi: usize) -> impl Strategy<Value = (Graph, VertexColoring)> {
    connected_graph(lo, hi).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), coloring_for(n))
    })
}

fn swap_index(left: usize, right: usize, v: usize) -> usize {
    // (g, h) of left × right to (h, g) of right × left
    (v % right) * left + v / right
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn graph6_round_trip(g in any_graph(1, 40)) {
        let text = emit_graph6(&g);
        let back = parse_graph6(&text).unwrap();
        prop_assert!(back.same_edges(&g));
        prop_assert_eq!(emit_graph6(&back), text);
    }

    #[test]
    fn parity_distances_refine_distance(g in connected_graph(2, 9)) {
        let bipartite = g.is_bipartite();
        for u in 0..g.order() {
            let bfs = g.bfs(u);
            let parity = g.parity_distances_from(u);
            for v in 0..g.order() {
                prop_assert_eq!(parity[v].even.min(parity[v].odd), bfs[v]);
                if v != u {
                    prop_assert_eq!(parity[v].even.is_finite() != parity[v].odd.is_finite(), bipartite);
                }
            }
        }
    }

    #[test]
    fn connectivity_bounds(g in connected_graph(2, 8)) {
        let kappa = g.vertex_connectivity();
        prop_assert_eq!(kappa, g.vertex_connectivity_by_cuts());
        if g.is_complete() {
            prop_assert_eq!(kappa, g.order() - 1);
        } else {
            prop_assert!(kappa <= g.min_degree());
        }
    }

    #[test]
    fn chromatic_coloring_is_proper_and_tight(g in any_graph(1, 9)) {
        let chi = g.chromatic_number().unwrap();
        prop_assert!(g.edges().all(|(u, v)| chi.colors[u] != chi.colors[v]));
        let mut used = chi.colors.clone();
        used.sort_unstable();
        used.dedup();
        prop_assert_eq!(used.len() as u32, chi.number);
    }

    #[test]
    fn spanning_tree_shape(g in connected_graph(1, 12)) {
        let t = g.spanning_tree(0).unwrap();
        prop_assert_eq!(t.tree.edge_count(), g.order() - 1);
        prop_assert!(t.tree.is_connected());
        prop_assert!(t.tree.is_spanning_subgraph_of(&g));
    }

    #[test]
    fn products_commute_under_coordinate_swap(g in any_graph(1, 5), h in any_graph(1, 5)) {
        let (n, m) = (g.order(), h.order());
        for kind in [ProductKind::Cartesian, ProductKind::Strong, ProductKind::Direct] {
            let (gh, hg) = (product(kind, &g, &h).graph, product(kind, &h, &g).graph);
            for (u, v) in gh.edges() {
                prop_assert!(hg.has_edge(swap_index(n, m, u), swap_index(n, m, v)), "{kind}");
            }
            prop_assert_eq!(gh.edge_count(), hg.edge_count());
        }
    }

    #[test]
    fn products_nest(g in any_graph(1, 5), h in any_graph(1, 5)) {
        let (c, s, l) = (cartesian(&g, &h).graph, strong(&g, &h).graph, lexicographic(&g, &h).graph);
        prop_assert!(c.is_spanning_subgraph_of(&s));
        prop_assert!(s.is_spanning_subgraph_of(&l));
    }

    #[test]
    fn direct_product_connectivity(g in connected_graph(2, 6), h in connected_graph(2, 6)) {
        let p = direct(&g, &h).graph;
        prop_assert_eq!(p.is_connected(), !(g.is_bipartite() && h.is_bipartite()));
        prop_assert!(!matches!(p.diameter(), Distance::Finite(0 | 1)));
    }

    #[test]
    fn direct_product_diameter_two(g in connected_graph(2, 5), h in connected_graph(2, 5)) {
        prop_assume!(!(g.is_bipartite() && h.is_bipartite()));
        let small = |x: &Graph| matches!(x.diameter(), Distance::Finite(d) if d <= 2);
        let expected = small(&g) && small(&h) && g.every_edge_in_triangle() && h.every_edge_in_triangle();
        prop_assert_eq!(direct(&g, &h).graph.diameter() == Distance::Finite(2), expected);
    }

    #[test]
    fn verifiers_match_enumeration((g, c) in graph_and_coloring(2, 7)) {
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                prop_assert_eq!(exists_proper_path(&g, &c, u, v).unwrap(), exhaustive::proper_path_exists(&g, &c, u, v));
                prop_assert_eq!(
                    exists_proper_geodesic(&g, &c, u, v).unwrap(),
                    exhaustive::proper_geodesic_exists(&g, &c, u, v)
                );
            }
        }
    }

    #[test]
    fn k_connectivity_is_monotone((g, c) in graph_and_coloring(2, 7)) {
        let budget = SearchBudget::default();
        let verdicts: Vec<bool> = (1..=g.vertex_connectivity())
            .map(|k| is_proper_vertex_k_connected(&g, &c, k, budget).unwrap())
            .collect();
        // once false, false for every larger k
        prop_assert!(verdicts.windows(2).all(|w| w[0] || !w[1]), "{:?}", verdicts);
        if is_strong_proper_vertex_connected(&g, &c).unwrap() {
            prop_assert!(verdicts[0]);
        }
    }

    #[test]
    fn oracle_certificates_verify(g in connected_graph(2, 7)) {
        let cfg = OracleConfig::default();
        let pvc = brute_pvc_k(&g, 1, &cfg).unwrap();
        let spvc = brute_spvc(&g, &cfg).unwrap();
        prop_assert!(pvc.value <= 2);
        prop_assert!(pvc.value <= spvc.value);
        prop_assert!(spvc.value <= g.chromatic_number().unwrap().number);
        if let Some(c) = &spvc.optimal_coloring {
            prop_assert!(is_strong_proper_vertex_connected(&g, c).unwrap());
            prop_assert_eq!(c.distinct_colors() as u32, spvc.value);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 60, ..ProptestConfig::default() })]

    /// Point predictions come with a coloring of exactly that many colors that
    /// passes the verifiers.
    #[test]
    fn point_predictions_are_realized(
        g in connected_graph(2, 4),
        h in connected_graph(2, 4),
        kind in prop::sample::select(ProductKind::ALL.to_vec()),
        param in prop::sample::select(vec![Parameter::PVC, Parameter::PVC2, Parameter::Spvc]),
    ) {
        let cfg = OracleConfig::default();
        let Ok(report) = evaluate_product(kind, &g, &h, param, &cfg) else { return Ok(()) };
        prop_assert!(report.verified, "{kind} {param}: {:?}", report.notes);
        if let Prediction::Exact(v) = report.predicted {
            let used = report.coloring.as_ref().map_or(0, |c| c.distinct_colors() as u32);
            prop_assert_eq!(used, v, "{} {}", kind, param);
        }
    }
}

/// A χ-optimal proper coloring makes G proper vertex k-connected for every
/// k up to κ(G).
#[test]
fn proper_colorings_reach_full_connectivity() {
    for n in 2..=6 {
        for g in enumerate_connected(n, true).unwrap() {
            let c = VertexColoring::new(g.chromatic_number().unwrap().colors).unwrap();
            for k in 1..=g.vertex_connectivity() {
                assert!(
                    is_proper_vertex_k_connected(&g, &c, k, SearchBudget::default()).unwrap(),
                    "{} k={k}",
                    emit_graph6(&g)
                );
            }
        }
    }
}

#[test]
fn suite_reports_are_deterministic() {
    let opts = SuiteOptions {
        only: Some(vec!["verifier-cross-validation".into(), "graph6-round-trip".into()]),
        max_n: 5,
        ..SuiteOptions::default()
    };
    let (a, b) = (run_suite(&opts).unwrap(), run_suite(&opts).unwrap());
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert!(a.totals.checks > 0 && a.all_passed());
}
