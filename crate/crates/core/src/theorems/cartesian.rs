use crate::colorverify::VertexColoring;
use crate::error::Result;
use crate::graph::Graph;
use crate::parameter::Parameter;
use crate::products::{cartesian, ProductGraph};

use super::support::{
    no_template, require_connectivity, require_factor, tree_parity_coloring, tree_path_template, Draft,
    TreeProductFrame,
};
use super::{FactorSpvc, Prediction, TheoremId, TheoremReport};

/// pvc(G □ H): 1 when both factors are complete (diameter 2), otherwise 2.
pub fn cartesian_pvc(g: &Graph, h: &Graph) -> Result<TheoremReport> {
    require_factor(g, "left")?;
    require_factor(h, "right")?;
    let p = cartesian(g, h).into_graph();
    let draft = Draft::new(TheoremId::CartesianPvc, &[g, h], vec![Parameter::PVC], Prediction::Exact(1));
    if g.is_complete() && h.is_complete() {
        return draft.coloring(VertexColoring::monochromatic(p.order())).finish(&p, &no_template);
    }
    let tree = p.spanning_tree(0)?;
    let template = tree_path_template(&tree);
    Draft::new(TheoremId::CartesianPvc, &[g, h], vec![Parameter::PVC], Prediction::Exact(2))
        .coloring(tree_parity_coloring(&p)?)
        .finish(&p, &template)
}

/// pvc₂(G □ H).
///
/// Two complete factors of order at least 3: one color, every pair joined by
/// two paths of length at most 2. K2 with a complete graph: 2, with the
/// K2 coordinate as the color (K2 □ K2 = C4 takes its proper 2-coloring).
/// Every other pair: 2, by depth parity in the product of spanning trees,
/// which carries two disjoint alternating paths between any pair.
pub fn cartesian_pvc2(g: &Graph, h: &Graph) -> Result<TheoremReport> {
    require_factor(g, "left")?;
    require_factor(h, "right")?;
    let product = cartesian(g, h);
    require_connectivity(&product.graph, 2)?;
    let id = TheoremId::CartesianPvc2;
    let params = vec![Parameter::PVC2];
    let both_complete = g.is_complete() && h.is_complete();
    if both_complete && g.order() >= 3 && h.order() >= 3 {
        let template = |_: Parameter, u, v| Some(complete_factor_paths(&product, u, v));
        return Draft::new(id, &[g, h], params, Prediction::Exact(1))
            .coloring(VertexColoring::monochromatic(product.graph.order()))
            .finish(&product.graph, &template);
    }
    if both_complete {
        // one factor is K2; K2 □ K2 is C4 and needs the proper 2-coloring
        let left_is_k2 = g.order() == 2;
        let square = g.order() == 2 && h.order() == 2;
        let sides = VertexColoring::from_fn(product.graph.order(), |v| {
            let (x, y) = product.coords(v);
            match (square, left_is_k2) {
                (true, _) => ((x + y) % 2) as u32 + 1,
                (false, true) => x as u32 + 1,
                (false, false) => y as u32 + 1,
            }
        })?;
        return Draft::new(id, &[g, h], params, Prediction::Exact(2))
            .coloring(sides)
            .note("K2 coordinate coloring; witnesses by search")
            .finish(&product.graph, &no_template);
    }
    let frame = TreeProductFrame::new(g, h)?;
    let template = |_: Parameter, u, v| Some(frame.two_paths(u, v));
    Draft::new(id, &[g, h], params, Prediction::Exact(2)).coloring(frame.coloring()?).finish(&product.graph, &template)
}

/// Two paths of length at most 2 in the product of two complete graphs of
/// order at least 3.
fn complete_factor_paths(p: &ProductGraph, u: usize, v: usize) -> Vec<Vec<usize>> {
    let ((g, h), (g2, h2)) = (p.coords(u), p.coords(v));
    let third = |order: usize, a: usize, b: usize| (0..order).find(|&x| x != a && x != b).expect("order at least 3");
    if g == g2 {
        vec![vec![u, v], vec![u, p.vertex(g, third(p.right_order, h, h2)), v]]
    } else if h == h2 {
        vec![vec![u, v], vec![u, p.vertex(third(p.left_order, g, g2), h), v]]
    } else {
        vec![vec![u, p.vertex(g, h2), v], vec![u, p.vertex(g2, h), v]]
    }
}

/// Upper bound on spvc(G □ H) from factor colorings.
///
/// Both factors complete: diameter 2, value 1. Otherwise the diameter is at
/// least 3 and spvc lies in `[2, min(s(G)·χ(H), s(H)·χ(G))]`, where `s(X)` is
/// spvc(X) with 0 raised to 1 (a complete factor still needs one color). The
/// coloring pairs a strong proper coloring of one factor with a proper
/// coloring of the other, taking the side with the smaller product.
pub fn cartesian_spvc_bound(g: &Graph, h: &Graph, left: &FactorSpvc, right: &FactorSpvc) -> Result<TheoremReport> {
    require_factor(g, "left")?;
    require_factor(h, "right")?;
    for (graph, factor) in [(g, left), (h, right)] {
        factor.coloring.check_against(graph)?;
    }
    let product = cartesian(g, h);
    let n = product.graph.order();
    let id = TheoremId::CartesianSpvc;
    if g.is_complete() && h.is_complete() {
        return Draft::new(id, &[g, h], vec![Parameter::Spvc], Prediction::Exact(1))
            .coloring(VertexColoring::monochromatic(n))
            .finish(&product.graph, &no_template);
    }
    let (chi_g, chi_h) = (g.chromatic_number()?, h.chromatic_number()?);
    let via_left = left.effective() * chi_h.number;
    let via_right = right.effective() * chi_g.number;
    let coloring = if via_left <= via_right {
        VertexColoring::from_fn(n, |v| {
            let (x, y) = product.coords(v);
            (left.coloring.color(x) - 1) * chi_h.number + chi_h.colors[y]
        })?
    } else {
        VertexColoring::from_fn(n, |v| {
            let (x, y) = product.coords(v);
            (right.coloring.color(y) - 1) * chi_g.number + chi_g.colors[x]
        })?
    };
    let mut draft = Draft::new(id, &[g, h], vec![Parameter::Spvc], Prediction::interval(2, via_left.min(via_right)))
        .coloring(coloring)
        .note(format!("bound candidates {via_left} (left strong) and {via_right} (right strong)"));
    if left.value == 0 || right.value == 0 {
        draft = draft.note("complete factor counted with one color instead of spvc = 0");
    }
    draft.finish(&product.graph, &no_template)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::oracle::OracleConfig;

    #[test]
    fn pvc_values() {
        assert_eq!(cartesian_pvc(&complete(3), &complete(2)).unwrap().predicted, Prediction::Exact(1));
        let r = cartesian_pvc(&path(3), &complete(2)).unwrap();
        assert_eq!((r.predicted, r.verified), (Prediction::Exact(2), true));
    }

    #[test]
    fn pvc2_branches() {
        let r = cartesian_pvc2(&complete(3), &complete(3)).unwrap();
        assert_eq!((r.predicted, r.verified, r.searched_witnesses), (Prediction::Exact(1), true, 0));
        let r = cartesian_pvc2(&complete(2), &complete(4)).unwrap();
        assert_eq!((r.predicted, r.verified), (Prediction::Exact(2), true));
        let r = cartesian_pvc2(&complete(2), &complete(2)).unwrap();
        assert_eq!((r.predicted, r.verified), (Prediction::Exact(2), true));
        let r = cartesian_pvc2(&path(3), &path(3)).unwrap();
        assert_eq!((r.predicted, r.verified, r.searched_witnesses), (Prediction::Exact(2), true, 0), "{:?}", r.notes);
        assert_eq!(r.coloring.unwrap().distinct_colors(), 2);
    }

    #[test]
    fn spvc_bounds() {
        let cfg = OracleConfig::default();
        let spvc = |g: &Graph| FactorSpvc::compute(g, &cfg).unwrap();
        let r = cartesian_spvc_bound(&complete(3), &complete(4), &spvc(&complete(3)), &spvc(&complete(4))).unwrap();
        assert_eq!((r.predicted, r.verified), (Prediction::Exact(1), true));
        let r = cartesian_spvc_bound(&path(4), &complete(2), &spvc(&path(4)), &spvc(&complete(2))).unwrap();
        assert_eq!((r.predicted, r.verified), (Prediction::Exact(2), true), "{:?}", r.notes);
        let r = cartesian_spvc_bound(&path(4), &path(4), &spvc(&path(4)), &spvc(&path(4))).unwrap();
        assert_eq!((r.predicted, r.verified), (Prediction::interval(2, 4), true), "{:?}", r.notes);
    }
}
