use crate::colorverify::VertexColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::parameter::Parameter;
use crate::products::{lexicographic, ProductGraph};

use super::support::{
    diam, no_template, require_connectivity, require_factor, tree_parity_coloring, tree_path_template, Draft,
    TreeProductFrame,
};
use super::{Prediction, TheoremId, TheoremReport};

fn require_nontrivial(h: &Graph) -> Result<()> {
    if h.is_trivial() {
        return Err(Error::Precondition("right factor must be nontrivial".into()));
    }
    Ok(())
}

/// Shared value of pvc and spvc of G ∘ H: the product has diameter
/// max(diam(G), 2) unless both factors are complete.
fn lex_value(g: &Graph, h: &Graph) -> u32 {
    match (g.is_complete(), h.is_complete()) {
        (true, true) => 0,
        (true, false) => 1,
        _ if diam(g) == 2 => 1,
        _ => 2,
    }
}

/// pvc(G ∘ H) for connected G and any nontrivial H.
pub fn lex_pvc(g: &Graph, h: &Graph) -> Result<TheoremReport> {
    require_factor(g, "left")?;
    require_nontrivial(h)?;
    let p = lexicographic(g, h).into_graph();
    let value = lex_value(g, h);
    let draft = Draft::new(TheoremId::LexPvc, &[g, h], vec![Parameter::PVC], Prediction::Exact(value));
    match value {
        0 => draft.finish(&p, &no_template),
        1 => draft.coloring(VertexColoring::monochromatic(p.order())).finish(&p, &no_template),
        _ => {
            let tree = p.spanning_tree(0)?;
            let template = tree_path_template(&tree);
            draft.coloring(tree_parity_coloring(&p)?).finish(&p, &template)
        }
    }
}

/// spvc(G ∘ H). Same values as pvc; at diam(G) >= 3 the coloring alternates
/// with the index of the H coordinate (odd 1-based index gets color 1), which
/// leaves room for an alternating geodesic through every fiber.
pub fn lex_spvc(g: &Graph, h: &Graph) -> Result<TheoremReport> {
    require_factor(g, "left")?;
    require_nontrivial(h)?;
    let product = lexicographic(g, h);
    let value = lex_value(g, h);
    let draft = Draft::new(TheoremId::LexSpvc, &[g, h], vec![Parameter::Spvc], Prediction::Exact(value));
    let n = product.graph.order();
    match value {
        0 => draft.finish(&product.graph, &no_template),
        1 => draft.coloring(VertexColoring::monochromatic(n)).finish(&product.graph, &no_template),
        _ => {
            let alternating =
                VertexColoring::from_fn(n, |v| if product.coords(v).1.is_multiple_of(2) { 1 } else { 2 })?;
            draft.coloring(alternating).finish(&product.graph, &no_template)
        }
    }
}

/// pvc₂(G ∘ H) for connected nontrivial factors: 2 when diam(G) >= 3 (the
/// Cartesian product of the factors is a spanning subgraph and carries the
/// tree parity construction), otherwise 1 with two paths of length at most 2
/// between every pair.
pub fn lex_pvc2(g: &Graph, h: &Graph) -> Result<TheoremReport> {
    require_factor(g, "left")?;
    require_factor(h, "right")?;
    let product = lexicographic(g, h);
    require_connectivity(&product.graph, 2)?;
    let params = vec![Parameter::PVC2];
    if diam(g) >= 3 {
        let frame = TreeProductFrame::new(g, h)?;
        let template = |_: Parameter, u, v| Some(frame.two_paths(u, v));
        return Draft::new(TheoremId::LexPvc2, &[g, h], params, Prediction::Exact(2))
            .coloring(frame.coloring()?)
            .finish(&product.graph, &template);
    }
    let template = |_: Parameter, u, v| short_paths(&product, g, h, u, v);
    Draft::new(TheoremId::LexPvc2, &[g, h], params, Prediction::Exact(1))
        .coloring(VertexColoring::monochromatic(product.graph.order()))
        .finish(&product.graph, &template)
}

/// Two internally disjoint paths of length at most 2 when diam(G) <= 2.
fn short_paths(p: &ProductGraph, g: &Graph, h: &Graph, u: usize, v: usize) -> Option<Vec<Vec<usize>>> {
    let ((a, x), (b, y)) = (p.coords(u), p.coords(v));
    let at = |a, x| p.vertex(a, x);
    let common = |a: usize, b: usize| g.neighbors(a).find(|&c| g.has_edge(c, b));
    if a == b {
        let side = g.neighbors(a).next()?;
        return Some(vec![vec![u, at(side, x), v], vec![u, at(side, y), v]]);
    }
    let fiber_neighbor = h.neighbors(x).next()?;
    if g.has_edge(a, b) {
        // the edge itself and a detour through the fiber of `a`
        return Some(vec![vec![u, v], vec![u, at(a, fiber_neighbor), v]]);
    }
    let middle = common(a, b)?;
    let other = if x == y { (0..h.order()).find(|&z| z != x)? } else { y };
    Some(vec![vec![u, at(middle, x), v], vec![u, at(middle, other), v]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn examples() {
        let r = lex_spvc(&path(4), &complete(2)).unwrap();
        assert_eq!((r.predicted, r.verified), (Prediction::Exact(2), true), "{:?}", r.notes);
        let r = lex_pvc(&complete(3), &path(3)).unwrap();
        assert_eq!((r.predicted, r.verified), (Prediction::Exact(1), true));
        let r = lex_pvc2(&cycle(5), &complete(2)).unwrap();
        assert_eq!((r.predicted, r.verified, r.searched_witnesses), (Prediction::Exact(1), true, 0), "{:?}", r.notes);
        let r = lex_pvc2(&path(4), &complete(2)).unwrap();
        assert_eq!((r.predicted, r.verified, r.searched_witnesses), (Prediction::Exact(2), true, 0), "{:?}", r.notes);
    }

    #[test]
    fn disconnected_right_factor_allowed_for_pvc() {
        let r = lex_pvc(&path(4), &Graph::empty(2).unwrap()).unwrap();
        assert_eq!((r.predicted, r.verified), (Prediction::Exact(2), true));
        assert!(lex_pvc2(&path(4), &Graph::empty(2).unwrap()).is_err());
    }
}
