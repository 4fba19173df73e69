use serde::Serialize;

use crate::colorverify::VertexColoring;
use crate::error::Result;
use crate::graph::{Distance, Graph};
use crate::parameter::Parameter;
use crate::products::strong;

use super::support::{
    diam, no_template, require_connectivity, require_factor, tree_parity_coloring, tree_path_template, Draft,
    TreeProductFrame,
};
use super::{FactorSpvc, Prediction, TheoremId, TheoremReport};

/// pvc(G ⊠ H): 0 for two complete factors, 2 once either diameter reaches 3,
/// otherwise 1.
pub fn strong_pvc(g: &Graph, h: &Graph) -> Result<TheoremReport> {
    require_factor(g, "left")?;
    require_factor(h, "right")?;
    let p = strong(g, h).into_graph();
    let value = if g.is_complete() && h.is_complete() {
        0
    } else if diam(g).max(diam(h)) >= 3 {
        2
    } else {
        1
    };
    let draft = Draft::new(TheoremId::StrongPvc, &[g, h], vec![Parameter::PVC], Prediction::Exact(value));
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

/// A distance-2 pair of G ⊠ H built from a distance-2 pair with a unique common
/// neighbor in each factor. With one color, only paths of length at most 2 are
/// proper, and this pair has a single such path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BlockedPair {
    /// Product vertex indices.
    pub pair: (usize, usize),
    pub distance: Distance,
    /// Number of common neighbors, i.e. of paths of length exactly 2.
    pub length_two_paths: usize,
}

pub fn strong_blocked_pair(g: &Graph, h: &Graph) -> Option<BlockedPair> {
    let (a, b) = g.dist2_pair_with_unique_common_neighbor()?;
    let (x, y) = h.dist2_pair_with_unique_common_neighbor()?;
    let p = strong(g, h);
    let (u, v) = (p.vertex(a, x), p.vertex(b, y));
    Some(BlockedPair {
        pair: (u, v),
        distance: p.graph.bfs(u)[v],
        length_two_paths: p.graph.common_neighbor_count(u, v),
    })
}

/// pvc₂(G ⊠ H): 2 when a diameter reaches 3, or when both diameters are 2 and
/// both factors have a distance-2 pair with exactly one common neighbor;
/// otherwise 1. The value-2 coloring is the tree parity construction on the
/// spanning Cartesian subgraph.
pub fn strong_pvc2(g: &Graph, h: &Graph) -> Result<TheoremReport> {
    require_factor(g, "left")?;
    require_factor(h, "right")?;
    let product = strong(g, h);
    require_connectivity(&product.graph, 2)?;
    let params = vec![Parameter::PVC2];
    let blocked = strong_blocked_pair(g, h);
    let far = diam(g).max(diam(h)) >= 3;
    if far || blocked.is_some() {
        let frame = TreeProductFrame::new(g, h)?;
        let template = |_: Parameter, u, v| Some(frame.two_paths(u, v));
        let mut draft =
            Draft::new(TheoremId::StrongPvc2, &[g, h], params, Prediction::Exact(2)).coloring(frame.coloring()?);
        if let (false, Some(b)) = (far, blocked) {
            draft = draft.note(format!(
                "pair {:?} at distance {} has {} path(s) of length 2",
                b.pair, b.distance, b.length_two_paths
            ));
        }
        return draft.finish(&product.graph, &template);
    }
    Draft::new(TheoremId::StrongPvc2, &[g, h], params, Prediction::Exact(1))
        .coloring(VertexColoring::monochromatic(product.graph.order()))
        .finish(&product.graph, &no_template)
}

/// spvc(G ⊠ H). Exact at diameter at most 2; otherwise an interval whose upper
/// end comes from lifting factor colorings: the coloring of the far factor
/// alone when the other has diameter at most 2, or the pair of both colorings.
pub fn strong_spvc(g: &Graph, h: &Graph, left: &FactorSpvc, right: &FactorSpvc) -> Result<TheoremReport> {
    require_factor(g, "left")?;
    require_factor(h, "right")?;
    left.coloring.check_against(g)?;
    right.coloring.check_against(h)?;
    let product = strong(g, h);
    let n = product.graph.order();
    let params = vec![Parameter::Spvc];
    let id = TheoremId::StrongSpvc;
    if g.is_complete() && h.is_complete() {
        return Draft::new(id, &[g, h], params, Prediction::Exact(0)).finish(&product.graph, &no_template);
    }
    let (dg, dh) = (diam(g), diam(h));
    if dg.max(dh) <= 2 {
        return Draft::new(id, &[g, h], params, Prediction::Exact(1))
            .coloring(VertexColoring::monochromatic(n))
            .finish(&product.graph, &no_template);
    }
    let (hi, coloring) = match (dg >= 3, dh >= 3) {
        (false, _) => (right.value, VertexColoring::from_fn(n, |v| right.coloring.color(product.coords(v).1))?),
        (_, false) => (left.value, VertexColoring::from_fn(n, |v| left.coloring.color(product.coords(v).0))?),
        _ => {
            let hi = left.value * right.value;
            let paired = VertexColoring::from_fn(n, |v| {
                let (x, y) = product.coords(v);
                (left.coloring.color(x) - 1) * right.value + right.coloring.color(y)
            })?;
            (hi, paired)
        }
    };
    Draft::new(id, &[g, h], params, Prediction::interval(2, hi.max(2)))
        .coloring(coloring)
        .finish(&product.graph, &no_template)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::oracle::OracleConfig;

    #[test]
    fn pvc2_examples() {
        let r = strong_pvc2(&cycle(4), &cycle(4)).unwrap();
        assert_eq!((r.predicted, r.verified), (Prediction::Exact(1), true));
        let r = strong_pvc2(&cycle(5), &cycle(5)).unwrap();
        assert_eq!((r.predicted, r.verified, r.searched_witnesses), (Prediction::Exact(2), true, 0));
        let b = strong_blocked_pair(&cycle(5), &cycle(5)).unwrap();
        assert_eq!((b.distance, b.length_two_paths), (Distance::Finite(2), 1));
        assert!(strong_blocked_pair(&cycle(4), &cycle(4)).is_none());
    }

    #[test]
    fn spvc_sharp_case() {
        let cfg = OracleConfig::default();
        let (g, h) = (cycle(5), path(4));
        let r = strong_spvc(&g, &h, &FactorSpvc::compute(&g, &cfg).unwrap(), &FactorSpvc::compute(&h, &cfg).unwrap())
            .unwrap();
        assert_eq!((r.predicted, r.verified), (Prediction::Exact(2), true), "{:?}", r.notes);
        let r = strong_pvc(&complete(3), &complete(2)).unwrap();
        assert_eq!((r.predicted, r.coloring, r.verified), (Prediction::Exact(0), None, true));
    }
}
