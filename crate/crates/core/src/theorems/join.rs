use crate::colorverify::VertexColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::parameter::Parameter;
use crate::products::join;

use super::support::{no_template, require_connectivity, Draft};
use super::{Prediction, TheoremId, TheoremReport};

/// pvc_k(K_n) = 1 for 2 <= k <= n - 1, realized by one color.
pub fn complete_pvck(n: usize, k: usize) -> Result<TheoremReport> {
    if n < 3 || k < 2 || k > n - 1 {
        return Err(Error::InvalidK { k, connectivity: n.saturating_sub(1) });
    }
    let g = Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))?;
    Draft::new(TheoremId::CompleteGraph, &[&g], vec![Parameter::Pvck(k)], Prediction::Exact(1))
        .coloring(VertexColoring::monochromatic(n))
        .finish(&g, &no_template)
}

/// pvc_k(K_{n1,n2}) = 2 for 2 <= k <= n1 <= n2, realized by coloring each side
/// with its own color.
pub fn complete_bipartite_pvck(n1: usize, n2: usize, k: usize) -> Result<TheoremReport> {
    if !(2 <= k && k <= n1 && n1 <= n2) {
        return Err(Error::InvalidK { k, connectivity: n1.min(n2) });
    }
    let (left, right) = (Graph::empty(n1)?, Graph::empty(n2)?);
    let g = join(&left, &right).into_graph();
    let sides = VertexColoring::from_fn(n1 + n2, |v| if v < n1 { 1 } else { 2 })?;
    Draft::new(TheoremId::CompleteBipartite, &[&left, &right], vec![Parameter::Pvck(k)], Prediction::Exact(2))
        .coloring(sides)
        .finish(&g, &no_template)
}

/// pvc_k of the join G ∨ H.
///
/// For k = 1 the join has diameter 2 (when not complete), so pvc = spvc = 1.
/// For 2 <= k <= min(|G|, |H|) the value is 2 when δ(G) + δ(H) < k - 1, since a
/// pair of minimum-degree vertices then needs a path of length at least 3;
/// the spanning complete bipartite subgraph with its sides colored apart gives
/// the upper bound. Otherwise one color suffices. The graphs need not be
/// connected; κ of the join is checked instead.
pub fn join_pvck(g: &Graph, h: &Graph, k: usize) -> Result<TheoremReport> {
    let joined = join(g, h).into_graph();
    let n = joined.order();
    if k == 1 {
        if joined.is_complete() {
            return Err(Error::Precondition("the join is complete; pvc is 0 by convention".into()));
        }
        return Draft::new(TheoremId::Join, &[g, h], vec![Parameter::PVC, Parameter::Spvc], Prediction::Exact(1))
            .coloring(VertexColoring::monochromatic(n))
            .finish(&joined, &no_template);
    }
    if k == 0 || k > g.order().min(h.order()) {
        return Err(Error::InvalidK { k, connectivity: g.order().min(h.order()) });
    }
    require_connectivity(&joined, k)?;
    let degree_sum = g.min_degree() + h.min_degree();
    if degree_sum + 1 < k {
        let sides = VertexColoring::from_fn(n, |v| if v < g.order() { 1 } else { 2 })?;
        Draft::new(TheoremId::Join, &[g, h], vec![Parameter::Pvck(k)], Prediction::Exact(2))
            .coloring(sides)
            .note(format!("minimum degree sum {degree_sum} < k - 1 = {}", k - 1))
            .finish(&joined, &no_template)
    } else {
        Draft::new(TheoremId::Join, &[g, h], vec![Parameter::Pvck(k)], Prediction::Exact(1))
            .coloring(VertexColoring::monochromatic(n))
            .finish(&joined, &no_template)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn complete_and_bipartite() {
        let r = complete_pvck(5, 4).unwrap();
        assert_eq!((r.predicted, r.verified), (Prediction::Exact(1), true));
        for (n1, n2) in [(3, 3), (2, 5)] {
            let r = complete_bipartite_pvck(n1, n2, 2).unwrap();
            assert_eq!((r.predicted, r.verified), (Prediction::Exact(2), true), "{:?}", r.notes);
        }
        assert!(complete_pvck(4, 4).is_err());
        assert!(complete_bipartite_pvck(2, 5, 3).is_err());
    }

    #[test]
    fn join_examples() {
        let e3 = Graph::empty(3).unwrap();
        let r = join_pvck(&e3, &e3, 2).unwrap();
        assert_eq!((r.predicted, r.verified), (Prediction::Exact(2), true));
        let r = join_pvck(&complete(2), &complete(2), 2).unwrap();
        assert_eq!((r.predicted, r.verified), (Prediction::Exact(1), true));
        let r = join_pvck(&cycle(4), &complete(1), 1).unwrap();
        assert_eq!(r.params, vec![Parameter::PVC, Parameter::Spvc]);
        assert_eq!((r.predicted, r.verified), (Prediction::Exact(1), true));
        assert!(join_pvck(&complete(2), &complete(2), 1).is_err());
        assert!(matches!(join_pvck(&e3, &complete(2), 3), Err(Error::InvalidK { .. })));
    }
}
