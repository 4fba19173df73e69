use crate::colorverify::VertexColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::parameter::Parameter;

use super::support::{diam, no_template, require_factor, tree_parity_coloring, tree_path_template, Draft};
use super::{Prediction, TheoremId, TheoremReport};

/// pvc and spvc from the diameter alone: 0 for complete graphs, 1 at diameter
/// 2, and for pvc 2 beyond that. spvc of a graph with diameter at least 3 has
/// no closed form and is reported as unknown.
pub fn predicted_base(g: &Graph, param: Parameter) -> Result<Prediction> {
    require_factor(g, "input")?;
    let d = diam(g);
    Ok(match (param, d) {
        (Parameter::Pvck(1) | Parameter::Spvc, 1) => Prediction::Exact(0),
        (Parameter::Pvck(1) | Parameter::Spvc, 2) => Prediction::Exact(1),
        (Parameter::Pvck(1), _) => Prediction::Exact(2),
        (Parameter::Spvc, _) => Prediction::Unknown,
        (Parameter::Pvck(k), _) => {
            return Err(Error::Precondition(format!("no diameter characterization for pvc{k}")));
        }
    })
}

/// [`predicted_base`] with the realizing coloring: one color at diameter 2,
/// tree depth parity at larger diameter.
pub fn base_report(g: &Graph, param: Parameter) -> Result<TheoremReport> {
    let predicted = predicted_base(g, param)?;
    let id = if param == Parameter::Spvc { TheoremId::BaseSpvc } else { TheoremId::BasePvc };
    let draft = Draft::new(id, &[g], vec![param], predicted);
    match predicted {
        Prediction::Exact(1) => draft.coloring(VertexColoring::monochromatic(g.order())).finish(g, &no_template),
        Prediction::Exact(2) => {
            let tree = g.spanning_tree(0)?;
            let template = tree_path_template(&tree);
            draft.coloring(tree_parity_coloring(g)?).finish(g, &template)
        }
        _ => draft.finish(g, &no_template),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn examples() {
        assert_eq!(predicted_base(&complete(6), Parameter::PVC).unwrap(), Prediction::Exact(0));
        assert_eq!(predicted_base(&cycle(5), Parameter::PVC).unwrap(), Prediction::Exact(1));
        assert_eq!(predicted_base(&path(4), Parameter::PVC).unwrap(), Prediction::Exact(2));
        assert_eq!(predicted_base(&path(4), Parameter::Spvc).unwrap(), Prediction::Unknown);
        assert!(predicted_base(&complete(1), Parameter::PVC).is_err());
        assert!(matches!(predicted_base(&Graph::empty(3).unwrap(), Parameter::PVC), Err(Error::Disconnected)));
    }

    #[test]
    fn reports_verify() {
        for g in [complete(4), cycle(5), path(6), cycle(8)] {
            let r = base_report(&g, Parameter::PVC).unwrap();
            assert!(r.verified, "{:?}", r.notes);
            let pairs = g.order() * (g.order() - 1) / 2;
            assert_eq!(r.witnesses.len(), if g.is_complete() { 0 } else { pairs });
        }
        let unknown = base_report(&path(4), Parameter::Spvc).unwrap();
        assert!(!unknown.verified && unknown.coloring.is_none());
    }
}
