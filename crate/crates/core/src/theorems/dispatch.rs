use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::OracleConfig;
use crate::parameter::Parameter;
use crate::products::ProductKind;

use super::direct::diameter_two_condition;
use super::support::diam;
use super::{
    base_report, cartesian_pvc, cartesian_pvc2, cartesian_spvc_bound, direct_complete_cases, direct_kn_times_h,
    direct_pvc_spvc, join_pvck, lex_pvc, lex_pvc2, lex_spvc, strong_pvc, strong_pvc2, strong_spvc, FactorSpvc,
    TheoremReport,
};

fn no_formula(kind: ProductKind, param: Parameter) -> Error {
    Error::NoClosedForm(format!("{param} of this {kind} product"))
}

/// The report for `param` of a single graph, from the diameter characterization.
pub fn evaluate_graph(g: &Graph, param: Parameter) -> Result<TheoremReport> {
    base_report(g, param)
}

/// The report for `param` of the `kind` product of `left` and `right`, choosing
/// the statement that covers the pair. `cfg` bounds the factor-level searches
/// some bounds need.
pub fn evaluate_product(
    kind: ProductKind,
    left: &Graph,
    right: &Graph,
    param: Parameter,
    cfg: &OracleConfig,
) -> Result<TheoremReport> {
    let factors = || Ok::<_, Error>((FactorSpvc::compute(left, cfg)?, FactorSpvc::compute(right, cfg)?));
    match (kind, param) {
        (ProductKind::Join, Parameter::Pvck(k)) => join_pvck(left, right, k),
        (ProductKind::Join, Parameter::Spvc) => join_pvck(left, right, 1),
        (ProductKind::Cartesian, Parameter::PVC) => cartesian_pvc(left, right),
        (ProductKind::Cartesian, Parameter::PVC2) => cartesian_pvc2(left, right),
        (ProductKind::Cartesian, Parameter::Spvc) => {
            let (a, b) = factors()?;
            cartesian_spvc_bound(left, right, &a, &b)
        }
        (ProductKind::Lexicographic, Parameter::PVC) => lex_pvc(left, right),
        (ProductKind::Lexicographic, Parameter::PVC2) => lex_pvc2(left, right),
        (ProductKind::Lexicographic, Parameter::Spvc) => lex_spvc(left, right),
        (ProductKind::Strong, Parameter::PVC) => strong_pvc(left, right),
        (ProductKind::Strong, Parameter::PVC2) => strong_pvc2(left, right),
        (ProductKind::Strong, Parameter::Spvc) => {
            let (a, b) = factors()?;
            strong_spvc(left, right, &a, &b)
        }
        (ProductKind::Direct, Parameter::PVC) => direct_pvc_spvc(left, right),
        (ProductKind::Direct, Parameter::PVC2) => match (left.is_complete(), right.is_complete()) {
            (true, true) if right.order() >= 3 => direct_complete_cases(left.order(), right.order()),
            (true, true) if left.order() >= 3 => {
                swapped(direct_complete_cases(right.order(), left.order())?, left, right)
            }
            _ => Err(no_formula(kind, param)),
        },
        (ProductKind::Direct, Parameter::Spvc) => {
            if diameter_two_condition(left, right) {
                return direct_pvc_spvc(left, right);
            }
            match (left.is_complete(), right.is_complete()) {
                (true, true) if right.order() >= 3 => direct_complete_cases(left.order(), right.order()),
                (true, true) if left.order() >= 3 => {
                    swapped(direct_complete_cases(right.order(), left.order())?, left, right)
                }
                (true, false) if diam(right) >= 2 => direct_kn_times_h(left.order(), right),
                (false, true) if diam(left) >= 2 => swapped(direct_kn_times_h(right.order(), left)?, left, right),
                _ => Err(no_formula(kind, param)),
            }
        }
        _ => Err(no_formula(kind, param)),
    }
}

/// Re-indexes a direct-product report computed for `right × left` onto
/// `left × right`. The direct product is commutative, so verification carries
/// over unchanged.
fn swapped(mut report: TheoremReport, left: &Graph, right: &Graph) -> Result<TheoremReport> {
    let (n, m) = (left.order(), right.order());
    // vertex (h, g) of right × left sits at h * n + g; in left × right at g * m + h
    let map = |v: usize| (v % n) * m + v / n;
    if let Some(c) = &report.coloring {
        let mut colors = vec![0; n * m];
        for (v, &color) in c.colors().iter().enumerate() {
            colors[map(v)] = color;
        }
        report.coloring = Some(crate::colorverify::VertexColoring::new(colors)?);
    }
    for w in &mut report.witnesses {
        let (a, b) = (map(w.pair.0), map(w.pair.1));
        w.pair = (a.min(b), a.max(b));
        for path in &mut w.paths {
            path.iter_mut().for_each(|x| *x = map(*x));
            if path.first() != Some(&w.pair.0) {
                path.reverse();
            }
        }
    }
    report.inputs.reverse();
    report.notes.push("computed with the factors exchanged and re-indexed".into());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorverify::{check_witness, is_strong_proper_vertex_connected};
    use crate::graph::fixtures::*;
    use crate::products::direct;
    use crate::theorems::Prediction;

    #[test]
    fn swapped_direct_report_stays_valid() {
        let (g, h) = (path(4), complete(3));
        let r = evaluate_product(ProductKind::Direct, &g, &h, Parameter::Spvc, &OracleConfig::default()).unwrap();
        assert_eq!(r.predicted, Prediction::Exact(2));
        let p = direct(&g, &h).into_graph();
        let c = r.coloring.as_ref().unwrap();
        assert!(is_strong_proper_vertex_connected(&p, c).unwrap());
        assert!(r.witnesses.iter().all(|w| check_witness(&p, c, w).is_ok()));
    }

    #[test]
    fn every_kind_covers_pvc() {
        let (g, h) = (cycle(5), complete(3));
        for kind in ProductKind::ALL {
            let r = evaluate_product(kind, &g, &h, Parameter::PVC, &OracleConfig::default()).unwrap();
            assert!(r.verified, "{kind}: {:?}", r.notes);
        }
    }

    #[test]
    fn uncovered_cases_are_errors() {
        let cfg = OracleConfig::default();
        assert!(matches!(
            evaluate_product(ProductKind::Direct, &cycle(5), &path(4), Parameter::PVC2, &cfg),
            Err(Error::NoClosedForm(_))
        ));
    }
}
