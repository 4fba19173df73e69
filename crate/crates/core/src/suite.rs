//! The consistency battery: closed forms, constructions and verifiers checked
//! against exhaustive search on desk-scale instances.
//!
//! Checks are grouped by criterion and emitted in a fixed order, so a fixed
//! seed gives a byte-identical report. Failures, including errors such as an
//! exceeded cap, become report entries rather than aborting the run.

use std::fmt::Display;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::colorverify::{
    exists_proper_geodesic, exists_proper_path, first_pvck_failure, is_strong_proper_vertex_connected, SearchBudget,
    VertexColoring,
};
use crate::error::{Error, Result};
use crate::graph::{Distance, Graph};
use crate::graph6::{emit_graph6, parse_graph6};
use crate::oracle::{
    brute_pvc_k, brute_spvc, enumerate_connected, enumerate_graphs, exhaustive, generate, Family, OracleConfig,
    MAX_ENUMERATION_ORDER,
};
use crate::parameter::Parameter;
use crate::products::{cartesian, direct, join, lexicographic, strong, verify_distance_formula, ProductKind};
use crate::theorems::{
    cartesian_pvc2, cartesian_spvc_bound, complete_bipartite_pvck, direct_complete_cases, direct_kn_times_h,
    direct_pvc_spvc, join_pvck, lex_pvc, lex_pvc2, lex_spvc, predicted_base, strong_blocked_pair, strong_pvc2,
    strong_spvc, FactorSpvc, Prediction, TheoremReport,
};

/// Criterion identifiers in report order.
pub const CRITERIA: [&str; 10] = [
    "base-characterization",
    "chain-inequalities",
    "distance-formulas",
    "join",
    "cartesian",
    "lexicographic",
    "strong",
    "direct",
    "verifier-cross-validation",
    "graph6-round-trip",
];

pub const DEFAULT_MAX_N: usize = 6;
pub const DEFAULT_SEED: u64 = 20_240_601;
const RANDOM_COLORINGS: usize = 200;
const ROUND_TRIP_GRAPHS: usize = 1000;
const ROUND_TRIP_MAX_ORDER: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub instance: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub checks: Vec<Check>,
    pub totals: Totals,
}

impl SuiteReport {
    pub fn new(checks: Vec<Check>) -> Self {
        let passed = checks.iter().filter(|c| c.pass).count();
        let totals = Totals { checks: checks.len(), passed, failed: checks.len() - passed };
        SuiteReport { checks, totals }
    }

    pub fn all_passed(&self) -> bool {
        self.totals.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Largest order of enumerated graph families.
    pub max_n: usize,
    pub seed: u64,
    /// Restrict the run to these criteria.
    pub only: Option<Vec<String>>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { max_n: DEFAULT_MAX_N, seed: DEFAULT_SEED, only: None }
    }
}

pub fn run_suite(opts: &SuiteOptions) -> Result<SuiteReport> {
    let selected: Vec<&str> = match &opts.only {
        None => CRITERIA.to_vec(),
        Some(only) => {
            if let Some(bad) = only.iter().find(|id| !CRITERIA.contains(&id.as_str())) {
                return Err(Error::Precondition(format!("unknown criterion `{bad}`")));
            }
            CRITERIA.iter().copied().filter(|c| only.iter().any(|o| o == c)).collect()
        }
    };
    let mut checks = Vec::new();
    for id in selected {
        checks.extend(run_criterion(id, opts)?);
    }
    Ok(SuiteReport::new(checks))
}

/// The checks of one criterion, in deterministic order.
pub fn run_criterion(id: &str, opts: &SuiteOptions) -> Result<Vec<Check>> {
    Ok(match id {
        "base-characterization" => base_characterization(opts),
        "chain-inequalities" => chain_inequalities(opts),
        "distance-formulas" => distance_formulas(opts),
        "join" => join_checks(opts),
        "cartesian" => cartesian_checks(),
        "lexicographic" => lexicographic_checks(),
        "strong" => strong_checks(),
        "direct" => direct_checks(opts),
        "verifier-cross-validation" => verifier_cross_validation(opts),
        "graph6-round-trip" => graph6_round_trip(opts),
        _ => return Err(Error::Precondition(format!("unknown criterion `{id}`"))),
    })
}

fn check(id: &str, instance: impl Into<String>, expected: impl Display, got: impl Display, pass: bool) -> Check {
    Check { id: id.to_string(), instance: instance.into(), expected: expected.to_string(), got: got.to_string(), pass }
}

/// Equality of an integer result with an expected value; errors fail the check.
fn value_check(id: &str, instance: &str, expected: u32, got: Result<u32>) -> Check {
    match got {
        Ok(v) => check(id, instance, expected, v, v == expected),
        Err(e) => check(id, instance, expected, format!("error: {e}"), false),
    }
}

/// A theorem report's prediction matched against an oracle value, plus its
/// own verification flag.
fn report_check(id: &str, instance: &str, report: Result<TheoremReport>, oracle: Option<Result<u32>>) -> Check {
    let report = match report {
        Ok(r) => r,
        Err(e) => return check(id, instance, "report", format!("error: {e}"), false),
    };
    let mut got = format!("verified={}", report.verified);
    let mut pass = report.verified;
    if let Some(oracle) = oracle {
        match oracle {
            Ok(v) => {
                got.push_str(&format!(" oracle={v}"));
                pass &= report.predicted.contains(v);
            }
            Err(e) => {
                got.push_str(&format!(" oracle error: {e}"));
                pass = false;
            }
        }
    }
    check(id, instance, format!("predicted={} verified=true", report.predicted), got, pass)
}

fn oracle(max_order: usize) -> OracleConfig {
    OracleConfig::default().with_max_order(max_order)
}

fn pvck(g: &Graph, k: usize, max_order: usize) -> Result<u32> {
    brute_pvc_k(g, k, &oracle(max_order)).map(|r| r.value)
}

fn spvc(g: &Graph, max_order: usize) -> Result<u32> {
    brute_spvc(g, &oracle(max_order)).map(|r| r.value)
}

fn connected_up_to(max_n: usize, min_n: usize) -> Vec<Graph> {
    (min_n..=max_n.min(MAX_ENUMERATION_ORDER))
        .flat_map(|n| enumerate_connected(n, true).expect("order within enumeration range"))
        .collect()
}

fn named(family: &str) -> Graph {
    generate(family.parse::<Family>().expect("valid family")).expect("valid family parameters")
}

fn pair_name(kind: ProductKind, a: &str, b: &str) -> String {
    format!("{}({a},{b})", kind.name())
}

fn diam(g: &Graph) -> u32 {
    g.diameter().finite().unwrap_or(u32::MAX)
}

fn base_characterization(opts: &SuiteOptions) -> Vec<Check> {
    let graphs = connected_up_to(opts.max_n, 2);
    graphs
        .par_iter()
        .flat_map_iter(|g| {
            let name = emit_graph6(g);
            let predicted = predicted_base(g, Parameter::PVC).ok().and_then(Prediction::exact).unwrap_or(u32::MAX);
            let pvc = value_check("base-characterization/pvc", &name, predicted, pvck(g, 1, 16));
            let (expected, accept): (&str, fn(u32) -> bool) = match diam(g) {
                1 => ("0", |v| v == 0),
                2 => ("1", |v| v == 1),
                _ => (">=2", |v| v >= 2),
            };
            let spvc = match spvc(g, 16) {
                Ok(v) => check("base-characterization/spvc", &name, expected, v, accept(v)),
                Err(e) => check("base-characterization/spvc", &name, expected, format!("error: {e}"), false),
            };
            [pvc, spvc]
        })
        .collect()
}

fn chain_inequalities(opts: &SuiteOptions) -> Vec<Check> {
    let graphs = connected_up_to(opts.max_n, 2);
    graphs
        .par_iter()
        .map(|g| {
            let name = emit_graph6(g);
            let expected = "pvc<=spvc<=chi, chi-coloring strong";
            let run = || -> Result<(u32, u32, u32, bool)> {
                let chi = g.chromatic_number()?;
                let strong = is_strong_proper_vertex_connected(g, &VertexColoring::new(chi.colors)?)?;
                Ok((pvck(g, 1, 16)?, spvc(g, 16)?, chi.number, strong))
            };
            match run() {
                Ok((p, s, chi, strong)) => check(
                    "chain-inequalities",
                    name,
                    expected,
                    format!("pvc={p} spvc={s} chi={chi} strong={strong}"),
                    p <= s && s <= chi && strong,
                ),
                Err(e) => check("chain-inequalities", name, expected, format!("error: {e}"), false),
            }
        })
        .collect()
}

fn small_factors() -> Vec<(&'static str, Graph)> {
    [
        ("P2", "path:2"),
        ("P3", "path:3"),
        ("P4", "path:4"),
        ("C3", "cycle:3"),
        ("C4", "cycle:4"),
        ("C5", "cycle:5"),
        ("K2", "complete:2"),
        ("K3", "complete:3"),
        ("K4", "complete:4"),
        ("K1,3", "star:3"),
    ]
    .into_iter()
    .map(|(name, family)| (name, named(family)))
    .collect()
}

fn distance_formulas(opts: &SuiteOptions) -> Vec<Check> {
    let factors = small_factors();
    let kinds = [ProductKind::Cartesian, ProductKind::Lexicographic, ProductKind::Strong, ProductKind::Direct];
    let mut cases = Vec::new();
    for kind in kinds {
        for a in &factors {
            for b in &factors {
                cases.push((kind, a, b));
            }
        }
    }
    let mut checks: Vec<Check> = cases
        .par_iter()
        .map(|&(kind, (an, a), (bn, b))| {
            let name = pair_name(kind, an, bn);
            match verify_distance_formula(kind, a, b, opts.seed) {
                Ok(r) => {
                    let got = match &r.counterexample {
                        None => format!("{} pairs agree", r.pairs_checked),
                        Some(m) => format!("mismatch at {:?}-{:?}: bfs {} formula {}", m.from, m.to, m.bfs, m.formula),
                    };
                    check("distance-formulas/formula", name, "exhaustive agreement", got, r.passed() && r.exhaustive)
                }
                Err(e) => {
                    check("distance-formulas/formula", name, "exhaustive agreement", format!("error: {e}"), false)
                }
            }
        })
        .collect();
    // connectivity of the direct product: connected factors, one nonbipartite
    for (an, a) in &factors {
        for (bn, b) in &factors {
            let expected = !(a.is_bipartite() && b.is_bipartite());
            let got = direct(a, b).graph.is_connected();
            let name = pair_name(ProductKind::Direct, an, bn);
            checks.push(check("distance-formulas/direct-connected", name, expected, got, expected == got));
        }
    }
    checks
}

fn join_checks(opts: &SuiteOptions) -> Vec<Check> {
    let limit = opts.max_n.min(4);
    let graphs: Vec<Graph> =
        (2..=limit).flat_map(|n| enumerate_graphs(n, true).expect("order within enumeration range")).collect();
    let mut cases = Vec::new();
    for g in &graphs {
        for h in &graphs {
            for k in [2, 3] {
                if k <= g.order().min(h.order()) {
                    cases.push((g, h, k));
                }
            }
        }
    }
    let mut checks: Vec<Check> = cases
        .par_iter()
        .filter_map(|&(g, h, k)| {
            let joined = join(g, h).into_graph();
            if joined.vertex_connectivity() < k {
                return None;
            }
            let name = format!("join({},{}) k={k}", emit_graph6(g), emit_graph6(h));
            Some(report_check("join/theorem", &name, join_pvck(g, h, k), Some(pvck(&joined, k, 12))))
        })
        .collect();
    for n2 in 2..=4 {
        for n1 in 2..=n2 {
            for k in 2..=n1 {
                let name = format!("K{n1},{n2} k={k}");
                let g = join(&Graph::empty(n1).expect("n1 >= 2"), &Graph::empty(n2).expect("n2 >= 2")).into_graph();
                checks.push(report_check(
                    "join/bipartite",
                    &name,
                    complete_bipartite_pvck(n1, n2, k),
                    Some(pvck(&g, k, 12)),
                ));
            }
        }
    }
    for n in 3..=6 {
        for k in 2..n {
            let name = format!("K{n} k={k}");
            checks.push(value_check("join/complete", &name, 1, pvck(&named(&format!("complete:{n}")), k, 12)));
        }
    }
    checks
}

fn cartesian_checks() -> Vec<Check> {
    let small: Vec<(&str, Graph)> =
        vec![("K2", named("complete:2")), ("P3", named("path:3")), ("K3", named("complete:3"))];
    let mut pairs: Vec<(&str, &Graph, &str, &Graph)> = Vec::new();
    for (an, a) in &small {
        for (bn, b) in &small {
            pairs.push((an, a, bn, b));
        }
    }
    let (k2, k4, p4) = (named("complete:2"), named("complete:4"), named("path:4"));
    pairs.push(("K2", &k2, "K4", &k4));
    pairs.push(("P4", &p4, "K2", &k2));
    let cfg = OracleConfig::default();
    pairs
        .par_iter()
        .flat_map_iter(|&(an, a, bn, b)| {
            let name = pair_name(ProductKind::Cartesian, an, bn);
            let p = cartesian(a, b).into_graph();
            let report = cartesian_pvc2(a, b);
            let mut out = Vec::new();
            let tree_case = !(a.is_complete() && b.is_complete());
            if let (true, Ok(r)) = (tree_case, &report) {
                let colors = r.coloring.as_ref().map_or(0, VertexColoring::distinct_colors);
                out.push(check(
                    "cartesian/tree-parity",
                    &name,
                    "2 colors, verified",
                    format!("{colors} colors, verified={}", r.verified),
                    colors == 2 && r.verified,
                ));
            }
            out.insert(0, report_check("cartesian/pvc2", &name, report, Some(pvck(&p, 2, 12))));
            let factors = FactorSpvc::compute(a, &cfg).and_then(|fa| Ok((fa, FactorSpvc::compute(b, &cfg)?)));
            let bound = factors.and_then(|(fa, fb)| cartesian_spvc_bound(a, b, &fa, &fb));
            out.push(report_check("cartesian/spvc-bound", &name, bound, Some(spvc(&p, 16))));
            out
        })
        .collect()
}

fn lexicographic_checks() -> Vec<Check> {
    let pairs = [
        ("P4", "path:4", "K2", "complete:2"),
        ("C5", "cycle:5", "K2", "complete:2"),
        ("K3", "complete:3", "P3", "path:3"),
        ("P3", "path:3", "P3", "path:3"),
        ("K2", "complete:2", "K2", "complete:2"),
    ];
    pairs
        .par_iter()
        .flat_map_iter(|&(an, af, bn, bf)| {
            let (a, b) = (named(af), named(bf));
            let p = lexicographic(&a, &b).into_graph();
            let name = pair_name(ProductKind::Lexicographic, an, bn);
            let mut out = vec![
                report_check("lexicographic/pvc", &name, lex_pvc(&a, &b), Some(pvck(&p, 1, 16))),
                report_check("lexicographic/spvc", &name, lex_spvc(&a, &b), Some(spvc(&p, 16))),
                report_check("lexicographic/pvc2", &name, lex_pvc2(&a, &b), Some(pvck(&p, 2, 12))),
            ];
            if diam(&a) >= 3 {
                let r = lex_spvc(&a, &b);
                let (colors, verified) = r.as_ref().map_or((0, false), |r| {
                    (r.coloring.as_ref().map_or(0, VertexColoring::distinct_colors), r.verified)
                });
                out.push(check(
                    "lexicographic/index-parity",
                    &name,
                    "2 colors, verified",
                    format!("{colors} colors, verified={verified}"),
                    colors == 2 && verified,
                ));
            }
            out
        })
        .collect()
}

fn strong_checks() -> Vec<Check> {
    let (c4, c5, p3, p4) = (named("cycle:4"), named("cycle:5"), named("path:3"), named("path:4"));
    let name = |a: &str, b: &str| pair_name(ProductKind::Strong, a, b);
    let mut checks = Vec::new();
    let c4c4 = strong(&c4, &c4).into_graph();
    checks.push(report_check("strong/pvc2", &name("C4", "C4"), strong_pvc2(&c4, &c4), Some(pvck(&c4c4, 2, 16))));
    checks.push(value_check("strong/pvc2-oracle", &name("C4", "C4"), 1, pvck(&c4c4, 2, 16)));
    let p3p3 = strong(&p3, &p3).into_graph();
    checks.push(report_check("strong/pvc2", &name("P3", "P3"), strong_pvc2(&p3, &p3), Some(pvck(&p3p3, 2, 12))));
    checks.push(value_check("strong/pvc2-oracle", &name("P3", "P3"), 2, pvck(&p3p3, 2, 12)));

    // C5 ⊠ C5 is too large for the pvc₂ oracle: check the 2-coloring, the
    // blocked pair, and that one color fails.
    let c5c5 = strong(&c5, &c5).into_graph();
    let r = strong_pvc2(&c5, &c5);
    let colors = r.as_ref().ok().and_then(|r| r.coloring.as_ref()).map_or(0, VertexColoring::distinct_colors);
    let verified = r.as_ref().is_ok_and(|r| r.verified && r.predicted == Prediction::Exact(2));
    checks.push(check(
        "strong/pvc2-coloring",
        name("C5", "C5"),
        "predicted 2, 2 colors, verified",
        format!("{colors} colors, verified={verified}"),
        verified && colors == 2,
    ));
    let blocked = strong_blocked_pair(&c5, &c5);
    let got = blocked.map_or("none".to_string(), |b| {
        format!("distance {} with {} length-2 path(s)", b.distance, b.length_two_paths)
    });
    let pass = blocked.is_some_and(|b| b.distance == Distance::Finite(2) && b.length_two_paths == 1);
    checks.push(check("strong/blocked-pair", name("C5", "C5"), "distance 2 with 1 length-2 path(s)", got, pass));
    let mono = first_pvck_failure(&c5c5, &VertexColoring::monochromatic(c5c5.order()), 2, SearchBudget::default());
    let got = match &mono {
        Ok(Some(pair)) => format!("fails at {pair:?}"),
        Ok(None) => "passes".into(),
        Err(e) => format!("error: {e}"),
    };
    checks.push(check("strong/one-color-fails", name("C5", "C5"), "fails", got, matches!(mono, Ok(Some(_)))));

    let c5p4 = strong(&c5, &p4).into_graph();
    let cfg = OracleConfig::default();
    let report = FactorSpvc::compute(&c5, &cfg)
        .and_then(|fa| Ok((fa, FactorSpvc::compute(&p4, &cfg)?)))
        .and_then(|(fa, fb)| strong_spvc(&c5, &p4, &fa, &fb));
    checks.push(report_check("strong/spvc", &name("C5", "P4"), report, Some(spvc(&c5p4, 20))));
    checks.push(value_check("strong/spvc-oracle", &name("C5", "P4"), 2, spvc(&c5p4, 20)));
    checks.push(value_check("strong/spvc-factor", "P4", 2, spvc(&p4, 16)));
    checks
}

fn direct_checks(opts: &SuiteOptions) -> Vec<Check> {
    let graphs = connected_up_to(opts.max_n.min(5), 2);
    let mut pairs = Vec::new();
    for g in &graphs {
        for h in &graphs {
            if !(g.is_bipartite() && h.is_bipartite()) {
                pairs.push((g, h));
            }
        }
    }
    let mut checks: Vec<Check> = pairs
        .par_iter()
        .map(|&(g, h)| {
            let expected = diam(g) <= 2 && diam(h) <= 2 && g.every_edge_in_triangle() && h.every_edge_in_triangle();
            let got = direct(g, h).graph.diameter() == Distance::Finite(2);
            let name = pair_name(ProductKind::Direct, &emit_graph6(g), &emit_graph6(h));
            check("direct/diameter-two", name, expected, got, expected == got)
        })
        .collect();

    let complete = |n: usize| named(&format!("complete:{n}"));
    let mut cases: Vec<(usize, usize, u32)> = vec![(3, 3, 1), (3, 4, 1), (4, 3, 1), (4, 4, 1)];
    cases.extend((3..=5).map(|m| (2, m, 2)));
    checks.par_extend(cases.par_iter().flat_map_iter(|&(n, m, value)| {
        let p = direct(&complete(n), &complete(m)).into_graph();
        let name = format!("direct(K{n},K{m})");
        [
            report_check("direct/complete-factors", &name, direct_complete_cases(n, m), None),
            value_check("direct/complete-factors-spvc", &name, value, spvc(&p, 16)),
            value_check("direct/complete-factors-pvc2", &name, value, pvck(&p, 2, 16)),
        ]
    }));

    let chorded = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).expect("valid edges");
    let any_cases: Vec<(usize, &str, Graph, u32)> = vec![
        (2, "C5", named("cycle:5"), 2),
        (4, "C5", named("cycle:5"), 2),
        (3, "P4", named("path:4"), 2),
        (3, "C5+chord", chorded, 3),
    ];
    checks.par_extend(any_cases.par_iter().flat_map_iter(|(n, hn, h, max_colors)| {
        let name = format!("direct(K{n},{hn})");
        let report = direct_kn_times_h(*n, h);
        let colors = report.as_ref().ok().and_then(|r| r.coloring.as_ref()).map_or(0, VertexColoring::distinct_colors);
        let verified = report.as_ref().is_ok_and(|r| r.verified);
        let mut out = vec![check(
            "direct/complete-times-any",
            &name,
            format!("verified with at most {max_colors} colors"),
            format!("{colors} colors, verified={verified}"),
            verified && colors as u32 <= *max_colors && colors > 0,
        )];
        let p = direct(&complete(*n), h).into_graph();
        if p.order() <= 14 {
            out.push(report_check("direct/complete-times-any-oracle", &name, report, Some(spvc(&p, 14))));
        }
        out
    }));

    let pvc_cases = [
        ("K3", complete(3), "K3", complete(3)),
        ("K3", complete(3), "P3", named("path:3")),
        ("K4", complete(4), "C5", named("cycle:5")),
    ];
    checks.par_extend(pvc_cases.par_iter().map(|(an, a, bn, b)| {
        let p = direct(a, b).into_graph();
        let oracle = (p.order() <= 16).then(|| pvck(&p, 1, 16));
        report_check("direct/pvc", &pair_name(ProductKind::Direct, an, bn), direct_pvc_spvc(a, b), oracle)
    }));
    checks
}

fn random_coloring(rng: &mut ChaCha8Rng, n: usize) -> VertexColoring {
    let palette = rng.gen_range(1..=3u32);
    VertexColoring::new((0..n).map(|_| rng.gen_range(1..=palette)).collect()).expect("nonempty, positive colors")
}

fn verifier_cross_validation(opts: &SuiteOptions) -> Vec<Check> {
    let graphs = connected_up_to(opts.max_n, 2);
    graphs
        .par_iter()
        .enumerate()
        .map(|(index, g)| {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(index as u64));
            let n = g.order();
            let mut compared = 0usize;
            let mut disagreement = None;
            'colorings: for _ in 0..RANDOM_COLORINGS {
                let c = random_coloring(&mut rng, n);
                for u in 0..n {
                    for v in u + 1..n {
                        let path =
                            exists_proper_path(g, &c, u, v).ok() == Some(exhaustive::proper_path_exists(g, &c, u, v));
                        let geo = exists_proper_geodesic(g, &c, u, v).ok()
                            == Some(exhaustive::proper_geodesic_exists(g, &c, u, v));
                        compared += 1;
                        if !(path && geo) {
                            disagreement = Some(format!("colors {:?} pair {:?}", c.colors(), (u, v)));
                            break 'colorings;
                        }
                    }
                }
            }
            let got = disagreement.clone().unwrap_or_else(|| format!("agree on {compared} colored pairs"));
            let expected = format!("agree on {} colored pairs", RANDOM_COLORINGS * n * (n - 1) / 2);
            check("verifier-cross-validation", emit_graph6(g), expected, got, disagreement.is_none())
        })
        .collect()
}

fn graph6_round_trip(opts: &SuiteOptions) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut identical = 0;
    let mut first_failure = None;
    for _ in 0..ROUND_TRIP_GRAPHS {
        let n = rng.gen_range(1..=ROUND_TRIP_MAX_ORDER);
        let density: f64 = rng.gen();
        let mut edges = Vec::new();
        for v in 1..n {
            for u in 0..v {
                if rng.gen_bool(density) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).expect("valid edges");
        let text = emit_graph6(&g);
        let ok = parse_graph6(&text).is_ok_and(|back| back.same_edges(&g) && emit_graph6(&back) == text);
        if ok {
            identical += 1;
        } else if first_failure.is_none() {
            first_failure = Some(text);
        }
    }
    let got = match first_failure {
        None => format!("{identical} identical"),
        Some(text) => format!("{identical} identical, first failure {text}"),
    };
    vec![check(
        "graph6-round-trip",
        format!("{ROUND_TRIP_GRAPHS} random graphs, n <= {ROUND_TRIP_MAX_ORDER}"),
        format!("{ROUND_TRIP_GRAPHS} identical"),
        got,
        identical == ROUND_TRIP_GRAPHS,
    )]
}
