use crate::colorverify::VertexColoring;
use crate::error::{Error, Result};
use crate::graph::{Distance, Graph, Parity, ParityDistance};
use crate::oracle::{brute_pvc_k, OracleConfig, DEFAULT_PVC_ORDER_CAP};
use crate::parameter::Parameter;
use crate::products::{direct, ProductGraph};

use super::support::{
    diam, no_template, require_connectivity, require_factor, tree_parity_coloring, tree_path_template, Draft,
};
use super::{Prediction, TheoremId, TheoremReport};

/// Node limit of the per-pair search for a factor sequence matching a lifted walk.
const LIFT_NODES: u32 = 100_000;

fn complete_graph(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Both factors have diameter at most 2 and every edge lies in a triangle;
/// exactly then the direct product has diameter 2.
pub(crate) fn diameter_two_condition(g: &Graph, h: &Graph) -> bool {
    diam(g) <= 2 && diam(h) <= 2 && g.every_edge_in_triangle() && h.every_edge_in_triangle()
}

/// pvc(G × H), and spvc where it equals 1.
///
/// The product has diameter 2 exactly under [`diameter_two_condition`], giving
/// pvc = spvc = 1; otherwise its diameter is at least 3 and pvc = 2. No
/// particular 2-coloring is singled out for that case, so one is taken from
/// exhaustive search when the product is small and from tree depth parity
/// when it is not.
pub fn direct_pvc_spvc(g: &Graph, h: &Graph) -> Result<TheoremReport> {
    require_factor(g, "left")?;
    require_factor(h, "right")?;
    if g.is_bipartite() && h.is_bipartite() {
        return Err(Error::Precondition("both factors are bipartite; the direct product is disconnected".into()));
    }
    let p = direct(g, h).into_graph();
    let id = TheoremId::DirectPvc;
    if diameter_two_condition(g, h) {
        return Draft::new(id, &[g, h], vec![Parameter::PVC, Parameter::Spvc], Prediction::Exact(1))
            .coloring(VertexColoring::monochromatic(p.order()))
            .finish(&p, &no_template);
    }
    let draft = Draft::new(id, &[g, h], vec![Parameter::PVC], Prediction::Exact(2));
    if p.order() <= DEFAULT_PVC_ORDER_CAP {
        let found = brute_pvc_k(&p, 1, &OracleConfig::default())?;
        let coloring = found.optimal_coloring.unwrap_or_else(|| VertexColoring::monochromatic(p.order()));
        return draft.coloring(coloring).note("coloring from exhaustive search").finish(&p, &no_template);
    }
    let tree = p.spanning_tree(0)?;
    let template = tree_path_template(&tree);
    draft.coloring(tree_parity_coloring(&p)?).note("coloring from tree depth parity").finish(&p, &template)
}

/// spvc and pvc₂ of K_n × K_m for n >= 2, m >= 3.
///
/// n >= 3: diameter 2 and one color, with two short paths for every pair.
/// n = 2: the product is K_{m,m} minus a perfect matching, diameter 3; coloring
/// by the K2 coordinate makes every path alternate.
pub fn direct_complete_cases(n: usize, m: usize) -> Result<TheoremReport> {
    if n < 2 || m < 3 {
        return Err(Error::Precondition(format!("need n >= 2 and m >= 3, got n = {n}, m = {m}")));
    }
    let (g, h) = (complete_graph(n)?, complete_graph(m)?);
    let product = direct(&g, &h);
    require_connectivity(&product.graph, 2)?;
    let params = vec![Parameter::PVC2, Parameter::Spvc];
    let (value, coloring) = if n >= 3 {
        (1, VertexColoring::monochromatic(product.graph.order()))
    } else {
        (2, VertexColoring::from_fn(product.graph.order(), |v| product.coords(v).0 as u32 + 1)?)
    };
    let template = |param: Parameter, u, v| match param {
        Parameter::Spvc => lift_geodesic(&product, &g, &h, &coloring, u, v),
        _ if n >= 3 => Some(complete_pair_paths(&product, u, v)),
        _ => Some(k2_pair_paths(&product, u, v)),
    };
    Draft::new(TheoremId::DirectCompleteFactors, &[&g, &h], params, Prediction::Exact(value))
        .coloring(coloring.clone())
        .finish(&product.graph, &template)
}

/// spvc(K_n × H) for connected H with diam(H) >= 2.
///
/// - n = 2 (H nonbipartite): 2, coloring by the K2 coordinate.
/// - n >= 3 with diam(H) = 2 and every edge of H in a triangle: 1.
/// - n >= 4 otherwise: 2, color 1 on odd 1-based K_n indices.
/// - n = 3, H a tree: 2, color 1 where the depth from vertex 0 of H is odd.
/// - n = 3 otherwise: between 2 and 3, coloring by the K3 coordinate.
///
/// Geodesics are shortest odd or even walks of H lifted into the product.
/// The product must be connected.
pub fn direct_kn_times_h(n: usize, h: &Graph) -> Result<TheoremReport> {
    require_factor(h, "right")?;
    if n < 2 {
        return Err(Error::Precondition(format!("need n >= 2, got {n}")));
    }
    if diam(h) < 2 {
        return Err(Error::Precondition("right factor must have diameter at least 2".into()));
    }
    let g = complete_graph(n)?;
    let product = direct(&g, h);
    if !product.graph.is_connected() {
        return Err(Error::Precondition("K_n × H is disconnected (H bipartite and n = 2)".into()));
    }
    let size = product.graph.order();
    let by_left = |f: &dyn Fn(usize) -> u32| VertexColoring::from_fn(size, |v| f(product.coords(v).0));
    let (predicted, coloring) = if n >= 3 && diameter_two_condition(&g, h) {
        (Prediction::Exact(1), VertexColoring::monochromatic(size))
    } else if n == 2 {
        (Prediction::Exact(2), by_left(&|x| x as u32 + 1)?)
    } else if n >= 4 {
        (Prediction::Exact(2), by_left(&|x| if x % 2 == 0 { 1 } else { 2 })?)
    } else if h.is_tree() {
        let depth = h.bfs(0);
        let odd = |y: usize| matches!(depth[y], Distance::Finite(d) if d % 2 == 1);
        (Prediction::Exact(2), VertexColoring::from_fn(size, |v| if odd(product.coords(v).1) { 1 } else { 2 })?)
    } else {
        (Prediction::interval(2, 3), by_left(&|x| x as u32 + 1)?)
    };
    let template = |_: Parameter, u, v| lift_geodesic(&product, &g, h, &coloring, u, v);
    Draft::new(TheoremId::DirectCompleteTimesAny, &[&g, h], vec![Parameter::Spvc], predicted)
        .coloring(coloring.clone())
        .finish(&product.graph, &template)
}

/// Two paths of length at most 2 in K_n × K_m, n, m >= 3.
fn complete_pair_paths(p: &ProductGraph, u: usize, v: usize) -> Vec<Vec<usize>> {
    let ((g, h), (g2, h2)) = (p.coords(u), p.coords(v));
    let avoid = |order: usize, skip: [usize; 2]| (0..order).filter(move |x| !skip.contains(x));
    if g == g2 {
        let mid = avoid(p.right_order, [h, h2]).next().unwrap();
        let mut sides = avoid(p.left_order, [g, g]);
        let (a, b) = (sides.next().unwrap(), sides.next().unwrap());
        vec![vec![u, p.vertex(a, mid), v], vec![u, p.vertex(b, mid), v]]
    } else if h == h2 {
        let mid = avoid(p.left_order, [g, g2]).next().unwrap();
        let mut sides = avoid(p.right_order, [h, h]);
        let (a, b) = (sides.next().unwrap(), sides.next().unwrap());
        vec![vec![u, p.vertex(mid, a), v], vec![u, p.vertex(mid, b), v]]
    } else {
        let (x, y) = (avoid(p.left_order, [g, g2]).next().unwrap(), avoid(p.right_order, [h, h2]).next().unwrap());
        vec![vec![u, v], vec![u, p.vertex(x, y), v]]
    }
}

/// Two paths in K2 × K_m, m >= 3, alternating between the two sides.
fn k2_pair_paths(p: &ProductGraph, u: usize, v: usize) -> Vec<Vec<usize>> {
    let ((g, h), (g2, h2)) = (p.coords(u), p.coords(v));
    let at = |a, b| p.vertex(a, b);
    let other = 1 - g;
    let spare = |skip: [usize; 2]| (0..p.right_order).filter(move |x| !skip.contains(x));
    if g == g2 {
        let s = spare([h, h2]).next().unwrap();
        vec![vec![u, at(other, s), v], vec![u, at(other, h2), at(g, s), at(other, h), v]]
    } else if h == h2 {
        let mut rest = spare([h, h]);
        let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
        vec![vec![u, at(g2, a), at(g, b), v], vec![u, at(g2, b), at(g, a), v]]
    } else {
        let s = spare([h, h2]).next().unwrap();
        vec![vec![u, v], vec![u, at(g2, s), at(g, h2), at(g2, h), at(g, s), v]]
    }
}

/// A vertex-proper geodesic obtained by lifting a shortest walk of the right
/// parity in the right factor and choosing left coordinates along it.
fn lift_geodesic(
    p: &ProductGraph,
    left: &Graph,
    right: &Graph,
    c: &VertexColoring,
    u: usize,
    v: usize,
) -> Option<Vec<Vec<usize>>> {
    let length = p.graph.bfs(u)[v].finite()? as usize;
    let ((_, h), (g2, h2)) = (p.coords(u), p.coords(v));
    let parity = if length.is_multiple_of(2) { Parity::Even } else { Parity::Odd };
    let mut walk = right.parity_walk(h, h2, parity).ok()??;
    if walk.len() - 1 > length {
        return None;
    }
    // pad by stepping back and forth at the end
    let turn = right.neighbors(h2).next()?;
    while walk.len() - 1 < length {
        walk.extend([turn, h2]);
    }
    let reach = left.parity_distances_from(g2);
    let mut search = Lift { p, left, c, walk: &walk, reach: &reach, target: v, budget: LIFT_NODES };
    let mut path = vec![u];
    search.extend(&mut path).then(|| vec![path])
}

struct Lift<'a> {
    p: &'a ProductGraph,
    left: &'a Graph,
    c: &'a VertexColoring,
    walk: &'a [usize],
    reach: &'a [ParityDistance],
    target: usize,
    budget: u32,
}

impl Lift<'_> {
    fn extend(&mut self, path: &mut Vec<usize>) -> bool {
        let t = path.len();
        let length = self.walk.len() - 1;
        let current = self.p.coords(*path.last().unwrap()).0;
        if t == length {
            let (g2, _) = self.p.coords(self.target);
            if self.left.has_edge(current, g2) {
                path.push(self.target);
                return true;
            }
            return false;
        }
        let remaining = (length - t) as u32;
        let parity = if remaining.is_multiple_of(2) { Parity::Even } else { Parity::Odd };
        for next in self.left.neighbors(current) {
            if self.budget == 0 {
                return false;
            }
            self.budget -= 1;
            if self.reach[next].get(parity) > Distance::Finite(remaining) {
                continue;
            }
            let w = self.p.vertex(next, self.walk[t]);
            if w == self.target || path.contains(&w) {
                continue;
            }
            if t >= 2 && self.c.color(path[t - 1]) == self.c.color(w) {
                continue;
            }
            path.push(w);
            if self.extend(path) {
                return true;
            }
            path.pop();
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn assert_templated(r: &TheoremReport, predicted: Prediction) {
        assert_eq!(r.predicted, predicted);
        assert!(r.verified, "{:?}", r.notes);
        assert_eq!(r.searched_witnesses, 0, "{:?}", r.notes);
    }

    #[test]
    fn pvc_examples() {
        let r = direct_pvc_spvc(&complete(3), &complete(3)).unwrap();
        assert_eq!((r.predicted, r.verified), (Prediction::Exact(1), true));
        for h in [path(3), cycle(5)] {
            let g = if h.order() == 3 { complete(3) } else { complete(4) };
            let r = direct_pvc_spvc(&g, &h).unwrap();
            assert_eq!((r.predicted, r.verified), (Prediction::Exact(2), true), "{:?}", r.notes);
        }
        assert!(direct_pvc_spvc(&path(3), &cycle(4)).is_err());
    }

    #[test]
    fn complete_factor_cases() {
        assert_templated(&direct_complete_cases(3, 3).unwrap(), Prediction::Exact(1));
        for m in 3..=5 {
            assert_templated(&direct_complete_cases(2, m).unwrap(), Prediction::Exact(2));
        }
        assert!(direct_complete_cases(2, 2).is_err());
    }

    #[test]
    fn complete_times_any() {
        assert_templated(&direct_kn_times_h(2, &cycle(5)).unwrap(), Prediction::Exact(2));
        assert_templated(&direct_kn_times_h(4, &cycle(5)).unwrap(), Prediction::Exact(2));
        assert_templated(&direct_kn_times_h(3, &path(4)).unwrap(), Prediction::Exact(2));
        let chorded = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        assert_templated(&direct_kn_times_h(3, &chorded).unwrap(), Prediction::interval(2, 3));
        assert!(direct_kn_times_h(2, &path(4)).is_err());
        assert!(direct_kn_times_h(3, &complete(3)).is_err());
    }
}
