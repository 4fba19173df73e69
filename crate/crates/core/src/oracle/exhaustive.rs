//! Path enumeration used as ground truth for the polynomial verifiers.

use crate::colorverify::VertexColoring;
use crate::graph::Graph;

/// Every simple `u`–`v` path, by depth-first enumeration.
pub fn all_simple_paths(g: &Graph, u: usize, v: usize) -> Vec<Vec<usize>> {
    fn walk(g: &Graph, v: usize, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let cur = *path.last().unwrap();
        if cur == v {
            out.push(path.clone());
            return;
        }
        for z in g.neighbors(cur) {
            if !on[z] {
                on[z] = true;
                path.push(z);
                walk(g, v, path, on, out);
                path.pop();
                on[z] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut on = vec![false; g.order()];
    on[u] = true;
    walk(g, v, &mut vec![u], &mut on, &mut out);
    out
}

/// Every shortest `u`–`v` path.
pub fn all_geodesics(g: &Graph, u: usize, v: usize) -> Vec<Vec<usize>> {
    let Some(d) = g.bfs(u)[v].finite() else {
        return Vec::new();
    };
    all_simple_paths(g, u, v).into_iter().filter(|p| p.len() == d as usize + 1).collect()
}

/// Literal reading of the definition: consecutive internal vertices differ.
pub fn is_proper_by_definition(c: &VertexColoring, path: &[usize]) -> bool {
    path.len() < 4 || path[1..path.len() - 1].windows(2).all(|w| c.color(w[0]) != c.color(w[1]))
}

/// Ground truth for "some vertex-proper path exists".
pub fn proper_path_exists(g: &Graph, c: &VertexColoring, u: usize, v: usize) -> bool {
    all_simple_paths(g, u, v).iter().any(|p| is_proper_by_definition(c, p))
}

/// Ground truth for "some vertex-proper geodesic exists".
pub fn proper_geodesic_exists(g: &Graph, c: &VertexColoring, u: usize, v: usize) -> bool {
    all_geodesics(g, u, v).iter().any(|p| is_proper_by_definition(c, p))
}

/// Ground truth for k internally disjoint vertex-proper paths: tries every
/// k-subset of proper simple paths.
pub fn k_disjoint_proper_exists(g: &Graph, c: &VertexColoring, u: usize, v: usize, k: usize) -> bool {
    let proper: Vec<Vec<usize>> =
        all_simple_paths(g, u, v).into_iter().filter(|p| is_proper_by_definition(c, p)).collect();
    fn pick(paths: &[Vec<usize>], start: usize, k: usize, used: &mut Vec<bool>) -> bool {
        if k == 0 {
            return true;
        }
        for i in start..paths.len() {
            let inner = &paths[i][1..paths[i].len() - 1];
            if inner.iter().any(|&x| used[x]) {
                continue;
            }
            inner.iter().for_each(|&x| used[x] = true);
            let ok = pick(paths, i + 1, k - 1, used);
            inner.iter().for_each(|&x| used[x] = false);
            if ok {
                return true;
            }
        }
        false
    }
    pick(&proper, 0, k, &mut vec![false; g.order()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn path_counts() {
        assert_eq!(all_simple_paths(&cycle(6), 0, 3).len(), 2);
        // K4: 1 direct + 2 of length 2 + 2 of length 3
        assert_eq!(all_simple_paths(&complete(4), 0, 1).len(), 5);
        assert_eq!(all_geodesics(&cycle(4), 0, 2).len(), 2);
        assert_eq!(all_simple_paths(&path(4), 0, 3), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn monochromatic_p4_has_no_proper_end_to_end_path() {
        assert!(!proper_path_exists(&path(4), &VertexColoring::monochromatic(4), 0, 3));
        assert!(!k_disjoint_proper_exists(&cycle(6), &VertexColoring::monochromatic(6), 0, 3, 2));
    }
}
