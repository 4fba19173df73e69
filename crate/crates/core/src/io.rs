//! File formats: coloring documents, product sidecars, and DOT export.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::colorverify::VertexColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::products::{JoinSide, ProductGraph, ProductKind};

/// A coloring on disk: `colors[v]` is the color of vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDocument {
    pub n: usize,
    pub colors: Vec<u32>,
    pub palette: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<ColoringMeta>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringMeta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem_id: Option<String>,
    /// graph6 encodings of the factors.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub factors: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<ProductKind>,
}

impl ColoringDocument {
    pub fn new(coloring: &VertexColoring, meta: Option<ColoringMeta>) -> Self {
        ColoringDocument {
            n: coloring.len(),
            colors: coloring.colors().to_vec(),
            palette: coloring.palette_size(),
            meta,
        }
    }

    /// Checks `n` and `palette` against the color list.
    pub fn to_coloring(&self) -> Result<VertexColoring> {
        if self.colors.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: self.colors.len() });
        }
        let coloring = VertexColoring::new(self.colors.clone())?;
        if coloring.palette_size() != self.palette {
            return Err(Error::Precondition(format!(
                "palette {} does not match the largest color {}",
                self.palette,
                coloring.palette_size()
            )));
        }
        Ok(coloring)
    }
}

/// Metadata written next to a product's graph6 file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductSidecar {
    pub kind: ProductKind,
    pub left: String,
    pub right: String,
    pub order: usize,
    /// Per product vertex: `[g, h]` for products, `[side, i]` for joins with
    /// side 0 for the left graph.
    pub index: Vec<[usize; 2]>,
}

impl ProductSidecar {
    pub fn new(product: &ProductGraph, left: &Graph, right: &Graph) -> Self {
        let order = product.graph.order();
        let index = (0..order)
            .map(|v| match product.kind {
                ProductKind::Join => match product.join_side(v) {
                    JoinSide::Left(i) => [0, i],
                    JoinSide::Right(i) => [1, i],
                },
                _ => {
                    let (g, h) = product.coords(v);
                    [g, h]
                }
            })
            .collect();
        ProductSidecar { kind: product.kind, left: emit_graph6(left), right: emit_graph6(right), order, index }
    }
}

const FILLS: [&str; 8] = ["#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5"];

/// Graphviz rendering; colors become fill colors and appear in the labels.
pub fn to_dot(g: &Graph, coloring: Option<&VertexColoring>) -> String {
    let mut out = String::from("graph G {\n  node [style=filled];\n");
    for v in 0..g.order() {
        let name = g.label(v).map_or_else(|| v.to_string(), str::to_string);
        match coloring {
            Some(c) => {
                let color = c.color(v);
                let fill = FILLS[(color as usize - 1) % FILLS.len()];
                let _ = writeln!(out, "  {v} [label=\"{name} c{color}\", fillcolor=\"{fill}\"];");
            }
            None => {
                let _ = writeln!(out, "  {v} [label=\"{name}\", fillcolor=\"white\"];");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::products::{join, lexicographic};

    #[test]
    fn coloring_document_round_trip() {
        let c = VertexColoring::new(vec![1, 1, 2, 1]).unwrap();
        let doc = ColoringDocument::new(&c, None);
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(text, r#"{"n":4,"colors":[1,1,2,1],"palette":2}"#);
        let back: ColoringDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_coloring().unwrap(), c);
    }

    #[test]
    fn inconsistent_documents_rejected() {
        let short = ColoringDocument { n: 3, colors: vec![1, 2], palette: 2, meta: None };
        assert!(matches!(short.to_coloring(), Err(Error::DimensionMismatch { .. })));
        let wrong_palette = ColoringDocument { n: 2, colors: vec![1, 2], palette: 3, meta: None };
        assert!(wrong_palette.to_coloring().is_err());
    }

    #[test]
    fn sidecar_index() {
        let (g, h) = (complete(2), path(3));
        let p = lexicographic(&g, &h);
        let s = ProductSidecar::new(&p, &g, &h);
        assert_eq!(s.index[4], [1, 1]);
        assert_eq!(s.order, 6);
        let j = join(&g, &h);
        assert_eq!(ProductSidecar::new(&j, &g, &h).index[2], [1, 0]);
    }

    #[test]
    fn dot_output() {
        let dot = to_dot(&path(2), Some(&VertexColoring::new(vec![1, 2]).unwrap()));
        assert!(dot.contains("0 -- 1;"));
        assert!(dot.contains("fillcolor=\"#ffffb3\""));
    }
}
