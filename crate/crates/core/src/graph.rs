//! Edge-colored graphs and the flip (exchange) graphs of triangulations.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::hash::Hash;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::color::ColorId;
use crate::triangulation::{
    enumerate_colored_triangulations, enumerate_triangulations, ColoredTriangulation, Polygon, Triangulation,
    TriangulationError,
};
use crate::union_find::UnionFind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {0} is a loop at vertex {1}")]
    Loop(usize, u32),
    #[error("vertices {0} and {1} are joined by more than one edge")]
    MultiEdge(u32, u32),
    #[error("edge {0} references vertex {1}, but the graph has {2} vertices")]
    VertexOutOfRange(usize, u32, usize),
    #[error("{edges} edges but {colors} edge colors")]
    ColorCountMismatch { edges: usize, colors: usize },
    #[error("edge {0} has color {1}, which is not in the color set")]
    UnknownColor(usize, ColorId),
    #[error("malformed graph JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Triangulation(#[from] TriangulationError),
}

/// A finite simple graph, optionally with an edge coloring `f: E -> R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    labels: Vec<String>,
    edges: Vec<(u32, u32)>,
    edge_colors: Option<Vec<ColorId>>,
    color_set: Vec<ColorId>,
    /// `(neighbor, edge index)` per vertex, sorted by neighbor.
    adjacency: Vec<Vec<(u32, u32)>>,
}

impl ColoredGraph {
    /// A colored graph; the color set is the set of colors actually used.
    pub fn new(num_vertices: usize, edges: Vec<(u32, u32, ColorId)>) -> Result<Self, GraphError> {
        let mut color_set: Vec<ColorId> = edges.iter().map(|e| e.2).collect();
        color_set.sort_unstable();
        color_set.dedup();
        let (pairs, colors) = edges.into_iter().map(|(u, v, c)| ((u, v), c)).unzip();
        Self::assemble(num_vertices, pairs, Some(colors), color_set)
    }

    pub fn uncolored(num_vertices: usize, edges: Vec<(u32, u32)>) -> Result<Self, GraphError> {
        Self::assemble(num_vertices, edges, None, Vec::new())
    }

    fn assemble(
        num_vertices: usize,
        edges: Vec<(u32, u32)>,
        edge_colors: Option<Vec<ColorId>>,
        mut color_set: Vec<ColorId>,
    ) -> Result<Self, GraphError> {
        if let Some(colors) = &edge_colors {
            if colors.len() != edges.len() {
                return Err(GraphError::ColorCountMismatch {
                    edges: edges.len(),
                    colors: colors.len(),
                });
            }
            color_set.sort_unstable();
            color_set.dedup();
            if let Some((i, c)) = colors.iter().enumerate().find(|(_, c)| color_set.binary_search(c).is_err()) {
                return Err(GraphError::UnknownColor(i, *c));
            }
        }
        let mut adjacency = vec![Vec::new(); num_vertices];
        let mut normalized = Vec::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x as usize >= num_vertices {
                    return Err(GraphError::VertexOutOfRange(i, x, num_vertices));
                }
            }
            if u == v {
                return Err(GraphError::Loop(i, u));
            }
            adjacency[u as usize].push((v, i as u32));
            adjacency[v as usize].push((u, i as u32));
            normalized.push((u.min(v), u.max(v)));
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(GraphError::MultiEdge(u as u32, w[0].0));
            }
        }
        Ok(ColoredGraph {
            labels: (0..num_vertices).map(|v| v.to_string()).collect(),
            edges: normalized,
            edge_colors,
            color_set,
            adjacency,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.num_vertices());
        self.labels = labels;
        self
    }

    pub fn num_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn is_colored(&self) -> bool {
        self.edge_colors.is_some()
    }

    pub fn edge_color(&self, e: u32) -> Option<ColorId> {
        self.edge_colors.as_ref().map(|c| c[e as usize])
    }

    pub fn color_set(&self) -> &[ColorId] {
        &self.color_set
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `(neighbor, edge index)` pairs, sorted by neighbor.
    pub fn neighbors(&self, v: u32) -> &[(u32, u32)] {
        &self.adjacency[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adjacency[v as usize].len()
    }

    pub fn edge_between(&self, u: u32, v: u32) -> Option<u32> {
        let list = &self.adjacency[u as usize];
        list.binary_search_by_key(&v, |&(w, _)| w).ok().map(|k| list[k].1)
    }

    /// The neighbor of `v` across its edge of color `c`, if any.
    pub fn neighbor_by_color(&self, v: u32, c: ColorId) -> Option<u32> {
        let colors = self.edge_colors.as_ref()?;
        self.adjacency[v as usize]
            .iter()
            .find(|&&(_, e)| colors[e as usize] == c)
            .map(|&(w, _)| w)
    }

    /// Checks the hypotheses of the colorful-polytope construction and
    /// reports what holds.
    pub fn validate(&self) -> GraphReport {
        let mut degree_profile = BTreeMap::new();
        for list in &self.adjacency {
            *degree_profile.entry(list.len()).or_insert(0) += 1;
        }
        let is_regular = degree_profile.len() <= 1;
        let regularity = if is_regular {
            Some(degree_profile.keys().next().copied().unwrap_or(0))
        } else {
            None
        };
        let max_degree = degree_profile.keys().next_back().copied().unwrap_or(0);

        let mut uf = UnionFind::new(self.num_vertices());
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        let is_connected = uf.components() <= 1;

        let (proper, violation, colors_used) = match &self.edge_colors {
            None => (None, None, None),
            Some(colors) => {
                let mut violation = None;
                'outer: for (v, list) in self.adjacency.iter().enumerate() {
                    let mut seen: Vec<ColorId> = list.iter().map(|&(_, e)| colors[e as usize]).collect();
                    seen.sort_unstable();
                    for w in seen.windows(2) {
                        if w[0] == w[1] {
                            violation = Some(ColorViolation {
                                vertex: v as u32,
                                color: w[0],
                            });
                            break 'outer;
                        }
                    }
                }
                let mut used = colors.clone();
                used.sort_unstable();
                used.dedup();
                (Some(violation.is_none()), violation, Some(used.len()))
            }
        };
        let chromatic_index_witness = match (proper, colors_used) {
            (Some(true), Some(k)) if k == max_degree => Some(k),
            _ => None,
        };
        GraphReport {
            num_vertices: self.num_vertices(),
            num_edges: self.num_edges(),
            degree_profile,
            is_regular,
            regularity,
            proper,
            first_violation: violation,
            colors_used,
            chromatic_index_witness,
            is_connected,
        }
    }

    /// True when every color class is a perfect matching.
    pub fn color_classes_are_perfect_matchings(&self) -> bool {
        let Some(colors) = &self.edge_colors else {
            return false;
        };
        self.adjacency.iter().all(|list| {
            let mut seen: Vec<ColorId> = list.iter().map(|&(_, e)| colors[e as usize]).collect();
            seen.sort_unstable();
            seen == self.color_set
        })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for (v, label) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  {v} [label=\"{}\"];", label.replace('"', "\\\""));
        }
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            match self.edge_color(i as u32) {
                Some(c) => {
                    let _ = writeln!(out, "  {u} -- {v} [color=\"{c}\"];");
                }
                None => {
                    let _ = writeln!(out, "  {u} -- {v};");
                }
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json_value(&self) -> GraphJson {
        GraphJson {
            vertices: self.labels.clone(),
            edges: self.edges.clone(),
            edge_color: self.edge_colors.clone(),
            color_set: self.edge_colors.as_ref().map(|_| self.color_set.clone()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    pub fn from_json_str(input: &str) -> Result<Self, GraphError> {
        let raw: GraphJson = serde_json::from_str(input).map_err(|e| GraphError::Json(e.to_string()))?;
        raw.into_graph()
    }
}

/// JSON form of [`ColoredGraph`]: `{"vertices": [labels], "edges": [[u,v],...],
/// "edge_color": [c,...], "color_set": [c,...]}`. Colors are integers or `"c*"`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<(u32, u32)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_color: Option<Vec<ColorId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color_set: Option<Vec<ColorId>>,
}

impl GraphJson {
    pub fn into_graph(self) -> Result<ColoredGraph, GraphError> {
        let n = self.vertices.len();
        let graph = match self.edge_color {
            None => ColoredGraph::uncolored(n, self.edges)?,
            Some(colors) => {
                let color_set = self.color_set.unwrap_or_else(|| colors.clone());
                ColoredGraph::assemble(n, self.edges, Some(colors), color_set)?
            }
        };
        Ok(graph.with_labels(self.vertices))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ColorViolation {
    pub vertex: u32,
    pub color: ColorId,
}

/// Result of [`ColoredGraph::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphReport {
    pub num_vertices: usize,
    pub num_edges: usize,
    /// degree -> number of vertices with that degree
    pub degree_profile: BTreeMap<usize, usize>,
    pub is_regular: bool,
    pub regularity: Option<usize>,
    /// `None` for uncolored graphs.
    pub proper: Option<bool>,
    pub first_violation: Option<ColorViolation>,
    pub colors_used: Option<usize>,
    /// Number of colors when the coloring is proper and uses exactly
    /// max-degree colors, which certifies chromatic index = max degree.
    pub chromatic_index_witness: Option<usize>,
    pub is_connected: bool,
}

impl GraphReport {
    /// `None` when the graph is a finite connected properly edge colored
    /// regular graph; otherwise the first unmet hypothesis.
    pub fn hypothesis_failure(&self) -> Option<String> {
        if self.proper.is_none() {
            return Some("graph has no edge coloring".into());
        }
        if let Some(v) = self.first_violation {
            return Some(format!(
                "proper coloring violated at vertex {}: color {} appears on two edges",
                v.vertex, v.color
            ));
        }
        if !self.is_regular {
            return Some(format!("graph is not regular: degree profile {:?}", self.degree_profile));
        }
        if self.chromatic_index_witness.is_none() {
            return Some(format!(
                "coloring uses {} colors but the degree is {}",
                self.colors_used.unwrap_or(0),
                self.regularity.unwrap_or(0)
            ));
        }
        if !self.is_connected {
            return Some("graph is not connected".into());
        }
        None
    }
}

/// An exchange graph together with the triangulation behind each vertex.
#[derive(Clone, Debug)]
pub struct ExchangeGraph<T> {
    graph: ColoredGraph,
    vertices: Vec<T>,
    index: HashMap<T, u32>,
}

impl<T: Clone + Eq + Hash> ExchangeGraph<T> {
    pub fn graph(&self) -> &ColoredGraph {
        &self.graph
    }

    pub fn vertices(&self) -> &[T] {
        &self.vertices
    }

    pub fn vertex(&self, v: u32) -> &T {
        &self.vertices[v as usize]
    }

    pub fn index_of(&self, t: &T) -> Option<u32> {
        self.index.get(t).copied()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

fn assemble_exchange<T, F>(vertices: Vec<T>, moves: F, colored: bool) -> ExchangeGraph<T>
where
    T: Clone + Eq + Hash + Sync + Send + ToString,
    F: Fn(&T) -> Vec<(Option<ColorId>, T)> + Sync,
{
    let index: HashMap<T, u32> = vertices.iter().cloned().enumerate().map(|(i, t)| (t, i as u32)).collect();
    let expansions: Vec<Vec<(Option<ColorId>, u32)>> = vertices
        .par_iter()
        .map(|t| {
            moves(t)
                .into_iter()
                .map(|(c, s)| (c, *index.get(&s).expect("flip stays inside the vertex set")))
                .collect()
        })
        .collect();
    let mut edges = Vec::new();
    let mut colors = Vec::new();
    for (u, list) in expansions.iter().enumerate() {
        for &(c, v) in list {
            if (u as u32) < v {
                edges.push((u as u32, v));
                colors.push(c.unwrap_or(ColorId::UNCOLOR));
            }
        }
    }
    let labels = vertices.iter().map(|t| t.to_string()).collect();
    let graph = if colored {
        let mut color_set = colors.clone();
        color_set.sort_unstable();
        color_set.dedup();
        ColoredGraph::assemble(vertices.len(), edges, Some(colors), color_set)
    } else {
        ColoredGraph::uncolored(vertices.len(), edges)
    }
    .expect("exchange graphs are simple")
    .with_labels(labels);
    ExchangeGraph { graph, vertices, index }
}

/// The uncolored flip graph on all triangulations of the `(n+3)`-gon.
pub fn build_uncolored_exchange_graph(n: usize) -> Result<ExchangeGraph<Triangulation>, GraphError> {
    let polygon = Polygon::associahedron(n)?;
    Ok(uncolored_flip_graph(polygon))
}

/// The uncolored flip graph on the centrally symmetric triangulations of the
/// `(2n+4)`-gon (the skeleton of the ordinary cyclohedron).
pub fn build_uncolored_cyclohedron_exchange_graph(n: usize) -> Result<ExchangeGraph<Triangulation>, GraphError> {
    let polygon = Polygon::cyclohedron(n)?;
    Ok(uncolored_flip_graph(polygon))
}

fn uncolored_flip_graph(polygon: Polygon) -> ExchangeGraph<Triangulation> {
    let vertices = enumerate_triangulations(polygon);
    assemble_exchange(
        vertices,
        |t| t.neighbors().into_iter().map(|s| (None, s)).collect(),
        false,
    )
}

fn colored_flip_graph(polygon: Polygon) -> ExchangeGraph<ColoredTriangulation> {
    let vertices = enumerate_colored_triangulations(polygon, polygon.color_count()).expect("color count matches");
    assemble_exchange(
        vertices,
        |t| t.neighbors().into_iter().map(|(c, s)| (Some(c), s)).collect(),
        true,
    )
}

/// The colorful exchange graph: colored triangulations of the `(n+3)`-gon,
/// joined by flips and colored by the flipped diagonal's color.
pub fn build_colorful_exchange_graph(n: usize) -> Result<ExchangeGraph<ColoredTriangulation>, GraphError> {
    Ok(colored_flip_graph(Polygon::associahedron(n)?))
}

/// The colorful exchange graph of the centrally symmetric `(2n+4)`-gon.
/// Central flips are colored with [`ColorId::UNCOLOR`].
pub fn build_cyclohedron_exchange_graph(n: usize) -> Result<ExchangeGraph<ColoredTriangulation>, GraphError> {
    Ok(colored_flip_graph(Polygon::cyclohedron(n)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_multi_edges() {
        assert_eq!(
            ColoredGraph::new(2, vec![(1, 1, ColorId(0))]),
            Err(GraphError::Loop(0, 1))
        );
        assert_eq!(
            ColoredGraph::new(2, vec![(0, 1, ColorId(0)), (1, 0, ColorId(1))]),
            Err(GraphError::MultiEdge(0, 1))
        );
        assert!(matches!(
            ColoredGraph::new(2, vec![(0, 2, ColorId(0))]),
            Err(GraphError::VertexOutOfRange(0, 2, 2))
        ));
    }

    #[test]
    fn same_colored_edges_at_a_vertex_are_improper() {
        let g = ColoredGraph::new(3, vec![(0, 1, ColorId(0)), (1, 2, ColorId(0))]).unwrap();
        let r = g.validate();
        assert_eq!(r.proper, Some(false));
        assert_eq!(r.first_violation.unwrap().vertex, 1);
        assert!(r.hypothesis_failure().unwrap().contains("proper coloring violated at vertex 1"));
    }

    #[test]
    fn disjoint_edges_are_proper_but_disconnected() {
        let g = ColoredGraph::new(4, vec![(0, 1, ColorId(0)), (2, 3, ColorId(0))]).unwrap();
        let r = g.validate();
        assert_eq!(r.proper, Some(true));
        assert!(!r.is_connected);
        assert_eq!(r.regularity, Some(1));
        assert_eq!(r.chromatic_index_witness, Some(1));
        assert_eq!(r.hypothesis_failure().as_deref(), Some("graph is not connected"));
    }

    #[test]
    fn small_exchange_graphs() {
        let g0 = build_uncolored_exchange_graph(0).unwrap();
        assert_eq!((g0.graph().num_vertices(), g0.graph().num_edges()), (1, 0));
        let g2 = build_uncolored_exchange_graph(2).unwrap();
        let r = g2.graph().validate();
        assert_eq!((r.num_vertices, r.num_edges, r.regularity), (5, 5, Some(2)));
        assert!(r.is_connected);
        let c1 = build_colorful_exchange_graph(1).unwrap();
        assert_eq!((c1.graph().num_vertices(), c1.graph().num_edges()), (2, 1));
        let h1 = build_cyclohedron_exchange_graph(1).unwrap();
        let r = h1.graph().validate();
        assert_eq!((r.num_vertices, r.num_edges, r.regularity), (6, 6, Some(2)));
        assert_eq!(r.chromatic_index_witness, Some(2));
        assert!(build_cyclohedron_exchange_graph(0).is_err());
    }

    #[test]
    fn json_and_dot_export() {
        let g = build_colorful_exchange_graph(2).unwrap();
        let json = g.graph().to_json();
        let back = ColoredGraph::from_json_str(&json).unwrap();
        assert_eq!(&back, g.graph());
        let dot = g.graph().to_dot();
        assert_eq!(dot.matches(" -- ").count(), 10);
        assert!(dot.contains("color=\"1\""));
        let h = build_cyclohedron_exchange_graph(1).unwrap();
        assert!(h.graph().to_json().contains("\"c*\""));
        assert!(matches!(
            ColoredGraph::from_json_str(r#"{"vertices":["a"],"edges":[[0,0]],"edge_color":[0]}"#),
            Err(GraphError::Loop(0, 0))
        ));
        assert!(matches!(
            ColoredGraph::from_json_str(r#"{"vertices":["a","b"],"edges":[[0,1]],"edge_color":[]}"#),
            Err(GraphError::ColorCountMismatch { .. })
        ));
        assert!(matches!(
            ColoredGraph::from_json_str(r#"{"vertices":["a","b"],"edges":[[0,1]],"edge_color":[3],"color_set":[0]}"#),
            Err(GraphError::UnknownColor(0, ColorId(3)))
        ));
    }
}
