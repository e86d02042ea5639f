//! The colorful polytope of a properly edge-colored regular graph.
//!
//! For a color subset `C`, two vertices are `C`-equivalent when a path using
//! only colors from `C` joins them. Faces of rank `|C|` are the pairs
//! `(C, class)`, and `(C, x) <= (C', y)` when `C ⊆ C'` and the class of `x`
//! lies in the class of `y`.

use itertools::Itertools;
use thiserror::Error;

use crate::color::ColorId;
use crate::graph::ColoredGraph;
use crate::poset::{FaceId, FaceLabel, PosetError, RankedPoset};
use crate::union_find::UnionFind;

pub const MAX_COLORS: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("{0}")]
    Hypothesis(String),
    #[error("{0} colors exceed the supported maximum of {MAX_COLORS}")]
    TooManyColors(usize),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

#[derive(Clone, Debug)]
pub struct ColorfulPolytope {
    poset: RankedPoset,
    colors: Vec<ColorId>,
    /// `face_of[mask][v]`: the face `(C, class of v)` for the color subset
    /// encoded by `mask` over `colors`.
    face_of: Vec<Vec<FaceId>>,
    face_mask: Vec<u32>,
}

impl ColorfulPolytope {
    /// Builds the colorful polytope after checking that the graph is finite,
    /// connected, regular and properly edge colored.
    pub fn build(graph: &ColoredGraph) -> Result<Self, PolytopeError> {
        if let Some(reason) = graph.validate().hypothesis_failure() {
            return Err(PolytopeError::Hypothesis(reason));
        }
        let colors = graph.color_set().to_vec();
        let n = colors.len();
        if n > MAX_COLORS {
            return Err(PolytopeError::TooManyColors(n));
        }
        let nv = graph.num_vertices();
        let by_color: Vec<Vec<(u32, u32)>> = (0..n)
            .map(|c| {
                (0..graph.num_edges() as u32)
                    .filter(|&e| graph.edge_color(e) == Some(colors[c]))
                    .map(|e| graph.edges()[e as usize])
                    .collect()
            })
            .collect();

        // Class labels (smallest member) per mask, built from the mask
        // without its highest color.
        let masks = 1usize << n;
        let mut labels: Vec<Vec<u32>> = Vec::with_capacity(masks);
        labels.push((0..nv as u32).collect());
        for mask in 1..masks {
            let high = usize::BITS - 1 - mask.leading_zeros();
            let base = &labels[mask & !(1 << high)];
            let mut uf = UnionFind::new(nv);
            for (v, &l) in base.iter().enumerate() {
                uf.union(v as u32, l);
            }
            for &(a, b) in &by_color[high as usize] {
                uf.union(a, b);
            }
            labels.push(uf.min_labels());
        }

        let mut faces = vec![(-1, FaceLabel::Minimum)];
        let mut face_mask = vec![0u32];
        let mut face_of = vec![Vec::new(); masks];
        let mut order: Vec<usize> = (0..masks).collect();
        order.sort_by_key(|&m| (m.count_ones(), m));
        for &mask in &order {
            let set: Vec<ColorId> = (0..n).filter(|c| mask >> c & 1 == 1).map(|c| colors[c]).collect();
            let mut ids = vec![FaceId::MAX; nv];
            for v in 0..nv {
                let rep = labels[mask][v] as usize;
                if ids[rep] == FaceId::MAX {
                    ids[rep] = faces.len() as FaceId;
                    faces.push((
                        mask.count_ones() as i32,
                        FaceLabel::Colorful {
                            colors: set.clone(),
                            representative: rep as u32,
                        },
                    ));
                    face_mask.push(mask as u32);
                }
                ids[v] = ids[rep];
            }
            face_of[mask] = ids;
        }

        let mut covers: Vec<(FaceId, FaceId)> = (0..nv).map(|v| (0, face_of[0][v])).collect();
        for mask in 0..masks {
            for c in (0..n).filter(|c| mask >> c & 1 == 0) {
                let upper = mask | 1 << c;
                for v in 0..nv {
                    if labels[mask][v] == v as u32 {
                        covers.push((face_of[mask][v], face_of[upper][v]));
                    }
                }
            }
        }
        let poset = RankedPoset::from_covers(n as i32, faces, covers)?;
        Ok(ColorfulPolytope {
            poset,
            colors,
            face_of,
            face_mask,
        })
    }

    pub fn poset(&self) -> &RankedPoset {
        &self.poset
    }

    pub fn into_poset(self) -> RankedPoset {
        self.poset
    }

    pub fn colors(&self) -> &[ColorId] {
        &self.colors
    }

    pub fn rank(&self) -> usize {
        self.colors.len()
    }

    pub fn color_mask(&self, set: &[ColorId]) -> Option<usize> {
        set.iter().try_fold(0usize, |m, c| {
            self.colors.iter().position(|x| x == c).map(|i| m | 1 << i)
        })
    }

    /// The face `(C, class of v)`.
    pub fn face_containing(&self, set: &[ColorId], v: u32) -> Option<FaceId> {
        let mask = self.color_mask(set)?;
        self.face_of[mask].get(v as usize).copied()
    }

    /// The colors of a face; empty for the least face and for vertices.
    pub fn face_colors(&self, f: FaceId) -> Vec<ColorId> {
        let mask = self.face_mask[f as usize];
        (0..self.colors.len()).filter(|c| mask >> c & 1 == 1).map(|c| self.colors[c]).collect()
    }

    /// The `C`-equivalence class of `v`.
    pub fn class_of(&self, set: &[ColorId], v: u32) -> Option<&[u32]> {
        self.face_containing(set, v).map(|f| self.poset.face(f).vertices.as_slice())
    }

    /// The `R \ {c}` facets, in order of their smallest vertex.
    pub fn facets_missing(&self, c: ColorId) -> Vec<FaceId> {
        let rest: Vec<ColorId> = self.colors.iter().copied().filter(|&x| x != c).collect();
        let Some(mask) = self.color_mask(&rest) else {
            return Vec::new();
        };
        self.face_of[mask].iter().copied().unique().sorted().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check_axioms, ConnectivityMode};

    fn cycle(k: u32) -> ColoredGraph {
        let edges = (0..k).map(|v| (v, (v + 1) % k, ColorId((v % 2) as u16))).collect();
        ColoredGraph::new(k as usize, edges).unwrap()
    }

    #[test]
    fn even_cycle_gives_polygon() {
        let p = ColorfulPolytope::build(&cycle(6)).unwrap();
        assert_eq!(p.poset().f_vector(), vec![6, 6, 1]);
        assert!(check_axioms(p.poset(), ConnectivityMode::Exhaustive).all_passed());
        let e = p.face_containing(&[ColorId(1)], 2).unwrap();
        assert_eq!(p.poset().face(e).vertices, vec![1, 2]);
        assert_eq!(p.class_of(&[ColorId(0)], 2).unwrap(), &[2, 3]);
        assert_eq!(p.face_colors(e), vec![ColorId(1)]);
        assert_eq!(p.facets_missing(ColorId(0)).len(), 3);
        assert!(p.face_containing(&[ColorId(9)], 0).is_none());
    }

    #[test]
    fn cube_graph_gives_cube() {
        let mut edges = Vec::new();
        for v in 0..8u32 {
            for axis in 0..3 {
                if v & 1 << axis == 0 {
                    edges.push((v, v | 1 << axis, ColorId(axis as u16)));
                }
            }
        }
        let p = ColorfulPolytope::build(&ColoredGraph::new(8, edges).unwrap()).unwrap();
        assert_eq!(p.poset().f_vector(), vec![8, 12, 6, 1]);
        assert!(check_axioms(p.poset(), ConnectivityMode::Exhaustive).all_passed());
    }

    #[test]
    fn rejects_improper_and_disconnected_graphs() {
        let bad = ColoredGraph::new(3, vec![(0, 1, ColorId(0)), (1, 2, ColorId(0))]).unwrap();
        let err = ColorfulPolytope::build(&bad).unwrap_err().to_string();
        assert!(err.contains("proper coloring violated at vertex 1"), "{err}");
        let two = ColoredGraph::new(4, vec![(0, 1, ColorId(0)), (2, 3, ColorId(0))]).unwrap();
        assert!(ColorfulPolytope::build(&two).unwrap_err().to_string().contains("not connected"));
    }
}
