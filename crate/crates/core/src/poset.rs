//! Finite ranked posets with a least and a greatest face.
//!
//! Faces are addressed by [`FaceId`]. The order is stored as its Hasse
//! diagram (covers between consecutive ranks). Every face also records the
//! indices of the rank-0 faces below it.

use std::collections::VecDeque;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::color::ColorId;
use crate::triangulation::Diagonal;

pub type FaceId = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("face {0} has rank {1}, outside -1..={2}")]
    RankOutOfRange(FaceId, i32, i32),
    #[error("expected exactly one face of rank {0}, found {1}")]
    NotUnique(i32, usize),
    #[error("cover {0} < {1} does not join consecutive ranks")]
    CoverRankGap(FaceId, FaceId),
    #[error("cover references unknown face {0}")]
    UnknownFace(FaceId),
    #[error("duplicate cover {0} < {1}")]
    DuplicateCover(FaceId, FaceId),
}

/// How a face was produced; used for stable identity keys in exports.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FaceLabel {
    Minimum,
    /// A colorful face `(C, v)` with `v` the smallest vertex of its class.
    Colorful { colors: Vec<ColorId>, representative: u32 },
    /// A face of an ordinary associahedron or cyclohedron: the triangulations
    /// containing these diagonals.
    FixedDiagonals(Vec<Diagonal>),
    /// An orbit of faces, named by its smallest member's key.
    Orbit(String),
    Plain(usize),
}

impl FaceLabel {
    pub fn key(&self) -> String {
        match self {
            FaceLabel::Minimum => "min".into(),
            FaceLabel::Colorful { colors, representative } => {
                format!("{{{}}}@{}", colors.iter().join(","), representative)
            }
            FaceLabel::FixedDiagonals(ds) => format!("fix[{}]", ds.iter().join(" ")),
            FaceLabel::Orbit(k) => format!("orbit({k})"),
            FaceLabel::Plain(i) => format!("#{i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub rank: i32,
    /// Sorted indices of the rank-0 faces below this face.
    pub vertices: Vec<u32>,
    pub label: FaceLabel,
}

#[derive(Clone, Debug)]
pub struct RankedPoset {
    rank: i32,
    faces: Vec<Face>,
    by_rank: Vec<Vec<FaceId>>,
    up: Vec<Vec<FaceId>>,
    down: Vec<Vec<FaceId>>,
}

impl RankedPoset {
    /// Builds a poset from labeled faces and its cover relation. Ranks must
    /// lie in `-1..=rank` with a unique face at each extreme, and every cover
    /// must join consecutive ranks.
    pub fn from_covers(
        rank: i32,
        faces: Vec<(i32, FaceLabel)>,
        covers: impl IntoIterator<Item = (FaceId, FaceId)>,
    ) -> Result<Self, PosetError> {
        let count = faces.len();
        let mut by_rank = vec![Vec::new(); (rank + 2).max(1) as usize];
        for (id, (r, _)) in faces.iter().enumerate() {
            if *r < -1 || *r > rank {
                return Err(PosetError::RankOutOfRange(id as FaceId, *r, rank));
            }
            by_rank[(*r + 1) as usize].push(id as FaceId);
        }
        for r in [-1, rank] {
            let k = by_rank[(r + 1) as usize].len();
            if k != 1 {
                return Err(PosetError::NotUnique(r, k));
            }
        }
        let mut up = vec![Vec::new(); count];
        let mut down = vec![Vec::new(); count];
        for (a, b) in covers {
            for x in [a, b] {
                if x as usize >= count {
                    return Err(PosetError::UnknownFace(x));
                }
            }
            if faces[b as usize].0 != faces[a as usize].0 + 1 {
                return Err(PosetError::CoverRankGap(a, b));
            }
            up[a as usize].push(b);
            down[b as usize].push(a);
        }
        for (a, list) in up.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(PosetError::DuplicateCover(a as FaceId, w[0]));
            }
        }
        for list in &mut down {
            list.sort_unstable();
        }
        let vertex_index: Vec<Option<u32>> = {
            let mut idx = vec![None; count];
            for (k, &f) in by_rank[1.min(by_rank.len() - 1)].iter().enumerate() {
                if faces[f as usize].0 == 0 {
                    idx[f as usize] = Some(k as u32);
                }
            }
            idx
        };
        let mut vertex_sets: Vec<Vec<u32>> = vec![Vec::new(); count];
        for layer in by_rank.iter().skip(1) {
            for &f in layer {
                let set = if let Some(k) = vertex_index[f as usize] {
                    vec![k]
                } else {
                    let mut acc: Vec<u32> = down[f as usize]
                        .iter()
                        .flat_map(|&g| vertex_sets[g as usize].iter().copied())
                        .collect();
                    acc.sort_unstable();
                    acc.dedup();
                    acc
                };
                vertex_sets[f as usize] = set;
            }
        }
        let faces = faces
            .into_iter()
            .zip(vertex_sets)
            .map(|((rank, label), vertices)| Face { rank, vertices, label })
            .collect();
        Ok(RankedPoset {
            rank,
            faces,
            by_rank,
            up,
            down,
        })
    }

    /// Builds a poset from faces given as vertex sets. Vertices `0..k` must be
    /// listed as rank-0 singletons; the least face is added automatically and
    /// covers are containments between consecutive ranks.
    pub fn from_vertex_sets(rank: i32, sets: Vec<(i32, Vec<u32>)>) -> Result<Self, PosetError> {
        let mut faces = vec![(-1, FaceLabel::Minimum)];
        let mut vsets: Vec<Vec<u32>> = vec![Vec::new()];
        for (i, (r, mut s)) in sets.into_iter().enumerate() {
            s.sort_unstable();
            faces.push((r, FaceLabel::Plain(i)));
            vsets.push(s);
        }
        let mut covers = Vec::new();
        for a in 0..faces.len() {
            for b in 0..faces.len() {
                if faces[b].0 == faces[a].0 + 1 && is_subset(&vsets[a], &vsets[b]) {
                    covers.push((a as FaceId, b as FaceId));
                }
            }
        }
        Self::from_covers(rank, faces, covers)
    }

    pub fn rank(&self) -> i32 {
        self.rank
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn face(&self, id: FaceId) -> &Face {
        &self.faces[id as usize]
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_rank(&self, id: FaceId) -> i32 {
        self.faces[id as usize].rank
    }

    pub fn faces_of_rank(&self, r: i32) -> &[FaceId] {
        if r < -1 || r > self.rank {
            return &[];
        }
        &self.by_rank[(r + 1) as usize]
    }

    /// Face counts at ranks `0..=rank`.
    pub fn f_vector(&self) -> Vec<usize> {
        (0..=self.rank).map(|r| self.faces_of_rank(r).len()).collect()
    }

    pub fn bottom(&self) -> FaceId {
        self.by_rank[0][0]
    }

    pub fn top(&self) -> FaceId {
        self.by_rank[(self.rank + 1) as usize][0]
    }

    pub fn num_vertices(&self) -> usize {
        self.faces_of_rank(0).len()
    }

    /// The rank-0 face with vertex index `k`.
    pub fn vertex_face(&self, k: u32) -> FaceId {
        self.faces_of_rank(0)[k as usize]
    }

    /// Faces covering `id`, sorted.
    pub fn up(&self, id: FaceId) -> &[FaceId] {
        &self.up[id as usize]
    }

    /// Faces covered by `id`, sorted.
    pub fn down(&self, id: FaceId) -> &[FaceId] {
        &self.down[id as usize]
    }

    pub fn covers(&self, lower: FaceId, upper: FaceId) -> bool {
        self.up[lower as usize].binary_search(&upper).is_ok()
    }

    /// All cover pairs `(lower, upper)`.
    pub fn hasse_edges(&self) -> Vec<(FaceId, FaceId)> {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(a, list)| list.iter().map(move |&b| (a as FaceId, b)))
            .collect()
    }

    /// `a <= b` in the order.
    pub fn is_below(&self, a: FaceId, b: FaceId) -> bool {
        if a == b {
            return true;
        }
        let target = self.face_rank(b);
        if self.face_rank(a) >= target {
            return false;
        }
        let mut seen = vec![false; self.faces.len()];
        let mut queue = VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            for &y in self.up(x) {
                if y == b {
                    return true;
                }
                if self.face_rank(y) < target && !std::mem::replace(&mut seen[y as usize], true) {
                    queue.push_back(y);
                }
            }
        }
        false
    }

    /// All faces `>= id`, including `id`.
    pub fn upset(&self, id: FaceId) -> Vec<FaceId> {
        self.closure(id, |f| self.up(f))
    }

    /// All faces `<= id`, including `id`.
    pub fn downset(&self, id: FaceId) -> Vec<FaceId> {
        self.closure(id, |f| self.down(f))
    }

    fn closure<'a>(&'a self, start: FaceId, step: impl Fn(FaceId) -> &'a [FaceId]) -> Vec<FaceId> {
        let mut seen = vec![false; self.faces.len()];
        seen[start as usize] = true;
        let mut out = vec![start];
        let mut i = 0;
        while i < out.len() {
            for &y in step(out[i]) {
                if !std::mem::replace(&mut seen[y as usize], true) {
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// The section `upper/lower` as a poset of rank `rank(upper) - rank(lower) - 1`.
    /// Returns `None` unless `lower <= upper`.
    pub fn section(&self, lower: FaceId, upper: FaceId) -> Option<RankedPoset> {
        if !self.is_below(lower, upper) {
            return None;
        }
        let above = self.upset(lower);
        let below = self.downset(upper);
        let members: Vec<FaceId> = above.into_iter().filter(|f| below.binary_search(f).is_ok()).collect();
        let base = self.face_rank(lower) + 1;
        let local = |f: FaceId| members.binary_search(&f).ok().map(|k| k as FaceId);
        let faces = members
            .iter()
            .map(|&f| (self.face_rank(f) - base, self.face(f).label.clone()))
            .collect();
        let covers: Vec<(FaceId, FaceId)> = members
            .iter()
            .flat_map(|&f| self.up(f).iter().filter_map(move |&g| Some((local(f)?, local(g)?))))
            .collect();
        Some(
            RankedPoset::from_covers(self.face_rank(upper) - base, faces, covers)
                .expect("a section of a bounded ranked poset is bounded and ranked"),
        )
    }

    pub fn export(&self) -> PosetJson {
        PosetJson {
            rank: self.rank,
            f_vector: self.f_vector(),
            faces: (-1..=self.rank)
                .map(|r| RankJson {
                    rank: r,
                    faces: self.faces_of_rank(r).iter().map(|&f| self.face(f).label.key()).collect(),
                })
                .collect(),
            covers: self
                .hasse_edges()
                .into_iter()
                .map(|(a, b)| (self.face(a).label.key(), self.face(b).label.key()))
                .collect(),
        }
    }
}

fn is_subset(a: &[u32], b: &[u32]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

/// JSON export: faces listed by rank with identity keys, and Hasse edges.
#[derive(Clone, Debug, Serialize)]
pub struct PosetJson {
    pub rank: i32,
    pub f_vector: Vec<usize>,
    pub faces: Vec<RankJson>,
    pub covers: Vec<(String, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RankJson {
    pub rank: i32,
    pub faces: Vec<String>,
}

/// Hand-built polytopes used in tests and examples.
pub mod samples {
    use super::*;

    /// The face lattice of a `k`-gon.
    pub fn polygon(k: u32) -> RankedPoset {
        let mut sets: Vec<(i32, Vec<u32>)> = (0..k).map(|v| (0, vec![v])).collect();
        sets.extend((0..k).map(|v| (1, vec![v, (v + 1) % k])));
        sets.push((2, (0..k).collect()));
        RankedPoset::from_vertex_sets(2, sets).expect("valid polygon")
    }

    /// The face lattice of the 3-cube; vertices are the bit patterns `0..8`.
    pub fn cube() -> RankedPoset {
        let mut sets: Vec<(i32, Vec<u32>)> = (0..8).map(|v| (0, vec![v])).collect();
        for axis in 0..3 {
            for v in 0..8u32 {
                if v & (1 << axis) == 0 {
                    sets.push((1, vec![v, v | (1 << axis)]));
                }
            }
        }
        for axis in 0..3 {
            for side in [0, 1] {
                let s = (0..8u32).filter(|v| (v >> axis) & 1 == side).collect();
                sets.push((2, s));
            }
        }
        sets.push((3, (0..8).collect()));
        RankedPoset::from_vertex_sets(3, sets).expect("valid cube")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_input() {
        let faces = vec![(-1, FaceLabel::Minimum), (0, FaceLabel::Plain(0)), (0, FaceLabel::Plain(1))];
        assert_eq!(
            RankedPoset::from_covers(0, faces.clone(), vec![(0, 1), (0, 2)]).unwrap_err(),
            PosetError::NotUnique(0, 2)
        );
        let faces = vec![(-1, FaceLabel::Minimum), (1, FaceLabel::Plain(0))];
        assert_eq!(
            RankedPoset::from_covers(1, faces.clone(), vec![(0, 1)]).unwrap_err(),
            PosetError::CoverRankGap(0, 1)
        );
    }

    #[test]
    fn cube_structure() {
        let c = samples::cube();
        assert_eq!(c.f_vector(), vec![8, 12, 6, 1]);
        assert_eq!(c.face(c.top()).vertices.len(), 8);
        let v0 = c.vertex_face(0);
        assert!(c.is_below(c.bottom(), c.top()));
        assert!(c.is_below(v0, c.top()));
        assert!(!c.is_below(c.top(), v0));
        let figure = c.section(v0, c.top()).unwrap();
        assert_eq!(figure.rank(), 2);
        assert_eq!(figure.f_vector(), vec![3, 3, 1]);
        let facet = c.faces_of_rank(2)[0];
        let square = c.section(c.bottom(), facet).unwrap();
        assert_eq!(square.f_vector(), vec![4, 4, 1]);
        assert!(c.section(c.top(), v0).is_none());
    }

    #[test]
    fn export_lists_every_cover() {
        let p = samples::polygon(5);
        let json = p.export();
        assert_eq!(json.f_vector, vec![5, 5, 1]);
        assert_eq!(json.covers.len(), 5 + 10 + 5);
        assert_eq!(json.faces[0].faces, vec!["min".to_string()]);
    }
}
