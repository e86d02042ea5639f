//! Ordinary associahedra and cyclohedra built from fixed diagonal sets,
//! quotients of posets by groups of automorphisms, poset isomorphism, and
//! covering maps.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::graph::ExchangeGraph;
use crate::poset::{FaceId, FaceLabel, RankedPoset};
use crate::search::{self, EdgeRule, Structure};
use crate::symmetry::Permutation;
use crate::triangulation::{enumerate_triangulations, ColoredTriangulation, Diagonal, Polygon, Triangulation, TriangulationError};
use crate::union_find::UnionFind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuotientError {
    #[error("permutation has degree {0} but the poset has {1} vertices")]
    DegreeMismatch(usize, usize),
    #[error("vertex permutation does not extend to an automorphism: face {0} has no image")]
    NotAnAutomorphism(String),
    #[error("orbit of {0} mixes ranks")]
    MixedRanks(String),
    #[error(transparent)]
    Triangulation(#[from] TriangulationError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoveringError {
    #[error("projection has {0} entries but the source has {1} vertices")]
    ProjectionLength(usize, usize),
    #[error("projection sends vertex {0} outside the target")]
    ProjectionRange(u32),
    #[error("face {0} projects onto a vertex set that is not a face of the target")]
    NoImage(String),
    #[error("incidence {0} < {1} is not preserved")]
    IncidenceBroken(String, String),
    #[error("target face {0} has no preimage")]
    NotSurjective(String),
    #[error("vertex fibers range from {min} to {max} elements")]
    UnevenFibers { min: usize, max: usize },
}

/// An ordinary associahedron or cyclohedron; vertex `k` of the poset is
/// `triangulations[k]`.
#[derive(Clone, Debug)]
pub struct ClassicalPolytope {
    pub poset: RankedPoset,
    pub triangulations: Vec<Triangulation>,
}

impl ClassicalPolytope {
    /// The facet on which the diagonal `d` (and its half-turn image, for a
    /// cyclohedron) is fixed.
    pub fn facet_fixing(&self, d: Diagonal) -> Option<FaceId> {
        let polygon = self.triangulations.first()?.polygon();
        let mut want = vec![d];
        if polygon.is_centrally_symmetric() && !polygon.is_central(d) {
            want.push(polygon.half_turn(d));
        }
        want.sort_unstable();
        self.poset
            .faces_of_rank(self.poset.rank() - 1)
            .iter()
            .copied()
            .find(|&f| matches!(&self.poset.face(f).label, FaceLabel::FixedDiagonals(ds) if *ds == want))
    }
}

/// The associahedron of the `(n+3)`-gon: a `j`-face is the set of
/// triangulations containing a fixed set of `n - j` compatible diagonals.
pub fn build_classical_associahedron(n: usize) -> Result<ClassicalPolytope, TriangulationError> {
    Ok(build_classical(Polygon::associahedron(n)?))
}

/// The cyclohedron of the centrally symmetric `(2n+4)`-gon: faces fix a
/// centrally symmetric set of compatible diagonals, counted by flip units.
pub fn build_classical_cyclohedron(n: usize) -> Result<ClassicalPolytope, TriangulationError> {
    Ok(build_classical(Polygon::cyclohedron(n)?))
}

fn build_classical(polygon: Polygon) -> ClassicalPolytope {
    let triangulations = enumerate_triangulations(polygon);
    let rank = polygon.diagonal_count() as i32
        - if polygon.is_centrally_symmetric() {
            polygon.diagonal_count() as i32 / 2
        } else {
            0
        };
    let expand = |units: &[Diagonal]| -> Vec<Diagonal> {
        let mut ds: Vec<Diagonal> = units
            .iter()
            .flat_map(|&d| {
                if polygon.is_centrally_symmetric() && !polygon.is_central(d) {
                    vec![d, polygon.half_turn(d)]
                } else {
                    vec![d]
                }
            })
            .collect();
        ds.sort_unstable();
        ds
    };
    // Every partial triangulation, keyed by its sorted flip units.
    let mut partial: BTreeSet<(usize, Vec<Diagonal>)> = BTreeSet::new();
    for t in &triangulations {
        let units = t.flip_units();
        for mask in 0u64..1 << units.len() {
            let chosen: Vec<Diagonal> = (0..units.len()).filter(|i| mask >> i & 1 == 1).map(|i| units[i]).collect();
            partial.insert((units.len() - chosen.len(), chosen));
        }
    }
    let mut faces = vec![(-1, FaceLabel::Minimum)];
    let mut ids: HashMap<Vec<Diagonal>, FaceId> = HashMap::new();
    // Vertices first, in enumeration order.
    for t in &triangulations {
        let units = t.flip_units();
        ids.insert(units, faces.len() as FaceId);
        faces.push((0, FaceLabel::FixedDiagonals(t.diagonals().to_vec())));
    }
    for (r, units) in &partial {
        if *r > 0 {
            ids.insert(units.clone(), faces.len() as FaceId);
            faces.push((*r as i32, FaceLabel::FixedDiagonals(expand(units))));
        }
    }
    let mut covers: Vec<(FaceId, FaceId)> = (1..=triangulations.len() as FaceId).map(|v| (0, v)).collect();
    for (_, units) in &partial {
        let lower = ids[units];
        for skip in 0..units.len() {
            let mut rest = units.clone();
            rest.remove(skip);
            covers.push((lower, ids[&rest]));
        }
    }
    let poset = RankedPoset::from_covers(rank, faces, covers).expect("partial triangulations form a ranked poset");
    ClassicalPolytope { poset, triangulations }
}

/// Extends a vertex permutation to a face permutation, rank by rank: the
/// image of a face is the face whose down-covers are the images of its
/// down-covers.
pub fn lift_to_faces(poset: &RankedPoset, vertex_perm: &Permutation) -> Result<Vec<FaceId>, QuotientError> {
    let nv = poset.num_vertices();
    if vertex_perm.degree() != nv {
        return Err(QuotientError::DegreeMismatch(vertex_perm.degree(), nv));
    }
    let mut by_down: HashMap<Vec<FaceId>, Vec<FaceId>> = HashMap::new();
    for r in 1..=poset.rank() {
        for &f in poset.faces_of_rank(r) {
            by_down.entry(poset.down(f).to_vec()).or_default().push(f);
        }
    }
    let mut image = vec![FaceId::MAX; poset.num_faces()];
    image[poset.bottom() as usize] = poset.bottom();
    for (k, &v) in poset.faces_of_rank(0).iter().enumerate() {
        image[v as usize] = poset.vertex_face(vertex_perm.apply(k as u32));
    }
    let mut used = vec![false; poset.num_faces()];
    for r in 1..=poset.rank() {
        for &f in poset.faces_of_rank(r) {
            let mut key: Vec<FaceId> = poset.down(f).iter().map(|&g| image[g as usize]).collect();
            key.sort_unstable();
            let missing = || QuotientError::NotAnAutomorphism(poset.face(f).label.key());
            match by_down.get(&key).map(Vec::as_slice) {
                Some(&[g]) if !std::mem::replace(&mut used[g as usize], true) => image[f as usize] = g,
                _ => return Err(missing()),
            }
        }
    }
    Ok(image)
}

/// The orbit poset `P/G`.
#[derive(Clone, Debug)]
pub struct QuotientPoset {
    pub poset: RankedPoset,
    /// Source face -> orbit (a face of `poset`).
    pub orbit_of: Vec<FaceId>,
    /// Members of each orbit, sorted.
    pub orbits: Vec<Vec<FaceId>>,
}

impl QuotientPoset {
    /// Whether "some representatives are incident" agrees with the order of
    /// the orbit poset for every pair of orbits, not just covers.
    pub fn representative_incidence_consistent(&self, source: &RankedPoset) -> bool {
        for (o, members) in self.orbits.iter().enumerate() {
            let mut by_reps: Vec<FaceId> = members
                .iter()
                .flat_map(|&f| source.upset(f))
                .map(|g| self.orbit_of[g as usize])
                .collect();
            by_reps.sort_unstable();
            by_reps.dedup();
            if by_reps != self.poset.upset(o as FaceId) {
                return false;
            }
        }
        true
    }
}

/// Quotient of `source` by the group generated by the given vertex
/// permutations, each of which must extend to an automorphism.
pub fn quotient(source: &RankedPoset, generators: &[Permutation]) -> Result<QuotientPoset, QuotientError> {
    let mut uf = UnionFind::new(source.num_faces());
    for g in generators {
        let map = lift_to_faces(source, g)?;
        for (f, &h) in map.iter().enumerate() {
            uf.union(f as u32, h);
        }
    }
    let labels = uf.min_labels();
    let mut reps: Vec<FaceId> = (0..source.num_faces() as FaceId).filter(|&f| labels[f as usize] == f).collect();
    reps.sort_by_key(|&f| (source.face_rank(f), f));
    let mut orbit_index = vec![0 as FaceId; source.num_faces()];
    for (k, &r) in reps.iter().enumerate() {
        orbit_index[r as usize] = k as FaceId;
    }
    let orbit_of: Vec<FaceId> = labels.iter().map(|&l| orbit_index[l as usize]).collect();
    let mut orbits = vec![Vec::new(); reps.len()];
    for (f, &o) in orbit_of.iter().enumerate() {
        orbits[o as usize].push(f as FaceId);
        if source.face_rank(f as FaceId) != source.face_rank(reps[o as usize]) {
            return Err(QuotientError::MixedRanks(source.face(reps[o as usize]).label.key()));
        }
    }
    let faces = reps
        .iter()
        .map(|&r| {
            let label = match source.face(r).label {
                FaceLabel::Minimum => FaceLabel::Minimum,
                ref l => FaceLabel::Orbit(l.key()),
            };
            (source.face_rank(r), label)
        })
        .collect();
    let mut covers: Vec<(FaceId, FaceId)> = source
        .hasse_edges()
        .into_iter()
        .map(|(a, b)| (orbit_of[a as usize], orbit_of[b as usize]))
        .collect();
    covers.sort_unstable();
    covers.dedup();
    let poset = RankedPoset::from_covers(source.rank(), faces, covers).expect("orbits of a bounded ranked poset");
    Ok(QuotientPoset {
        poset,
        orbit_of,
        orbits,
    })
}

fn hasse_structure(p: &RankedPoset) -> Structure {
    Structure::new(
        p.faces().iter().map(|f| (f.rank + 1) as u32).collect(),
        p.hasse_edges().into_iter().map(|(a, b)| (a, b, 0)),
    )
}

/// A rank- and incidence-preserving bijection from `a` to `b`, if any:
/// `map[f]` is the image of face `f`.
pub fn poset_isomorphism(a: &RankedPoset, b: &RankedPoset) -> Option<Vec<FaceId>> {
    if a.rank() != b.rank() || a.f_vector() != b.f_vector() {
        return None;
    }
    search::isomorphisms(&hasse_structure(a), &hasse_structure(b), EdgeRule::Ignore, true)
        .pop()
        .map(|m| m.vertices)
}

pub fn poset_isomorphic(a: &RankedPoset, b: &RankedPoset) -> bool {
    poset_isomorphism(a, b).is_some()
}

/// A witness map written with face identity keys.
pub fn witness_json(a: &RankedPoset, b: &RankedPoset, map: &[FaceId]) -> Vec<(String, String)> {
    map.iter()
        .enumerate()
        .map(|(f, &g)| (a.face(f as FaceId).label.key(), b.face(g).label.key()))
        .collect()
}

/// A validated covering: rank- and incidence-preserving, surjective, with
/// all vertex fibers of one size.
#[derive(Clone, Debug, Serialize)]
pub struct CoveringMap {
    /// Source face -> target face.
    pub assignment: Vec<FaceId>,
    pub fiber_size: usize,
    /// Preimage count of every target face, by rank.
    pub fibers_by_rank: Vec<Vec<usize>>,
}

/// Builds the face map induced by a vertex projection: a face goes to the
/// target face of the same rank spanned by the projected vertices.
pub fn covering_map(source: &RankedPoset, target: &RankedPoset, projection: &[u32]) -> Result<CoveringMap, CoveringError> {
    if projection.len() != source.num_vertices() {
        return Err(CoveringError::ProjectionLength(projection.len(), source.num_vertices()));
    }
    if let Some(&v) = projection.iter().find(|&&v| v as usize >= target.num_vertices()) {
        return Err(CoveringError::ProjectionRange(v));
    }
    let lookup: HashMap<(i32, &[u32]), FaceId> = (0..target.num_faces() as FaceId)
        .filter(|&g| g != target.bottom())
        .map(|g| ((target.face_rank(g), target.face(g).vertices.as_slice()), g))
        .collect();
    let mut assignment = Vec::with_capacity(source.num_faces());
    for f in 0..source.num_faces() as FaceId {
        if f == source.bottom() {
            assignment.push(target.bottom());
            continue;
        }
        let mut image: Vec<u32> = source.face(f).vertices.iter().map(|&v| projection[v as usize]).collect();
        image.sort_unstable();
        image.dedup();
        let g = lookup
            .get(&(source.face_rank(f), image.as_slice()))
            .ok_or_else(|| CoveringError::NoImage(source.face(f).label.key()))?;
        assignment.push(*g);
    }
    for (a, b) in source.hasse_edges() {
        let (x, y) = (assignment[a as usize], assignment[b as usize]);
        if !target.covers(x, y) {
            return Err(CoveringError::IncidenceBroken(
                source.face(a).label.key(),
                source.face(b).label.key(),
            ));
        }
    }
    let mut hits = vec![0usize; target.num_faces()];
    for &g in &assignment {
        hits[g as usize] += 1;
    }
    if let Some(g) = hits.iter().position(|&h| h == 0) {
        return Err(CoveringError::NotSurjective(target.face(g as FaceId).label.key()));
    }
    let vertex_hits: Vec<usize> = target.faces_of_rank(0).iter().map(|&v| hits[v as usize]).collect();
    let (min, max) = (
        vertex_hits.iter().copied().min().unwrap_or(0),
        vertex_hits.iter().copied().max().unwrap_or(0),
    );
    if min != max {
        return Err(CoveringError::UnevenFibers { min, max });
    }
    let fibers_by_rank = (-1..=target.rank())
        .map(|r| target.faces_of_rank(r).iter().map(|&g| hits[g as usize]).collect())
        .collect();
    Ok(CoveringMap {
        assignment,
        fiber_size: min,
        fibers_by_rank,
    })
}

/// Colored triangulation -> index of its support among `plain`.
pub fn support_projection(colored: &ExchangeGraph<ColoredTriangulation>, plain: &[Triangulation]) -> Vec<u32> {
    let index: HashMap<&Triangulation, u32> = plain.iter().enumerate().map(|(i, t)| (t, i as u32)).collect();
    colored
        .vertices()
        .iter()
        .map(|t| index.get(t.support()).copied().unwrap_or(u32::MAX))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::samples;

    #[test]
    fn classical_small_cases() {
        assert_eq!(build_classical_associahedron(0).unwrap().poset.f_vector(), vec![1]);
        assert_eq!(build_classical_associahedron(2).unwrap().poset.f_vector(), vec![5, 5, 1]);
        let a3 = build_classical_associahedron(3).unwrap().poset;
        assert_eq!(a3.f_vector(), vec![14, 21, 9, 1]);
        let mut sizes: Vec<usize> = a3.faces_of_rank(2).iter().map(|&f| a3.face(f).vertices.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![4, 4, 4, 5, 5, 5, 5, 5, 5]);
        let z1 = build_classical_cyclohedron(1).unwrap().poset;
        assert_eq!(z1.f_vector(), vec![6, 6, 1]);
        let z2 = build_classical_cyclohedron(2).unwrap().poset;
        assert_eq!(z2.f_vector(), vec![20, 30, 12, 1]);
    }

    #[test]
    fn isomorphism_and_trivial_quotient() {
        let p5 = samples::polygon(5);
        assert!(!poset_isomorphic(&p5, &samples::polygon(6)));
        assert!(poset_isomorphic(&p5, &build_classical_associahedron(2).unwrap().poset));
        let q = quotient(&p5, &[]).unwrap();
        assert!(poset_isomorphic(&q.poset, &p5));
        assert!(q.representative_incidence_consistent(&p5));
    }

    #[test]
    fn half_turn_quotient_of_hexagon_is_triangle() {
        let hex = samples::polygon(6);
        let half = Permutation::new(vec![3, 4, 5, 0, 1, 2]).unwrap();
        let q = quotient(&hex, &[half]).unwrap();
        assert_eq!(q.poset.f_vector(), vec![3, 3, 1]);
        assert!(poset_isomorphic(&q.poset, &samples::polygon(3)));
        let bad = Permutation::new(vec![1, 0, 2, 3, 4, 5]).unwrap();
        assert!(matches!(quotient(&hex, &[bad]), Err(QuotientError::NotAnAutomorphism(_))));
    }

    #[test]
    fn hexagon_double_covers_triangle() {
        let cover = covering_map(&samples::polygon(6), &samples::polygon(3), &[0, 1, 2, 0, 1, 2]).unwrap();
        assert_eq!(cover.fiber_size, 2);
        let id = covering_map(&samples::polygon(4), &samples::polygon(4), &[0, 1, 2, 3]).unwrap();
        assert_eq!(id.fiber_size, 1);
        assert!(matches!(
            covering_map(&samples::polygon(6), &samples::polygon(3), &[0, 0, 1, 1, 2, 2]),
            Err(CoveringError::NoImage(_))
        ));
        assert!(matches!(
            covering_map(&samples::polygon(6), &samples::polygon(3), &[0, 1]),
            Err(CoveringError::ProjectionLength(2, 6))
        ));
    }
}
