//! Rank-3 polytopes read as maps on closed surfaces.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::flags::FlagGraph;
use crate::poset::RankedPoset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("surface data needs a rank-3 poset, got rank {0}")]
    NotRankThree(i32),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceReport {
    pub v: usize,
    pub e: usize,
    pub f: usize,
    pub euler_characteristic: i64,
    pub orientable: bool,
    /// `χ = 2 - 2g`, orientable surfaces only.
    pub genus: Option<i64>,
    /// `χ = 2 - k`, non-orientable surfaces only.
    pub crosscaps: Option<i64>,
    /// 2-face size -> number of 2-faces.
    pub face_sizes: BTreeMap<usize, usize>,
    /// Sorted sizes of the 2-faces around a vertex -> number of vertices.
    #[serde(serialize_with = "census_as_pairs")]
    pub vertex_census: BTreeMap<Vec<usize>, usize>,
    pub flag_count: usize,
    /// Every edge lies in exactly two 2-faces.
    pub closed: bool,
}

fn census_as_pairs<S: serde::Serializer>(census: &BTreeMap<Vec<usize>, usize>, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(census.iter())
}

impl SurfaceReport {
    pub fn flags_match_edges(&self) -> bool {
        self.flag_count == 4 * self.e
    }
}

pub fn surface_report(poset: &RankedPoset) -> Result<SurfaceReport, SurfaceError> {
    if poset.rank() != 3 {
        return Err(SurfaceError::NotRankThree(poset.rank()));
    }
    let flags = FlagGraph::new(poset);
    surface_report_with_flags(poset, &flags)
}

pub fn surface_report_with_flags(poset: &RankedPoset, flags: &FlagGraph) -> Result<SurfaceReport, SurfaceError> {
    if poset.rank() != 3 {
        return Err(SurfaceError::NotRankThree(poset.rank()));
    }
    let [v, e, f] = [0, 1, 2].map(|r| poset.faces_of_rank(r).len());
    let chi = v as i64 - e as i64 + f as i64;
    let orientable = flags.is_bipartite();
    let mut face_sizes = BTreeMap::new();
    for &g in poset.faces_of_rank(2) {
        *face_sizes.entry(poset.face(g).vertices.len()).or_insert(0) += 1;
    }
    let mut vertex_census = BTreeMap::new();
    for &x in poset.faces_of_rank(0) {
        let mut sizes: Vec<usize> = poset
            .up(x)
            .iter()
            .flat_map(|&edge| poset.up(edge).iter().copied())
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .map(|g| poset.face(g).vertices.len())
            .collect();
        sizes.sort_unstable();
        *vertex_census.entry(sizes).or_insert(0) += 1;
    }
    let closed = poset.faces_of_rank(1).iter().all(|&edge| poset.up(edge).len() == 2);
    Ok(SurfaceReport {
        v,
        e,
        f,
        euler_characteristic: chi,
        orientable,
        genus: orientable.then_some((2 - chi) / 2),
        crosscaps: (!orientable).then_some(2 - chi),
        face_sizes,
        vertex_census,
        flag_count: flags.len(),
        closed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::samples;

    #[test]
    fn cube_is_a_sphere() {
        let r = surface_report(&samples::cube()).unwrap();
        assert_eq!((r.v, r.e, r.f, r.euler_characteristic), (8, 12, 6, 2));
        assert!(r.orientable && r.closed && r.flags_match_edges());
        assert_eq!(r.genus, Some(0));
        assert_eq!(r.vertex_census, BTreeMap::from([(vec![4, 4, 4], 8)]));
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains(r#""vertex_census":[[[4,4,4],8]]"#), "{json}");
    }

    #[test]
    fn rejects_other_ranks() {
        assert_eq!(surface_report(&samples::polygon(4)), Err(SurfaceError::NotRankThree(2)));
    }
}
