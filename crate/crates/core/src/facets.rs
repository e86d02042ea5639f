//! The facets `G_{i,c}` of the colorful associahedron (triangulations with
//! the short diagonal `{i-1, i+1}` colored `c`), the intersection counts
//! between them, and the facet census of the colorful cyclohedron.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::color::ColorId;
use crate::graph::ExchangeGraph;
use crate::poset::{FaceId, RankedPoset};
use crate::polytope::ColorfulPolytope;
use crate::quotient::{poset_isomorphic, ClassicalPolytope, CoveringMap};
use crate::triangulation::{ColoredTriangulation, Label, Polygon};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FacetError {
    #[error("facet families need at least two colors")]
    TooSmall,
    #[error("the facet pair ({0}, {1}) is not a pair of distinct facets")]
    EqualPair(Label, ColorId),
    #[error("no facet for position {0} and color {1}")]
    Unknown(Label, ColorId),
    #[error("the polytope and exchange graph disagree")]
    Mismatch,
}

/// The family `{G_{i,c}}`, indexed by polygon vertex `i` in `1..=n+3` and
/// color `c`.
#[derive(Clone, Debug)]
pub struct FacetFamilies {
    polygon: Polygon,
    n: usize,
    facets: Vec<FaceId>,
}

impl FacetFamilies {
    pub fn new(polytope: &ColorfulPolytope, exchange: &ExchangeGraph<ColoredTriangulation>) -> Result<Self, FacetError> {
        let Some(first) = exchange.vertices().first() else {
            return Err(FacetError::Mismatch);
        };
        let polygon = first.polygon();
        let n = polygon.color_count();
        if n < 2 || polygon.is_centrally_symmetric() {
            return Err(FacetError::TooSmall);
        }
        let mut facets = Vec::with_capacity(polygon.num_vertices() * n);
        for i in 1..=polygon.num_vertices() as Label {
            let ear = polygon.ear_diagonal(i).map_err(|_| FacetError::Mismatch)?;
            for c in 0..n as u16 {
                let c = ColorId(c);
                let v = exchange
                    .vertices()
                    .iter()
                    .position(|t| t.color_of(ear) == Some(c))
                    .ok_or(FacetError::Unknown(i, c))?;
                let rest: Vec<ColorId> = polytope.colors().iter().copied().filter(|&x| x != c).collect();
                facets.push(polytope.face_containing(&rest, v as u32).ok_or(FacetError::Mismatch)?);
            }
        }
        Ok(FacetFamilies { polygon, n, facets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of polygon vertices, `n + 3`.
    pub fn positions(&self) -> usize {
        self.polygon.num_vertices()
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn facet(&self, i: Label, c: ColorId) -> Option<FaceId> {
        if i == 0 || i as usize > self.positions() || c.index() >= self.n {
            return None;
        }
        Some(self.facets[(i as usize - 1) * self.n + c.index()])
    }

    /// `(i, c, facet)` for every member, by position then color.
    pub fn members(&self) -> Vec<(Label, ColorId, FaceId)> {
        (1..=self.positions() as Label)
            .flat_map(|i| (0..self.n as u16).map(move |c| (i, ColorId(c))))
            .map(|(i, c)| (i, c, self.facets[(i as usize - 1) * self.n + c.index()]))
            .collect()
    }

    /// The family `F_i`.
    pub fn family(&self, i: Label) -> Vec<FaceId> {
        let start = (i as usize - 1) * self.n;
        self.facets[start..start + self.n].to_vec()
    }

    pub fn position_of(&self, f: FaceId) -> Option<(Label, ColorId)> {
        let k = self.facets.iter().position(|&x| x == f)?;
        Some(((k / self.n) as Label + 1, ColorId((k % self.n) as u16)))
    }

    /// Number of members other than the two given that share a vertex with
    /// both.
    pub fn intersection_count(&self, poset: &RankedPoset, a: (Label, ColorId), b: (Label, ColorId)) -> Result<usize, FacetError> {
        if a == b {
            return Err(FacetError::EqualPair(a.0, a.1));
        }
        let fa = self.facet(a.0, a.1).ok_or(FacetError::Unknown(a.0, a.1))?;
        let fb = self.facet(b.0, b.1).ok_or(FacetError::Unknown(b.0, b.1))?;
        Ok(self
            .facets
            .iter()
            .filter(|&&g| g != fa && g != fb && shares_vertex(poset, g, fa) && shares_vertex(poset, g, fb))
            .count())
    }

    /// Whether no facet of `F_i` shares a vertex with a facet of `F_j`.
    pub fn families_disjoint(&self, poset: &RankedPoset, i: Label, j: Label) -> bool {
        let fj = self.family(j);
        self.family(i).iter().all(|&a| fj.iter().all(|&b| a == b || !shares_vertex(poset, a, b)))
    }

    /// Whether a face permutation carries every family `F_i` onto some family.
    pub fn blocks_preserved(&self, face_map: &[FaceId]) -> bool {
        (1..=self.positions() as Label).all(|i| {
            let mut image: Vec<FaceId> = self.family(i).iter().map(|&f| face_map[f as usize]).collect();
            image.sort_unstable();
            (1..=self.positions() as Label).any(|j| {
                let mut target = self.family(j);
                target.sort_unstable();
                target == image
            })
        })
    }

    /// Every admissible `(i, c, j, c')` with its case, closed form and count.
    pub fn k_table(&self, poset: &RankedPoset) -> Vec<KEntry> {
        let m = self.positions();
        let mut out = Vec::new();
        for (i, c, _) in self.members() {
            for (j, d, _) in self.members() {
                let Some(case) = KCase::classify(i, c, j, d, m) else {
                    continue;
                };
                let computed = self.intersection_count(poset, (i, c), (j, d)).expect("distinct members");
                out.push(KEntry {
                    i,
                    c,
                    j,
                    c2: d,
                    case,
                    predicted: case.closed_form(self.n),
                    computed,
                });
            }
        }
        out
    }
}

pub fn shares_vertex(poset: &RankedPoset, a: FaceId, b: FaceId) -> bool {
    let (x, y) = (&poset.face(a).vertices, &poset.face(b).vertices);
    let (mut p, mut q) = (0, 0);
    while p < x.len() && q < y.len() {
        match x[p].cmp(&y[q]) {
            std::cmp::Ordering::Less => p += 1,
            std::cmp::Ordering::Greater => q += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Whether two faces have a common down-cover (for facets: a common ridge).
pub fn share_ridge(poset: &RankedPoset, a: FaceId, b: FaceId) -> bool {
    let db = poset.down(b);
    poset.down(a).iter().any(|x| db.binary_search(x).is_ok())
}

/// The seven cases of the intersection-count formula, by cyclic distance
/// between positions and whether the colors agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum KCase {
    SamePosition,
    Adjacent { same_color: bool },
    DistanceTwo { same_color: bool },
    Far { same_color: bool },
}

impl KCase {
    /// `None` for the excluded case of equal facets.
    pub fn classify(i: Label, c: ColorId, j: Label, d: ColorId, positions: usize) -> Option<KCase> {
        let diff = (i as i64 - j as i64).rem_euclid(positions as i64) as usize;
        let dist = diff.min(positions - diff);
        let same_color = c == d;
        match dist {
            0 if same_color => None,
            0 => Some(KCase::SamePosition),
            1 => Some(KCase::Adjacent { same_color }),
            2 => Some(KCase::DistanceTwo { same_color }),
            _ => Some(KCase::Far { same_color }),
        }
    }

    pub fn closed_form(self, n: usize) -> i64 {
        let n = n as i64;
        match self {
            KCase::SamePosition => (n - 2) * n,
            KCase::Adjacent { same_color: false } => (n - 1) * (n - 2),
            KCase::Adjacent { same_color: true } => (n - 1) * (n - 1),
            KCase::DistanceTwo { same_color: false } => (n - 2) * (n - 2),
            KCase::DistanceTwo { same_color: true } => (n - 1) * (n - 2),
            KCase::Far { same_color: false } => (n - 2) * (n - 3),
            KCase::Far { same_color: true } => (n - 1) * (n - 3),
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            KCase::SamePosition => "(n-2)n",
            KCase::Adjacent { same_color: false } => "(n-1)(n-2)",
            KCase::Adjacent { same_color: true } => "(n-1)^2",
            KCase::DistanceTwo { same_color: false } => "(n-2)^2",
            KCase::DistanceTwo { same_color: true } => "(n-1)(n-2)",
            KCase::Far { same_color: false } => "(n-2)(n-3)",
            KCase::Far { same_color: true } => "(n-1)(n-3)",
        }
    }

    pub const ALL: [KCase; 7] = [
        KCase::SamePosition,
        KCase::Adjacent { same_color: false },
        KCase::Adjacent { same_color: true },
        KCase::DistanceTwo { same_color: false },
        KCase::DistanceTwo { same_color: true },
        KCase::Far { same_color: false },
        KCase::Far { same_color: true },
    ];
}

impl fmt::Display for KCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (pos, same) = match self {
            KCase::SamePosition => ("j=i", false),
            KCase::Adjacent { same_color } => ("j=i±1", *same_color),
            KCase::DistanceTwo { same_color } => ("j=i±2", *same_color),
            KCase::Far { same_color } => ("j far", *same_color),
        };
        write!(f, "{pos}, {}", if same { "c=c'" } else { "c≠c'" })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct KEntry {
    pub i: Label,
    pub c: ColorId,
    pub j: Label,
    pub c2: ColorId,
    pub case: KCase,
    pub predicted: i64,
    pub computed: usize,
}

/// Facets whose section is poset-isomorphic to `model`.
pub fn facets_isomorphic_to(poset: &RankedPoset, model: &RankedPoset) -> Vec<FaceId> {
    let facets = poset.faces_of_rank(poset.rank() - 1);
    facets
        .iter()
        .copied()
        .filter(|&f| {
            poset.face(f).vertices.len() == model.num_vertices()
                && poset
                    .section(poset.bottom(), f)
                    .is_some_and(|s| poset_isomorphic(&s, model))
        })
        .collect()
}

impl FacetFamilies {
    /// Whether the covering sends every `G_{i,c}` onto the classical facet
    /// fixing the short diagonal `{i-1, i+1}`.
    pub fn covering_respects_families(&self, covering: &CoveringMap, classical: &ClassicalPolytope) -> bool {
        self.members().iter().all(|&(i, _, f)| {
            let ear = self.polygon.ear_diagonal(i).expect("position in range");
            classical.facet_fixing(ear) == Some(covering.assignment[f as usize])
        })
    }
}

/// Facets of a classical associahedron fixing a short diagonal.
#[derive(Clone, Debug, Serialize)]
pub struct ClassicalFacetCensus {
    /// Facets isomorphic to the model, over all facets.
    pub isomorphic_to_model: usize,
    /// Of those, how many fix a short diagonal.
    pub isomorphic_short: usize,
    /// `F_j` and `F_k` share a ridge exactly when `k` is not `j` or `j ± 1`.
    pub ridge_pattern_holds: bool,
}

pub fn classical_facet_census(classical: &ClassicalPolytope, model: &RankedPoset) -> Option<ClassicalFacetCensus> {
    let polygon = classical.triangulations.first()?.polygon();
    let m = polygon.num_vertices();
    let short: Vec<FaceId> = (1..=m as Label)
        .map(|i| classical.facet_fixing(polygon.ear_diagonal(i).ok()?))
        .collect::<Option<_>>()?;
    let iso = facets_isomorphic_to(&classical.poset, model);
    let isomorphic_short = iso.iter().filter(|f| short.contains(f)).count();
    let ridge_pattern_holds = (0..m).all(|j| {
        (0..m).filter(|&k| k != j).all(|k| {
            let adjacent = (j + 1) % m == k || (k + 1) % m == j;
            share_ridge(&classical.poset, short[j], short[k]) == !adjacent
        })
    });
    Some(ClassicalFacetCensus {
        isomorphic_to_model: iso.len(),
        isomorphic_short,
        ridge_pattern_holds,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FacetInfo {
    pub key: String,
    pub missing_color: ColorId,
    pub vertices: usize,
    pub isomorphic_to_model: bool,
}

/// Facets of a colorful cyclohedron split by their rigid diagonals: the
/// central diagonal (missing the uncolored class) or a symmetric pair.
#[derive(Clone, Debug, Serialize)]
pub struct CyclohedronCensus {
    pub central: Vec<FacetInfo>,
    pub paired: Vec<FacetInfo>,
}

pub fn cyclohedron_facet_census(polytope: &ColorfulPolytope, model: &RankedPoset) -> CyclohedronCensus {
    let poset = polytope.poset();
    let mut central = Vec::new();
    let mut paired = Vec::new();
    for &c in polytope.colors() {
        for f in polytope.facets_missing(c) {
            let info = FacetInfo {
                key: poset.face(f).label.key(),
                missing_color: c,
                vertices: poset.face(f).vertices.len(),
                isomorphic_to_model: poset.face(f).vertices.len() == model.num_vertices()
                    && poset
                        .section(poset.bottom(), f)
                        .is_some_and(|s| poset_isomorphic(&s, model)),
            };
            if c.is_uncolor() {
                central.push(info);
            } else {
                paired.push(info);
            }
        }
    }
    CyclohedronCensus { central, paired }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_colorful_exchange_graph;

    #[test]
    fn classification() {
        let m = 6;
        let c = ColorId(0);
        let d = ColorId(1);
        assert_eq!(KCase::classify(1, c, 1, c, m), None);
        assert_eq!(KCase::classify(1, c, 1, d, m), Some(KCase::SamePosition));
        assert_eq!(KCase::classify(1, c, 6, c, m), Some(KCase::Adjacent { same_color: true }));
        assert_eq!(KCase::classify(2, c, 6, d, m), Some(KCase::DistanceTwo { same_color: false }));
        assert_eq!(KCase::classify(1, c, 4, c, m), Some(KCase::Far { same_color: true }));
        assert_eq!(KCase::SamePosition.closed_form(3), 3);
        assert_eq!(KCase::Adjacent { same_color: true }.closed_form(3), 4);
        assert_eq!(KCase::Far { same_color: true }.closed_form(4), 3);
    }

    #[test]
    fn pentagon_family_is_all_edges() {
        let g = build_colorful_exchange_graph(2).unwrap();
        let p = ColorfulPolytope::build(g.graph()).unwrap();
        let fam = FacetFamilies::new(&p, &g).unwrap();
        let mut all: Vec<FaceId> = fam.members().iter().map(|m| m.2).collect();
        all.sort_unstable();
        all.dedup();
        assert_eq!(all.len(), 10);
        assert_eq!(fam.position_of(fam.facet(3, ColorId(1)).unwrap()), Some((3, ColorId(1))));
        assert!(fam.facet(6, ColorId(0)).is_none());
        assert!(fam.intersection_count(p.poset(), (1, ColorId(0)), (1, ColorId(0))).is_err());
    }
}
