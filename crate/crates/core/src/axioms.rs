//! Abstract polytope axioms: flag length, the diamond condition, strong flag
//! connectivity, plus simplicity of vertex figures.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::flags::FlagGraph;
use crate::poset::{FaceId, RankedPoset};
use crate::union_find::UnionFind;

const MAX_LISTED: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConnectivityMode {
    /// Every section is checked.
    Exhaustive,
    /// Random flag pairs; half uniformly drawn, half joined by a short random
    /// walk so that they share faces.
    Sampled { pairs: usize, seed: u64 },
}

impl ConnectivityMode {
    pub const DEFAULT_PAIRS: usize = 10_000;

    pub fn sampled(seed: u64) -> Self {
        ConnectivityMode::Sampled {
            pairs: Self::DEFAULT_PAIRS,
            seed,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FlagLengthCheck {
    pub passed: bool,
    /// Faces where a maximal chain stops early.
    pub dead_ends: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiamondViolation {
    pub lower: String,
    pub upper: String,
    pub between: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiamondCheck {
    pub passed: bool,
    pub intervals_checked: usize,
    pub violation_count: usize,
    pub violations: Vec<DiamondViolation>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConnectivityCheck {
    pub passed: bool,
    pub mode: String,
    pub seed: Option<u64>,
    /// Flag pairs (sampled mode) or chain types (exhaustive mode) examined.
    pub checked: usize,
    pub failure: Option<(u32, u32)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SimplicityCheck {
    pub passed: bool,
    pub vertices_checked: usize,
    pub failing_vertices: Vec<u32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub rank: i32,
    pub f_vector: Vec<usize>,
    pub flag_count: usize,
    pub flag_length: FlagLengthCheck,
    pub diamond: DiamondCheck,
    pub strong_flag_connectivity: ConnectivityCheck,
    pub simple: SimplicityCheck,
}

impl AxiomReport {
    /// The three polytope axioms hold.
    pub fn is_polytope(&self) -> bool {
        self.flag_length.passed && self.diamond.passed && self.strong_flag_connectivity.passed
    }

    pub fn all_passed(&self) -> bool {
        self.is_polytope() && self.simple.passed
    }
}

pub fn check_axioms(poset: &RankedPoset, mode: ConnectivityMode) -> AxiomReport {
    let flags = FlagGraph::new(poset);
    check_axioms_with_flags(poset, &flags, mode)
}

pub fn check_axioms_with_flags(
    poset: &RankedPoset,
    flags: &FlagGraph,
    mode: ConnectivityMode,
) -> AxiomReport {
    AxiomReport {
        rank: poset.rank(),
        f_vector: poset.f_vector(),
        flag_count: flags.len(),
        flag_length: check_flag_length(poset),
        diamond: check_diamond(poset),
        strong_flag_connectivity: check_strong_flag_connectivity(flags, mode),
        simple: check_simplicity(poset),
    }
}

pub fn check_flag_length(poset: &RankedPoset) -> FlagLengthCheck {
    let dead_ends: Vec<String> = (0..poset.num_faces() as FaceId)
        .filter(|&f| {
            (f != poset.top() && poset.up(f).is_empty()) || (f != poset.bottom() && poset.down(f).is_empty())
        })
        .map(|f| poset.face(f).label.key())
        .collect();
    FlagLengthCheck {
        passed: dead_ends.is_empty(),
        dead_ends: dead_ends.into_iter().take(MAX_LISTED).collect(),
    }
}

/// Every interval of length two contains exactly two faces strictly between.
pub fn check_diamond(poset: &RankedPoset) -> DiamondCheck {
    let mut intervals_checked = 0;
    let mut violation_count = 0;
    let mut violations = Vec::new();
    let mut counts: HashMap<FaceId, usize> = HashMap::new();
    for r in -1..=poset.rank() - 2 {
        for &lower in poset.faces_of_rank(r) {
            counts.clear();
            for &mid in poset.up(lower) {
                for &upper in poset.up(mid) {
                    *counts.entry(upper).or_default() += 1;
                }
            }
            let mut found: Vec<(FaceId, usize)> = counts.iter().map(|(&u, &c)| (u, c)).collect();
            found.sort_unstable();
            for (upper, between) in found {
                intervals_checked += 1;
                if between != 2 {
                    violation_count += 1;
                    if violations.len() < MAX_LISTED {
                        violations.push(DiamondViolation {
                            lower: poset.face(lower).label.key(),
                            upper: poset.face(upper).label.key(),
                            between,
                        });
                    }
                }
            }
        }
    }
    DiamondCheck {
        passed: violation_count == 0,
        intervals_checked,
        violation_count,
        violations,
    }
}

/// Components of the flags under adjacencies at ranks outside `fixed`.
fn components_avoiding(flags: &FlagGraph, fixed: u64) -> Vec<u32> {
    let mut uf = UnionFind::new(flags.len());
    for k in 0..flags.len() as u32 {
        for i in 0..flags.rank() {
            if fixed >> i & 1 == 0 {
                if let Some(j) = flags.adjacent(k, i) {
                    uf.union(k, j);
                }
            }
        }
    }
    uf.min_labels()
}

fn shared_mask(flags: &FlagGraph, a: u32, b: u32) -> u64 {
    (0..flags.rank())
        .filter(|&i| flags.face_at(a, i as i32) == flags.face_at(b, i as i32))
        .fold(0, |m, i| m | 1 << i)
}

pub fn check_strong_flag_connectivity(flags: &FlagGraph, mode: ConnectivityMode) -> ConnectivityCheck {
    let n = flags.rank();
    assert!(n < 64, "rank too large for connectivity masks");
    match mode {
        ConnectivityMode::Exhaustive => {
            let mut checked = 0;
            for fixed in 0..(1u64 << n) {
                let labels = components_avoiding(flags, fixed);
                let mut root_of: HashMap<Vec<FaceId>, u32> = HashMap::new();
                for k in 0..flags.len() as u32 {
                    let key: Vec<FaceId> = (0..n)
                        .filter(|&i| fixed >> i & 1 == 1)
                        .map(|i| flags.face_at(k, i as i32))
                        .collect();
                    let root = *root_of.entry(key).or_insert_with(|| {
                        checked += 1;
                        labels[k as usize]
                    });
                    if root != labels[k as usize] {
                        return ConnectivityCheck {
                            passed: false,
                            mode: "exhaustive".into(),
                            seed: None,
                            checked,
                            failure: Some((root, k)),
                        };
                    }
                }
            }
            ConnectivityCheck {
                passed: true,
                mode: "exhaustive".into(),
                seed: None,
                checked,
                failure: None,
            }
        }
        ConnectivityMode::Sampled { pairs, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut memo: HashMap<u64, Vec<u32>> = HashMap::new();
            let count = flags.len() as u32;
            let mut failure = None;
            for t in 0..pairs {
                if count == 0 {
                    break;
                }
                let a = rng.gen_range(0..count);
                let b = if t % 2 == 0 || n == 0 {
                    rng.gen_range(0..count)
                } else {
                    let steps = rng.gen_range(1..=2 * n);
                    let mut cur = a;
                    for _ in 0..steps {
                        if let Some(next) = flags.adjacent(cur, rng.gen_range(0..n)) {
                            cur = next;
                        }
                    }
                    cur
                };
                let fixed = shared_mask(flags, a, b);
                let labels = memo.entry(fixed).or_insert_with(|| components_avoiding(flags, fixed));
                if labels[a as usize] != labels[b as usize] {
                    failure = Some((a, b));
                    break;
                }
            }
            ConnectivityCheck {
                passed: failure.is_none(),
                mode: "sampled".into(),
                seed: Some(seed),
                checked: pairs,
                failure,
            }
        }
    }
}

/// Every vertex figure is a Boolean lattice: the faces above a vertex
/// correspond bijectively to subsets of the edges at that vertex, by rank,
/// with covers adding one edge.
pub fn check_simplicity(poset: &RankedPoset) -> SimplicityCheck {
    let n = poset.rank();
    let vertices = poset.faces_of_rank(0);
    let failing_vertices: Vec<u32> = vertices
        .iter()
        .enumerate()
        .filter(|&(_, &v)| !vertex_figure_is_boolean(poset, v, n))
        .map(|(k, _)| k as u32)
        .collect();
    SimplicityCheck {
        passed: failing_vertices.is_empty(),
        vertices_checked: vertices.len(),
        failing_vertices: failing_vertices.into_iter().take(MAX_LISTED).collect(),
    }
}

fn vertex_figure_is_boolean(poset: &RankedPoset, v: FaceId, n: i32) -> bool {
    let atoms = poset.up(v);
    if atoms.len() != n as usize || n >= 64 {
        return false;
    }
    let mut mask: HashMap<FaceId, u64> = HashMap::new();
    for (bit, &a) in atoms.iter().enumerate() {
        for f in poset.upset(a) {
            *mask.entry(f).or_default() |= 1 << bit;
        }
    }
    if mask.len() as u64 != (1u64 << n) - 1 {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    for (&f, &m) in &mask {
        let r = poset.face_rank(f);
        if m.count_ones() as i32 != r || !seen.insert(m) {
            return false;
        }
        if poset.up(f).len() as i32 != n - r {
            return false;
        }
        for &g in poset.up(f) {
            let mg = mask[&g];
            if mg & m != m || (mg ^ m).count_ones() != 1 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{samples, FaceLabel};

    #[test]
    fn cube_is_a_simple_polytope() {
        let c = samples::cube();
        for mode in [ConnectivityMode::Exhaustive, ConnectivityMode::sampled(7)] {
            let r = check_axioms(&c, mode);
            assert!(r.all_passed(), "{r:?}");
            assert_eq!(r.flag_count, 48);
        }
    }

    #[test]
    fn octahedron_is_not_simple() {
        // Vertices: +-x, +-y, +-z as 0..6; facets are the 8 octants.
        let mut sets: Vec<(i32, Vec<u32>)> = (0..6).map(|v| (0, vec![v])).collect();
        for a in 0..6u32 {
            for b in a + 1..6 {
                if b != a + 1 || a % 2 == 1 {
                    sets.push((1, vec![a, b]));
                }
            }
        }
        for x in [0, 1] {
            for y in [2, 3] {
                for z in [4, 5] {
                    sets.push((2, vec![x, y, z]));
                }
            }
        }
        sets.push((3, (0..6).collect()));
        let p = RankedPoset::from_vertex_sets(3, sets).unwrap();
        assert_eq!(p.f_vector(), vec![6, 12, 8, 1]);
        let r = check_axioms(&p, ConnectivityMode::Exhaustive);
        assert!(r.is_polytope());
        assert!(!r.simple.passed);
        assert_eq!(r.simple.failing_vertices.len(), 6);
    }

    #[test]
    fn detects_broken_diamond() {
        // A "digon-free" rank-2 poset whose edge has three vertices.
        let faces = vec![
            (-1, FaceLabel::Minimum),
            (0, FaceLabel::Plain(0)),
            (0, FaceLabel::Plain(1)),
            (0, FaceLabel::Plain(2)),
            (1, FaceLabel::Plain(3)),
            (1, FaceLabel::Plain(4)),
            (2, FaceLabel::Plain(5)),
        ];
        let covers = vec![(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4), (1, 5), (2, 5), (4, 6), (5, 6)];
        let p = RankedPoset::from_covers(2, faces, covers).unwrap();
        let r = check_axioms(&p, ConnectivityMode::Exhaustive);
        assert!(!r.diamond.passed);
        assert!(r.diamond.violations.iter().any(|v| v.between == 3));
    }

    #[test]
    fn detects_dead_end_and_disconnection() {
        // Two disjoint squares glued at the top: flags split into two classes.
        let mut sets: Vec<(i32, Vec<u32>)> = (0..8).map(|v| (0, vec![v])).collect();
        for base in [0, 4] {
            for k in 0..4 {
                sets.push((1, vec![base + k, base + (k + 1) % 4]));
            }
        }
        sets.push((2, (0..8).collect()));
        let p = RankedPoset::from_vertex_sets(2, sets).unwrap();
        let r = check_axioms(&p, ConnectivityMode::Exhaustive);
        assert!(r.diamond.passed);
        assert!(!r.strong_flag_connectivity.passed);
        let sampled = check_axioms(&p, ConnectivityMode::sampled(1));
        assert!(!sampled.strong_flag_connectivity.passed);

        let mut sets: Vec<(i32, Vec<u32>)> = (0..3).map(|v| (0, vec![v])).collect();
        sets.push((1, vec![0, 1]));
        sets.push((2, vec![0, 1, 2]));
        let p = RankedPoset::from_vertex_sets(2, sets).unwrap();
        assert!(!check_flag_length(&p).passed);
    }
}
