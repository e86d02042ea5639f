//! Permutation groups, graph and polytope automorphisms, and structural
//! checks of direct products `S_n x D_m`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::color::{ColorId, ColorPermutation};
use crate::flags::FlagGraph;
use crate::graph::{ColoredGraph, ExchangeGraph};
use crate::poset::{FaceId, RankedPoset};
use crate::search::{self, EdgeRule, Structure};
use crate::triangulation::{ColoredTriangulation, Polygon, PolygonSymmetry, Triangulation};

type ColorPairs = Vec<(ColorId, ColorId)>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymmetryError {
    #[error("permutation of degree {0} applied to a set of size {1}")]
    DegreeMismatch(usize, usize),
    #[error("the symmetry acts on a {0}-gon but the exchange graph lives on a {1}-gon")]
    PolygonMismatch(usize, usize),
    #[error("image {0} is not a vertex of the exchange graph")]
    NotInGraph(String),
    #[error("flag graph is incomplete: the poset fails the diamond condition")]
    NotAPolytope,
}

/// A bijection of `0..degree`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x as usize >= images.len() || std::mem::replace(&mut seen[x as usize], true) {
                return None;
            }
        }
        Some(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y as usize] = x as u32;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.images.len()];
        let mut order = 1usize;
        for start in 0..self.images.len() {
            let mut len = 0usize;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            if len > 0 {
                order = lcm(order, len);
            }
        }
        order
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|&(x, &y)| x as u32 == y).count()
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.compose(other) == other.compose(self)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// A finite permutation group with all elements enumerated.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    members: HashSet<Permutation>,
}

impl PermGroup {
    /// The group generated by `generators`, enumerated by closure.
    pub fn generate(degree: usize, generators: Vec<Permutation>) -> Self {
        let members = closure(degree, &generators);
        let mut elements: Vec<Permutation> = members.iter().cloned().collect();
        elements.sort_unstable();
        PermGroup {
            degree,
            generators,
            elements,
            members,
        }
    }

    /// A group from its complete element list. Returns `None` if the list is
    /// not closed under composition or lacks the identity.
    pub fn from_elements(degree: usize, mut elements: Vec<Permutation>) -> Option<Self> {
        elements.sort_unstable();
        elements.dedup();
        let members: HashSet<Permutation> = elements.iter().cloned().collect();
        if !members.contains(&Permutation::identity(degree)) {
            return None;
        }
        let mut generators = Vec::new();
        let mut reached: HashSet<Permutation> = HashSet::from([Permutation::identity(degree)]);
        for g in &elements {
            if !reached.contains(g) {
                generators.push(g.clone());
                reached = closure(degree, &generators);
                if !reached.is_subset(&members) {
                    return None;
                }
            }
        }
        if reached.len() != members.len() {
            return None;
        }
        Some(PermGroup {
            degree,
            generators,
            elements,
            members,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::generate(degree, Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Elements in sorted order; the identity comes first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.members.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.elements.iter().all(|g| other.contains(g))
    }

    pub fn intersection_order(&self, other: &PermGroup) -> usize {
        self.elements.iter().filter(|g| other.contains(g)).count()
    }

    pub fn export(&self) -> GroupJson {
        GroupJson {
            degree: self.degree,
            order: self.order(),
            generators: self.generators.clone(),
        }
    }
}

fn closure(degree: usize, generators: &[Permutation]) -> HashSet<Permutation> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(g) = frontier.pop() {
        for s in generators {
            let h = s.compose(&g);
            if seen.insert(h.clone()) {
                frontier.push(h);
            }
        }
    }
    seen
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupJson {
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<Permutation>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AutMode {
    Full,
    ColorPreserving,
    ColorRespecting,
}

impl AutMode {
    fn rule(self) -> EdgeRule {
        match self {
            AutMode::Full => EdgeRule::Ignore,
            AutMode::ColorPreserving => EdgeRule::Preserve,
            AutMode::ColorRespecting => EdgeRule::Respect,
        }
    }
}

/// An automorphism group of a colored graph. For the color-aware modes each
/// element carries the permutation it induces on the color set, aligned with
/// `group.elements()`.
#[derive(Clone, Debug)]
pub struct GraphAutomorphisms {
    pub mode: AutMode,
    pub group: PermGroup,
    pub color_maps: Vec<Option<Vec<(ColorId, ColorId)>>>,
}

impl GraphAutomorphisms {
    pub fn color_map_of(&self, g: &Permutation) -> Option<&[(ColorId, ColorId)]> {
        let k = self.group.elements().binary_search(g).ok()?;
        self.color_maps[k].as_deref()
    }

    pub fn export(&self) -> AutomorphismJson {
        let generators = self.group.generators().to_vec();
        let color_maps = generators
            .iter()
            .map(|g| self.color_map_of(g).map(|m| m.to_vec()))
            .collect();
        AutomorphismJson {
            mode: match self.mode {
                AutMode::Full => "full",
                AutMode::ColorPreserving => "preserving",
                AutMode::ColorRespecting => "respecting",
            }
            .into(),
            degree: self.group.degree(),
            order: self.group.order(),
            generators,
            color_maps,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AutomorphismJson {
    pub mode: String,
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<Permutation>,
    /// Induced color map of each generator, as `(color, image)` pairs.
    pub color_maps: Vec<Option<Vec<(ColorId, ColorId)>>>,
}

pub fn graph_structure(graph: &ColoredGraph) -> Structure {
    let colors = graph.color_set();
    let edges = graph.edges().iter().enumerate().map(|(e, &(u, v))| {
        let c = graph
            .edge_color(e as u32)
            .and_then(|c| colors.iter().position(|&x| x == c))
            .unwrap_or(0);
        (u, v, c as u32)
    });
    Structure::new(vec![0; graph.num_vertices()], edges)
}

/// `Γ(G)`, `Γ_p(G)` or `Γ_c(G)` depending on `mode`.
pub fn graph_automorphisms(graph: &ColoredGraph, mode: AutMode) -> GraphAutomorphisms {
    let structure = graph_structure(graph);
    let colors = graph.color_set();
    let mut found: Vec<(Permutation, Option<ColorPairs>)> =
        search::automorphisms(&structure, mode.rule())
            .into_iter()
            .map(|m| {
                let perm = Permutation::new(m.vertices).expect("search returns bijections");
                let colors_map = match mode {
                    AutMode::Full => None,
                    AutMode::ColorPreserving => Some(colors.iter().map(|&c| (c, c)).collect()),
                    AutMode::ColorRespecting => {
                        let map = m.colors.unwrap_or_default();
                        let mut pairs: Vec<(ColorId, ColorId)> = (0..colors.len())
                            .map(|i| {
                                let j = map.get(&(i as u32)).copied().unwrap_or(i as u32);
                                (colors[i], colors[j as usize])
                            })
                            .collect();
                        pairs.sort_unstable();
                        Some(pairs)
                    }
                };
                (perm, colors_map)
            })
            .collect();
    found.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let (elements, color_maps): (Vec<_>, Vec<_>) = found.into_iter().unzip();
    let group = PermGroup::from_elements(graph.num_vertices(), elements).expect("automorphisms form a group");
    GraphAutomorphisms {
        mode,
        group,
        color_maps,
    }
}

/// The automorphism group of an abstract polytope: face permutations plus
/// the induced action on vertices.
#[derive(Clone, Debug)]
pub struct PolytopeAutomorphisms {
    /// Face maps, `face_maps[k][f]` is the image of face `f`.
    pub face_maps: Vec<Vec<FaceId>>,
    /// Vertex permutations (by vertex index), aligned with `face_maps`.
    pub vertex_actions: Vec<Permutation>,
    /// Flag image of the base flag (flag 0) under each automorphism.
    pub base_images: Vec<u32>,
    pub flag_count: usize,
}

impl PolytopeAutomorphisms {
    pub fn order(&self) -> usize {
        self.face_maps.len()
    }

    pub fn vertex_group(&self) -> PermGroup {
        let degree = self.vertex_actions.first().map_or(0, |p| p.degree());
        PermGroup::from_elements(degree, self.vertex_actions.clone()).expect("automorphisms form a group")
    }
}

/// Automorphisms of a polytope, found by mapping a base flag to every flag
/// and extending along flag adjacencies. Targets are first filtered by the
/// stable partition of the flag graph.
pub fn polytope_automorphisms(poset: &RankedPoset) -> Result<PolytopeAutomorphisms, SymmetryError> {
    let flags = FlagGraph::new(poset);
    polytope_automorphisms_with_flags(poset, &flags)
}

pub fn polytope_automorphisms_with_flags(
    poset: &RankedPoset,
    flags: &FlagGraph,
) -> Result<PolytopeAutomorphisms, SymmetryError> {
    if !flags.is_complete() || flags.is_empty() {
        return Err(SymmetryError::NotAPolytope);
    }
    let count = flags.len() as u32;
    let rank = flags.rank();
    let structure = Structure::new(
        vec![0; count as usize],
        (0..count).flat_map(|k| {
            (0..rank).filter_map(move |i| {
                let j = flags.adjacent(k, i)?;
                (k < j).then_some((k, j, i as u32))
            })
        }),
    );
    let cells = search::stable_cells(&structure, EdgeRule::Preserve);
    let targets: Vec<u32> = (0..count).filter(|&t| cells[t as usize] == cells[0]).collect();
    let mut found: Vec<(u32, Vec<FaceId>)> = targets
        .par_iter()
        .filter_map(|&t| extend_flag_map(poset, flags, t).map(|m| (t, m)))
        .collect();
    found.sort_unstable_by_key(|x| x.0);
    let vertex_faces = poset.faces_of_rank(0);
    let vertex_actions = found
        .iter()
        .map(|(_, m)| {
            Permutation::new(
                vertex_faces
                    .iter()
                    .map(|&v| poset.face(m[v as usize]).vertices[0])
                    .collect(),
            )
            .expect("automorphisms permute vertices")
        })
        .collect();
    let (base_images, face_maps) = found.into_iter().unzip();
    Ok(PolytopeAutomorphisms {
        face_maps,
        vertex_actions,
        base_images,
        flag_count: count as usize,
    })
}

fn extend_flag_map(poset: &RankedPoset, flags: &FlagGraph, target: u32) -> Option<Vec<FaceId>> {
    const UNSET: u32 = u32::MAX;
    let count = flags.len();
    let rank = flags.rank();
    let mut phi = vec![UNSET; count];
    let mut used = vec![false; count];
    phi[0] = target;
    used[target as usize] = true;
    let mut stack = vec![0u32];
    while let Some(f) = stack.pop() {
        let g = phi[f as usize];
        for i in 0..rank {
            let (f2, g2) = (flags.adjacent(f, i)?, flags.adjacent(g, i)?);
            match phi[f2 as usize] {
                UNSET => {
                    if std::mem::replace(&mut used[g2 as usize], true) {
                        return None;
                    }
                    phi[f2 as usize] = g2;
                    stack.push(f2);
                }
                existing if existing != g2 => return None,
                _ => {}
            }
        }
    }
    if phi.contains(&UNSET) {
        return None;
    }
    let mut face_map = vec![UNSET; poset.num_faces()];
    for f in 0..count as u32 {
        let (src, dst) = (flags.flag(f), flags.flag(phi[f as usize]));
        for (&a, &b) in src.iter().zip(dst) {
            match face_map[a as usize] {
                UNSET => face_map[a as usize] = b,
                existing if existing != b => return None,
                _ => {}
            }
        }
    }
    if face_map.contains(&UNSET) {
        return None;
    }
    Some(face_map)
}

/// The expected isomorphism type of an automorphism group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GroupShape {
    /// `S_n x D_m`, of order `n! * 2m`.
    SymmetricTimesDihedral { n: usize, m: usize },
    /// `D_m`, of order `2m`.
    Dihedral { m: usize },
}

impl GroupShape {
    pub fn expected_order(self) -> usize {
        match self {
            GroupShape::SymmetricTimesDihedral { n, m } => (1..=n).product::<usize>() * 2 * m,
            GroupShape::Dihedral { m } => 2 * m,
        }
    }
}

impl fmt::Display for GroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupShape::SymmetricTimesDihedral { n, m } => write!(f, "S{n} x D{m}"),
            GroupShape::Dihedral { m } => write!(f, "D{m}"),
        }
    }
}

/// Explicit generators for the two factors: adjacent transpositions for
/// `S_n`, and a rotation and a reflection for `D_m`.
#[derive(Clone, Debug)]
pub struct FactorGenerators {
    pub transpositions: Vec<Permutation>,
    pub rotation: Permutation,
    pub reflection: Permutation,
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub shape: String,
    pub expected_order: usize,
    pub order: usize,
    pub checks: Vec<(String, bool)>,
    pub holds: bool,
}

/// Checks `group ≅ S_n x D_m` (or `D_m`) via the given generators: order
/// count, Coxeter relations for the transpositions, dihedral relations for
/// rotation and reflection, membership, elementwise commuting of the two
/// factors, and trivial intersection.
pub fn verify_group_structure(group: &PermGroup, shape: GroupShape, gens: &FactorGenerators) -> StructureReport {
    let mut checks: Vec<(String, bool)> = Vec::new();
    let expected_order = shape.expected_order();
    checks.push(("order".into(), group.order() == expected_order));
    let degree = group.degree();
    let degrees_ok = gens.transpositions.iter().chain([&gens.rotation, &gens.reflection]).all(|g| g.degree() == degree);
    checks.push(("generator degree".into(), degrees_ok));
    if !degrees_ok {
        return finish(shape, expected_order, group, checks);
    }

    let m = match shape {
        GroupShape::SymmetricTimesDihedral { m, .. } | GroupShape::Dihedral { m } => m,
    };
    let (r, s) = (&gens.rotation, &gens.reflection);
    checks.push(("rotation order".into(), r.order() == m));
    checks.push(("reflection order".into(), s.order() == 2 || (m == 1 && s.order() <= 2)));
    checks.push(("s r s = r^-1".into(), s.compose(r).compose(s) == r.inverse()));
    let dihedral = PermGroup::generate(degree, vec![r.clone(), s.clone()]);
    checks.push(("dihedral factor order".into(), dihedral.order() == 2 * m));
    checks.push(("dihedral factor inside".into(), dihedral.is_subgroup_of(group)));

    if let GroupShape::SymmetricTimesDihedral { n, .. } = shape {
        let t = &gens.transpositions;
        checks.push(("transposition count".into(), t.len() + 1 == n.max(1)));
        let mut coxeter = t.iter().all(|x| x.order() == 2);
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                let want = if j == i + 1 { 3 } else { 2 };
                coxeter &= t[i].compose(&t[j]).order() == want;
            }
        }
        checks.push(("Coxeter relations".into(), coxeter));
        let symmetric = PermGroup::generate(degree, t.clone());
        checks.push((
            "symmetric factor order".into(),
            symmetric.order() == (1..=n).product::<usize>(),
        ));
        checks.push(("symmetric factor inside".into(), symmetric.is_subgroup_of(group)));
        let commute = t.iter().all(|x| x.commutes_with(r) && x.commutes_with(s));
        checks.push(("factors commute".into(), commute));
        checks.push(("trivial intersection".into(), symmetric.intersection_order(&dihedral) == 1));
    }
    finish(shape, expected_order, group, checks)
}

fn finish(shape: GroupShape, expected_order: usize, group: &PermGroup, checks: Vec<(String, bool)>) -> StructureReport {
    StructureReport {
        shape: shape.to_string(),
        expected_order,
        order: group.order(),
        holds: checks.iter().all(|c| c.1),
        checks,
    }
}

/// Objects a polygon symmetry can act on.
pub trait Relabel: Sized {
    fn polygon_of(&self) -> Polygon;
    fn relabel(&self, gamma: &PolygonSymmetry) -> Self;
}

impl Relabel for Triangulation {
    fn polygon_of(&self) -> Polygon {
        self.polygon()
    }

    fn relabel(&self, gamma: &PolygonSymmetry) -> Self {
        self.relabeled(gamma)
    }
}

impl Relabel for ColoredTriangulation {
    fn polygon_of(&self) -> Polygon {
        self.polygon()
    }

    fn relabel(&self, gamma: &PolygonSymmetry) -> Self {
        self.relabeled(gamma)
    }
}

/// The vertex permutation `t -> t_gamma` induced by a polygon symmetry. On
/// centrally symmetric triangulations the half-turn acts trivially, so the
/// induced action factors through the dihedral group modulo the half-turn.
pub fn polygon_symmetry_action<T>(exchange: &ExchangeGraph<T>, gamma: &PolygonSymmetry) -> Result<Permutation, SymmetryError>
where
    T: Relabel + Clone + Eq + std::hash::Hash + fmt::Display,
{
    let k = gamma.polygon().num_vertices();
    if let Some(t) = exchange.vertices().first() {
        let own = t.polygon_of().num_vertices();
        if own != k {
            return Err(SymmetryError::PolygonMismatch(k, own));
        }
    }
    let images = exchange
        .vertices()
        .iter()
        .map(|t| {
            let u = t.relabel(gamma);
            exchange.index_of(&u).ok_or_else(|| SymmetryError::NotInGraph(u.to_string()))
        })
        .collect::<Result<Vec<u32>, _>>()?;
    Ok(Permutation::new(images).expect("relabeling is a bijection"))
}

/// The vertex permutation `t -> t_sigma` induced by permuting colors.
pub fn color_permutation_action(
    exchange: &ExchangeGraph<ColoredTriangulation>,
    sigma: &ColorPermutation,
) -> Result<Permutation, SymmetryError> {
    let images = exchange
        .vertices()
        .iter()
        .map(|t| {
            if let Some(c) = t.colors().iter().find(|c| !c.is_uncolor() && c.index() >= sigma.len()) {
                return Err(SymmetryError::DegreeMismatch(sigma.len(), c.index() + 1));
            }
            let u = t.recolored(sigma);
            exchange.index_of(&u).ok_or_else(|| SymmetryError::NotInGraph(u.to_string()))
        })
        .collect::<Result<Vec<u32>, _>>()?;
    Ok(Permutation::new(images).expect("recoloring is a bijection"))
}

/// Generators of the explicit `S_n x D_m` subgroup acting on a colorful
/// exchange graph: adjacent color transpositions, the rotation by one step
/// and the reflection `v -> -v`.
pub fn colorful_factor_generators(exchange: &ExchangeGraph<ColoredTriangulation>) -> Result<FactorGenerators, SymmetryError> {
    let polygon = exchange.vertex(0).polygon();
    let n = polygon.color_count();
    let transpositions = (1..n)
        .map(|i| {
            let sigma = ColorPermutation::transposition(n, ColorId(i as u16 - 1), ColorId(i as u16))
                .expect("colors in range");
            color_permutation_action(exchange, &sigma)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let (rotation, reflection) = dihedral_generators(exchange, polygon)?;
    Ok(FactorGenerators {
        transpositions,
        rotation,
        reflection,
    })
}

/// Rotation and reflection generators for an uncolored exchange graph.
pub fn classical_factor_generators(exchange: &ExchangeGraph<Triangulation>) -> Result<FactorGenerators, SymmetryError> {
    let polygon = exchange.vertex(0).polygon();
    let (rotation, reflection) = dihedral_generators(exchange, polygon)?;
    Ok(FactorGenerators {
        transpositions: Vec::new(),
        rotation,
        reflection,
    })
}

fn dihedral_generators<T>(exchange: &ExchangeGraph<T>, polygon: Polygon) -> Result<(Permutation, Permutation), SymmetryError>
where
    T: Relabel + Clone + Eq + std::hash::Hash + fmt::Display,
{
    let rotation = polygon_symmetry_action(exchange, &PolygonSymmetry::rotation(polygon, 1))?;
    let reflection = polygon_symmetry_action(exchange, &PolygonSymmetry::reflection(polygon, 0))?;
    Ok((rotation, reflection))
}

/// Transports vertex permutations along a vertex bijection `map`
/// (`map[v]` is the vertex of the other structure corresponding to `v`).
pub fn conjugate_by(p: &Permutation, map: &[u32]) -> Permutation {
    let mut images = vec![0; map.len()];
    for (v, &w) in map.iter().enumerate() {
        images[w as usize] = map[p.apply(v as u32) as usize];
    }
    Permutation { images }
}

/// Whether two groups on the same points have the same elements.
pub fn same_elements(a: &PermGroup, b: &PermGroup) -> bool {
    a.order() == b.order() && a.is_subgroup_of(b)
}

/// Counts elements by order, e.g. for reporting.
pub fn order_statistics(group: &PermGroup) -> Vec<(usize, usize)> {
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for g in group.elements() {
        *counts.entry(g.order()).or_default() += 1;
    }
    let mut out: Vec<(usize, usize)> = counts.into_iter().collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[u32]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn permutation_basics() {
        let a = perm(&[1, 2, 0, 3]);
        let b = perm(&[0, 1, 3, 2]);
        assert_eq!(a.compose(&b).images(), &[1, 2, 3, 0]);
        assert_eq!(a.order(), 3);
        assert_eq!(a.compose(&b).order(), 4);
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(b.fixed_points(), 2);
        assert!(Permutation::new(vec![0, 0]).is_none());
        assert!(Permutation::new(vec![2, 0]).is_none());
    }

    #[test]
    fn groups_and_structure() {
        // D_5 on a pentagon, and S_2 x D_5 on two disjoint pentagons'
        // worth of points (a 10-cycle with the swap as antipodal map).
        let r = perm(&[1, 2, 3, 4, 0]);
        let s = perm(&[0, 4, 3, 2, 1]);
        let d5 = PermGroup::generate(5, vec![r.clone(), s.clone()]);
        assert_eq!(d5.order(), 10);
        let gens = FactorGenerators {
            transpositions: vec![],
            rotation: r,
            reflection: s,
        };
        assert!(verify_group_structure(&d5, GroupShape::Dihedral { m: 5 }, &gens).holds);
        assert!(!verify_group_structure(&PermGroup::trivial(5), GroupShape::Dihedral { m: 5 }, &gens).holds);
        let rebuilt = PermGroup::from_elements(5, d5.elements().to_vec()).unwrap();
        assert_eq!(rebuilt.order(), 10);
        assert!(rebuilt.generators().len() <= 2);
        assert!(PermGroup::from_elements(5, vec![Permutation::identity(5), gens.rotation.clone()]).is_none());
        assert_eq!(order_statistics(&d5), vec![(1, 1), (2, 5), (5, 4)]);
    }

    #[test]
    fn ten_cycle_automorphisms() {
        let edges = (0..10u32).map(|v| (v, (v + 1) % 10, ColorId((v % 2) as u16))).collect();
        let g = ColoredGraph::new(10, edges).unwrap();
        let full = graph_automorphisms(&g, AutMode::Full);
        let resp = graph_automorphisms(&g, AutMode::ColorRespecting);
        let pres = graph_automorphisms(&g, AutMode::ColorPreserving);
        assert_eq!((full.group.order(), resp.group.order(), pres.group.order()), (20, 20, 10));
        assert!(pres.group.is_subgroup_of(&resp.group));
        assert!(resp.group.is_subgroup_of(&full.group));
        let flip = perm(&[1, 0, 9, 8, 7, 6, 5, 4, 3, 2]);
        assert_eq!(
            resp.color_map_of(&flip).unwrap(),
            &[(ColorId(0), ColorId(0)), (ColorId(1), ColorId(1))]
        );
        let shift = perm(&[1, 2, 3, 4, 5, 6, 7, 8, 9, 0]);
        assert_eq!(
            resp.color_map_of(&shift).unwrap(),
            &[(ColorId(0), ColorId(1)), (ColorId(1), ColorId(0))]
        );
    }

    #[test]
    fn cube_polytope_group() {
        let auts = polytope_automorphisms(&crate::poset::samples::cube()).unwrap();
        assert_eq!(auts.order(), 48);
        assert_eq!(auts.vertex_group().order(), 48);
    }

    #[test]
    fn conjugation_transports_actions() {
        let p = perm(&[1, 2, 0]);
        let map = [2, 0, 1];
        let q = conjugate_by(&p, &map);
        for v in 0..3u32 {
            assert_eq!(q.apply(map[v as usize]), map[p.apply(v) as usize]);
        }
    }
}
