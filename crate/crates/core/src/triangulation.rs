//! Convex polygons, their diagonals and triangulations, and the flip move.
//!
//! Vertices are labeled `1..=N` in cyclic order. A centrally symmetric polygon
//! has an even vertex count `N = 2m`, and its half-turn maps `i` to `i + m`
//! (mod `N`). All geometry is combinatorial: two diagonals cross exactly when
//! their four endpoints are distinct and one endpoint of the second lies
//! strictly inside the cyclic interval spanned by the first.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::color::{ColorId, ColorPermutation};

pub type Label = u16;

/// Largest supported polygon; adjacency is tracked in `u64` bitmasks.
pub const MAX_POLYGON_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TriangulationError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("polygons with more than {MAX_POLYGON_VERTICES} vertices are not supported, got {0}")]
    TooManyVertices(usize),
    #[error("a centrally symmetric polygon needs an even vertex count of at least 6, got {0}")]
    NotCentrallySymmetric(usize),
    #[error("{{{0},{1}}} is not a diagonal of a {2}-gon")]
    InvalidDiagonal(Label, Label, usize),
    #[error("diagonals {0} and {1} cross")]
    Crossing(Diagonal, Diagonal),
    #[error("duplicate diagonal {0}")]
    DuplicateDiagonal(Diagonal),
    #[error("expected {expected} diagonals, got {got}")]
    WrongDiagonalCount { expected: usize, got: usize },
    #[error("triangulation is not centrally symmetric: the half-turn image of {0} is missing")]
    NotSymmetric(Diagonal),
    #[error("{0} is not a diagonal of the triangulation")]
    NotInTriangulation(Diagonal),
    #[error("expected {expected} colors, got {got}")]
    ColorCountMismatch { expected: usize, got: usize },
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("the vertex map is not a symmetry of the {0}-gon")]
    NotASymmetry(usize),
    #[error("malformed triangulation JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, TriangulationError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolygonKind {
    Plain,
    CentrallySymmetric,
}

/// A labeled convex polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polygon {
    num_vertices: u16,
    kind: PolygonKind,
}

impl Polygon {
    pub fn new(num_vertices: usize, kind: PolygonKind) -> Result<Self> {
        if num_vertices < 3 {
            return Err(TriangulationError::TooFewVertices(num_vertices));
        }
        if num_vertices > MAX_POLYGON_VERTICES {
            return Err(TriangulationError::TooManyVertices(num_vertices));
        }
        if kind == PolygonKind::CentrallySymmetric && (!num_vertices.is_multiple_of(2) || num_vertices < 6) {
            return Err(TriangulationError::NotCentrallySymmetric(num_vertices));
        }
        Ok(Polygon {
            num_vertices: num_vertices as u16,
            kind,
        })
    }

    /// The `(n+3)`-gon whose triangulations are the vertices of the `n`-associahedron.
    pub fn associahedron(n: usize) -> Result<Self> {
        Self::new(n + 3, PolygonKind::Plain)
    }

    /// The centrally symmetric `(2n+4)`-gon behind the `(n+1)`-cyclohedron.
    pub fn cyclohedron(n: usize) -> Result<Self> {
        Self::new(2 * n + 4, PolygonKind::CentrallySymmetric)
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices as usize
    }

    pub fn kind(&self) -> PolygonKind {
        self.kind
    }

    pub fn is_centrally_symmetric(&self) -> bool {
        self.kind == PolygonKind::CentrallySymmetric
    }

    /// The parameter `n`: `N - 3` for a plain polygon, `(N - 4) / 2` for a
    /// centrally symmetric one. This is also the number of ordinary colors.
    pub fn color_count(&self) -> usize {
        match self.kind {
            PolygonKind::Plain => self.num_vertices() - 3,
            PolygonKind::CentrallySymmetric => (self.num_vertices() - 4) / 2,
        }
    }

    /// Number of diagonals in any (centrally symmetric) triangulation.
    pub fn diagonal_count(&self) -> usize {
        self.num_vertices() - 3
    }

    pub fn contains_label(&self, v: Label) -> bool {
        v >= 1 && (v as usize) <= self.num_vertices()
    }

    pub fn is_boundary_edge(&self, a: Label, b: Label) -> bool {
        let n = self.num_vertices as i32;
        let d = (a as i32 - b as i32).rem_euclid(n);
        d == 1 || d == n - 1
    }

    /// Validates and normalizes the diagonal joining `a` and `b`.
    pub fn diagonal(&self, a: Label, b: Label) -> Result<Diagonal> {
        if !self.contains_label(a) || !self.contains_label(b) || a == b || self.is_boundary_edge(a, b) {
            return Err(TriangulationError::InvalidDiagonal(a, b, self.num_vertices()));
        }
        Ok(Diagonal::new(a, b))
    }

    /// Steps between the endpoints along the shorter boundary arc.
    pub fn boundary_distance(&self, d: Diagonal) -> usize {
        let gap = (d.hi - d.lo) as usize;
        gap.min(self.num_vertices() - gap)
    }

    pub fn is_short(&self, d: Diagonal) -> bool {
        self.boundary_distance(d) == 2
    }

    pub fn is_central(&self, d: Diagonal) -> bool {
        self.is_centrally_symmetric() && (d.hi - d.lo) as usize * 2 == self.num_vertices()
    }

    /// Successor of `v` in cyclic order.
    pub fn next(&self, v: Label) -> Label {
        v % self.num_vertices + 1
    }

    /// Predecessor of `v` in cyclic order.
    pub fn prev(&self, v: Label) -> Label {
        (v + self.num_vertices - 2) % self.num_vertices + 1
    }

    /// Vertex `v` shifted by `k` steps (mod `N`).
    pub fn shift(&self, v: Label, k: i64) -> Label {
        let n = self.num_vertices as i64;
        ((v as i64 - 1 + k).rem_euclid(n) + 1) as Label
    }

    /// Image of `v` under the half-turn about the center.
    pub fn antipode(&self, v: Label) -> Label {
        self.shift(v, self.num_vertices as i64 / 2)
    }

    pub fn half_turn(&self, d: Diagonal) -> Diagonal {
        Diagonal::new(self.antipode(d.lo), self.antipode(d.hi))
    }

    /// The short diagonal `{i-1, i+1}` cutting off vertex `i`.
    pub fn ear_diagonal(&self, i: Label) -> Result<Diagonal> {
        if !self.contains_label(i) || self.num_vertices < 4 {
            return Err(TriangulationError::InvalidDiagonal(i, i, self.num_vertices()));
        }
        self.diagonal(self.prev(i), self.next(i))
    }

    pub fn all_diagonals(&self) -> Vec<Diagonal> {
        let n = self.num_vertices;
        (1..=n)
            .tuple_combinations()
            .filter(|&(a, b)| !self.is_boundary_edge(a, b))
            .map(|(a, b)| Diagonal::new(a, b))
            .collect()
    }
}

impl fmt::Display for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            PolygonKind::Plain => write!(f, "{}-gon", self.num_vertices),
            PolygonKind::CentrallySymmetric => write!(f, "centrally symmetric {}-gon", self.num_vertices),
        }
    }
}

/// A diagonal stored as `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagonal {
    lo: Label,
    hi: Label,
}

impl Diagonal {
    /// Normalizes the endpoint order. Does not check against any polygon.
    pub fn new(a: Label, b: Label) -> Self {
        Diagonal {
            lo: a.min(b),
            hi: a.max(b),
        }
    }

    pub fn lo(&self) -> Label {
        self.lo
    }

    pub fn hi(&self) -> Label {
        self.hi
    }

    pub fn endpoints(&self) -> (Label, Label) {
        (self.lo, self.hi)
    }

    pub fn has_endpoint(&self, v: Label) -> bool {
        self.lo == v || self.hi == v
    }

    pub fn crosses(&self, other: &Diagonal) -> bool {
        if self.has_endpoint(other.lo) || self.has_endpoint(other.hi) {
            return false;
        }
        let inside = |x: Label| self.lo < x && x < self.hi;
        inside(other.lo) != inside(other.hi)
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

/// A dihedral symmetry of a polygon, given by its action on labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolygonSymmetry {
    polygon: Polygon,
    images: Vec<Label>,
}

impl PolygonSymmetry {
    /// `images[v - 1]` is the image of label `v`. Fails unless the map is a
    /// bijection carrying boundary edges to boundary edges.
    pub fn new(polygon: Polygon, images: Vec<Label>) -> Result<Self> {
        let n = polygon.num_vertices();
        let bad = || TriangulationError::NotASymmetry(n);
        if images.len() != n || !images.iter().all(|&v| polygon.contains_label(v)) {
            return Err(bad());
        }
        if images.iter().unique().count() != n {
            return Err(bad());
        }
        for v in 1..=n as Label {
            let w = polygon.next(v);
            if !polygon.is_boundary_edge(images[v as usize - 1], images[w as usize - 1]) {
                return Err(bad());
            }
        }
        Ok(PolygonSymmetry { polygon, images })
    }

    /// Rotation `v -> v + k`.
    pub fn rotation(polygon: Polygon, k: i64) -> Self {
        let images = (1..=polygon.num_vertices() as Label).map(|v| polygon.shift(v, k)).collect();
        PolygonSymmetry { polygon, images }
    }

    /// Reflection `v -> k - v` (mod `N`).
    pub fn reflection(polygon: Polygon, k: i64) -> Self {
        let n = polygon.num_vertices() as i64;
        let images = (1..=n)
            .map(|v| ((k - v - 1).rem_euclid(n) + 1) as Label)
            .collect();
        PolygonSymmetry { polygon, images }
    }

    pub fn polygon(&self) -> Polygon {
        self.polygon
    }

    pub fn apply(&self, v: Label) -> Label {
        self.images[v as usize - 1]
    }

    pub fn apply_diagonal(&self, d: Diagonal) -> Diagonal {
        Diagonal::new(self.apply(d.lo), self.apply(d.hi))
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }
}

/// Per-vertex neighbor masks over the boundary plus the given diagonals.
fn edge_masks(polygon: Polygon, diagonals: &[Diagonal]) -> Vec<u64> {
    let n = polygon.num_vertices();
    let mut masks = vec![0u64; n];
    for v in 1..=n as Label {
        let w = polygon.next(v);
        masks[v as usize - 1] |= 1 << (w - 1);
        masks[w as usize - 1] |= 1 << (v - 1);
    }
    for d in diagonals {
        masks[d.lo as usize - 1] |= 1 << (d.hi - 1);
        masks[d.hi as usize - 1] |= 1 << (d.lo - 1);
    }
    masks
}

/// A maximal set of pairwise non-crossing diagonals, kept sorted.
///
/// For a centrally symmetric polygon the set is also closed under the
/// half-turn, so it contains exactly one central diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    polygon: Polygon,
    diagonals: Vec<Diagonal>,
}

impl Triangulation {
    pub fn new(polygon: Polygon, mut diagonals: Vec<Diagonal>) -> Result<Self> {
        for d in &diagonals {
            polygon.diagonal(d.lo, d.hi)?;
        }
        diagonals.sort();
        if let Some((a, _)) = diagonals.iter().tuple_windows().find(|(a, b)| a == b) {
            return Err(TriangulationError::DuplicateDiagonal(*a));
        }
        if diagonals.len() != polygon.diagonal_count() {
            return Err(TriangulationError::WrongDiagonalCount {
                expected: polygon.diagonal_count(),
                got: diagonals.len(),
            });
        }
        for (a, b) in diagonals.iter().tuple_combinations() {
            if a.crosses(b) {
                return Err(TriangulationError::Crossing(*a, *b));
            }
        }
        if polygon.is_centrally_symmetric() {
            for d in &diagonals {
                if diagonals.binary_search(&polygon.half_turn(*d)).is_err() {
                    return Err(TriangulationError::NotSymmetric(*d));
                }
            }
        }
        Ok(Triangulation { polygon, diagonals })
    }

    fn from_unsorted(polygon: Polygon, mut diagonals: Vec<Diagonal>) -> Self {
        diagonals.sort_unstable();
        Triangulation { polygon, diagonals }
    }

    pub fn polygon(&self) -> Polygon {
        self.polygon
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    pub fn contains(&self, d: Diagonal) -> bool {
        self.position(d).is_some()
    }

    fn position(&self, d: Diagonal) -> Option<usize> {
        self.diagonals.binary_search(&d).ok()
    }

    pub fn central_diagonal(&self) -> Option<Diagonal> {
        self.diagonals.iter().copied().find(|d| self.polygon.is_central(*d))
    }

    /// Number of triangles, `N - 2`.
    pub fn triangle_count(&self) -> usize {
        self.polygon.num_vertices() - 2
    }

    /// The other diagonal of the quadrilateral formed by the two triangles
    /// that share `d`.
    pub fn flip_partner(&self, d: Diagonal) -> Result<Diagonal> {
        if !self.contains(d) {
            return Err(TriangulationError::NotInTriangulation(d));
        }
        let masks = edge_masks(self.polygon, &self.diagonals);
        let common = masks[d.lo as usize - 1] & masks[d.hi as usize - 1];
        debug_assert_eq!(common.count_ones(), 2, "flip quadrilateral of {d} in {self}");
        let x = common.trailing_zeros() as Label + 1;
        let y = (63 - common.leading_zeros()) as Label + 1;
        Ok(Diagonal::new(x, y))
    }

    /// Flips `d`. In a centrally symmetric triangulation a non-central
    /// diagonal is flipped together with its half-turn partner.
    pub fn flip(&self, d: Diagonal) -> Result<Triangulation> {
        Ok(self.flip_with_replacements(d)?.0)
    }

    fn flip_with_replacements(&self, d: Diagonal) -> Result<(Triangulation, Vec<(Diagonal, Diagonal)>)> {
        let replacement = self.flip_partner(d)?;
        let mut pairs = vec![(d, replacement)];
        if self.polygon.is_centrally_symmetric() && !self.polygon.is_central(d) {
            pairs.push((self.polygon.half_turn(d), self.polygon.half_turn(replacement)));
        }
        let diagonals = self
            .diagonals
            .iter()
            .map(|x| pairs.iter().find(|(old, _)| old == x).map_or(*x, |(_, new)| *new))
            .collect();
        Ok((Triangulation::from_unsorted(self.polygon, diagonals), pairs))
    }

    /// One representative diagonal per independent flip: every diagonal of
    /// a plain triangulation; the central diagonal plus the smaller diagonal
    /// of each symmetric pair otherwise.
    pub fn flip_units(&self) -> Vec<Diagonal> {
        if !self.polygon.is_centrally_symmetric() {
            return self.diagonals.clone();
        }
        self.diagonals
            .iter()
            .copied()
            .filter(|d| self.polygon.is_central(*d) || *d < self.polygon.half_turn(*d))
            .collect()
    }

    /// All triangulations one flip away.
    pub fn neighbors(&self) -> Vec<Triangulation> {
        self.flip_units()
            .into_iter()
            .map(|d| self.flip(d).expect("flip unit belongs to the triangulation"))
            .collect()
    }

    pub fn relabeled(&self, symmetry: &PolygonSymmetry) -> Triangulation {
        let diagonals = self.diagonals.iter().map(|d| symmetry.apply_diagonal(*d)).collect();
        Triangulation::from_unsorted(self.polygon, diagonals)
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.diagonals.iter().join(" "))
    }
}

/// A triangulation whose diagonals carry colors.
///
/// Plain polygons: the `n` diagonals get the `n` colors bijectively.
/// Centrally symmetric polygons: the central diagonal is [`ColorId::UNCOLOR`],
/// both diagonals of a symmetric pair share a color, and distinct pairs use
/// distinct colors from `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredTriangulation {
    support: Triangulation,
    colors: Vec<ColorId>,
}

impl ColoredTriangulation {
    pub fn new(support: Triangulation, coloring: &[(Diagonal, ColorId)]) -> Result<Self> {
        if coloring.len() != support.diagonals.len() {
            return Err(TriangulationError::InvalidColoring(format!(
                "{} colored diagonals for {} diagonals",
                coloring.len(),
                support.diagonals.len()
            )));
        }
        let mut colors = vec![None; support.diagonals.len()];
        for &(d, c) in coloring {
            let slot = support
                .position(d)
                .ok_or(TriangulationError::NotInTriangulation(d))?;
            if colors[slot].replace(c).is_some() {
                return Err(TriangulationError::DuplicateDiagonal(d));
            }
        }
        let colors = colors.into_iter().map(|c| c.expect("every slot filled")).collect();
        Self::from_aligned(support, colors)
    }

    /// `colors[k]` colors the `k`-th diagonal of `support` in sorted order.
    pub fn from_aligned(support: Triangulation, colors: Vec<ColorId>) -> Result<Self> {
        check_coloring(&support, &colors)?;
        Ok(ColoredTriangulation { support, colors })
    }

    pub fn support(&self) -> &Triangulation {
        &self.support
    }

    pub fn polygon(&self) -> Polygon {
        self.support.polygon
    }

    pub fn colors(&self) -> &[ColorId] {
        &self.colors
    }

    pub fn coloring(&self) -> impl Iterator<Item = (Diagonal, ColorId)> + '_ {
        self.support.diagonals.iter().copied().zip(self.colors.iter().copied())
    }

    pub fn color_of(&self, d: Diagonal) -> Option<ColorId> {
        self.support.position(d).map(|k| self.colors[k])
    }

    /// Diagonals carrying color `c` (one or two of them).
    pub fn diagonals_with_color(&self, c: ColorId) -> Vec<Diagonal> {
        self.coloring().filter(|&(_, x)| x == c).map(|(d, _)| d).collect()
    }

    /// Flips `d` (and its partner in the symmetric case), keeping colors.
    pub fn flip(&self, d: Diagonal) -> Result<ColoredTriangulation> {
        let (support, pairs) = self.support.flip_with_replacements(d)?;
        let mut coloring: Vec<(Diagonal, ColorId)> = self.coloring().collect();
        for entry in &mut coloring {
            if let Some((_, new)) = pairs.iter().find(|(old, _)| *old == entry.0) {
                entry.0 = *new;
            }
        }
        coloring.sort_unstable();
        let colors = coloring.into_iter().map(|(_, c)| c).collect();
        Ok(ColoredTriangulation { support, colors })
    }

    /// Flips the diagonal(s) of color `c`.
    pub fn flip_color(&self, c: ColorId) -> Result<ColoredTriangulation> {
        let d = *self
            .diagonals_with_color(c)
            .first()
            .ok_or_else(|| TriangulationError::InvalidColoring(format!("color {c} is not used")))?;
        self.flip(d)
    }

    /// All colored triangulations one flip away, with the color of the flip.
    pub fn neighbors(&self) -> Vec<(ColorId, ColoredTriangulation)> {
        self.support
            .flip_units()
            .into_iter()
            .map(|d| {
                let c = self.color_of(d).expect("flip unit is colored");
                (c, self.flip(d).expect("flip unit belongs to the triangulation"))
            })
            .collect()
    }

    /// Replaces every color `c` by `sigma(c)`; the support is unchanged.
    pub fn recolored(&self, sigma: &ColorPermutation) -> ColoredTriangulation {
        ColoredTriangulation {
            support: self.support.clone(),
            colors: self.colors.iter().map(|&c| sigma.apply(c)).collect(),
        }
    }

    /// Moves the support by a polygon symmetry, carrying colors along.
    pub fn relabeled(&self, symmetry: &PolygonSymmetry) -> ColoredTriangulation {
        let mut coloring: Vec<(Diagonal, ColorId)> = self
            .coloring()
            .map(|(d, c)| (symmetry.apply_diagonal(d), c))
            .collect();
        coloring.sort_unstable();
        let (diagonals, colors) = coloring.into_iter().unzip();
        ColoredTriangulation {
            support: Triangulation {
                polygon: self.support.polygon,
                diagonals,
            },
            colors,
        }
    }
}

impl fmt::Display for ColoredTriangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.coloring().map(|(d, c)| format!("{d}:{c}")).join(" ")
        )
    }
}

fn check_coloring(support: &Triangulation, colors: &[ColorId]) -> Result<()> {
    let polygon = support.polygon;
    let n = polygon.color_count();
    let bad = |msg: String| Err(TriangulationError::InvalidColoring(msg));
    if colors.len() != support.diagonals.len() {
        return bad(format!("{} colors for {} diagonals", colors.len(), support.diagonals.len()));
    }
    let mut owner: Vec<Option<Diagonal>> = vec![None; n];
    for (&d, &c) in support.diagonals.iter().zip(colors) {
        let central = polygon.is_central(d);
        if central {
            if !c.is_uncolor() {
                return bad(format!("central diagonal {d} must be uncolored"));
            }
            continue;
        }
        if c.is_uncolor() || c.index() >= n {
            return bad(format!("color {c} of {d} is outside 0..{n}"));
        }
        let partner = if polygon.is_centrally_symmetric() {
            polygon.half_turn(d)
        } else {
            d
        };
        match owner[c.index()] {
            None => owner[c.index()] = Some(d),
            Some(prev) if prev == partner && partner != d => {}
            Some(prev) => return bad(format!("{prev} and {d} share color {c}")),
        }
    }
    if polygon.is_centrally_symmetric() {
        for (&d, &c) in support.diagonals.iter().zip(colors) {
            if !polygon.is_central(d) {
                let p = polygon.half_turn(d);
                let pc = support.position(p).map(|k| colors[k]);
                if pc != Some(c) {
                    return bad(format!("{d} and its partner {p} have different colors"));
                }
            }
        }
    }
    Ok(())
}

/// Diagonal sets of all triangulations of the polygon with the given
/// boundary (a cyclic list of labels), by ear decomposition: the triangle on
/// the edge `{first, last}` has some apex in between, and the two sides are
/// triangulated recursively.
fn triangulate_boundary(boundary: &[Label]) -> Vec<Vec<Diagonal>> {
    let k = boundary.len();
    if k <= 3 {
        return vec![Vec::new()];
    }
    let (first, last) = (boundary[0], boundary[k - 1]);
    let mut out = Vec::new();
    for apex in 1..k - 1 {
        let left = triangulate_boundary(&boundary[..=apex]);
        let right = triangulate_boundary(&boundary[apex..]);
        for (l, r) in left.iter().cartesian_product(&right) {
            let mut ds: Vec<Diagonal> = l.iter().chain(r).copied().collect();
            if apex > 1 {
                ds.push(Diagonal::new(first, boundary[apex]));
            }
            if apex < k - 2 {
                ds.push(Diagonal::new(boundary[apex], last));
            }
            out.push(ds);
        }
    }
    out
}

/// Every triangulation of a plain polygon, or every centrally symmetric
/// triangulation of a centrally symmetric one. Sorted.
pub fn enumerate_triangulations(polygon: Polygon) -> Vec<Triangulation> {
    let n = polygon.num_vertices() as Label;
    let mut out: Vec<Triangulation> = match polygon.kind {
        PolygonKind::Plain => {
            let boundary: Vec<Label> = (1..=n).collect();
            triangulate_boundary(&boundary)
                .into_iter()
                .map(|ds| Triangulation::from_unsorted(polygon, ds))
                .collect()
        }
        PolygonKind::CentrallySymmetric => {
            let half = n / 2;
            let mut all = Vec::new();
            for start in 1..=half {
                let boundary: Vec<Label> = (0..=half).map(|k| polygon.shift(start, k as i64)).collect();
                let central = Diagonal::new(start, start + half);
                for ds in triangulate_boundary(&boundary) {
                    let mut full: Vec<Diagonal> = ds.iter().map(|d| polygon.half_turn(*d)).collect();
                    full.extend(ds);
                    full.push(central);
                    all.push(Triangulation::from_unsorted(polygon, full));
                }
            }
            all
        }
    };
    out.sort_unstable();
    out
}

/// Every valid coloring of `support` by the colors `0..n`.
pub fn colorings(support: &Triangulation) -> Vec<ColoredTriangulation> {
    let polygon = support.polygon;
    let n = polygon.color_count();
    // Color slots: one per diagonal (plain) or per symmetric pair.
    let units = support.flip_units();
    let slots: Vec<Diagonal> = units.into_iter().filter(|d| !polygon.is_central(*d)).collect();
    let mut out = Vec::new();
    for perm in (0..n as u16).permutations(n) {
        let mut coloring: Vec<(Diagonal, ColorId)> = Vec::with_capacity(support.diagonals.len());
        for (d, &c) in slots.iter().zip(&perm) {
            coloring.push((*d, ColorId(c)));
            if polygon.is_centrally_symmetric() {
                coloring.push((polygon.half_turn(*d), ColorId(c)));
            }
        }
        if let Some(c) = support.central_diagonal() {
            coloring.push((c, ColorId::UNCOLOR));
        }
        coloring.sort_unstable();
        let colors = coloring.into_iter().map(|(_, c)| c).collect();
        out.push(ColoredTriangulation {
            support: support.clone(),
            colors,
        });
    }
    out
}

/// All colored triangulations with `color_count` colors; the count must
/// equal the polygon's parameter `n`. Sorted.
pub fn enumerate_colored_triangulations(polygon: Polygon, color_count: usize) -> Result<Vec<ColoredTriangulation>> {
    if color_count != polygon.color_count() {
        return Err(TriangulationError::ColorCountMismatch {
            expected: polygon.color_count(),
            got: color_count,
        });
    }
    let mut out: Vec<ColoredTriangulation> = enumerate_triangulations(polygon)
        .iter()
        .flat_map(colorings)
        .collect();
    out.sort_unstable();
    Ok(out)
}

pub mod json {
    //! The triangulation interchange format:
    //! `{"polygon": {"n_vertices": N, "kind": "plain"}, "diagonals": [[i,j],...],
    //! "colors": [[i,j,c],...]}` with diagonals in lexicographic order and the
    //! uncolor written as `"c*"`.

    use super::*;

    #[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
    #[serde(deny_unknown_fields)]
    pub struct PolygonJson {
        pub n_vertices: usize,
        pub kind: PolygonKind,
    }

    #[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
    #[serde(deny_unknown_fields)]
    pub struct TriangulationJson {
        pub polygon: PolygonJson,
        pub diagonals: Vec<(Label, Label)>,
        #[serde(default)]
        pub colors: Vec<(Label, Label, ColorId)>,
    }

    impl From<&Triangulation> for TriangulationJson {
        fn from(t: &Triangulation) -> Self {
            TriangulationJson {
                polygon: PolygonJson {
                    n_vertices: t.polygon.num_vertices(),
                    kind: t.polygon.kind,
                },
                diagonals: t.diagonals.iter().map(|d| d.endpoints()).collect(),
                colors: Vec::new(),
            }
        }
    }

    impl From<&ColoredTriangulation> for TriangulationJson {
        fn from(t: &ColoredTriangulation) -> Self {
            let mut out = TriangulationJson::from(&t.support);
            out.colors = t.coloring().map(|(d, c)| (d.lo, d.hi, c)).collect();
            out
        }
    }

    fn diagonals(polygon: Polygon, pairs: &[(Label, Label)]) -> Result<Vec<Diagonal>> {
        pairs.iter().map(|&(a, b)| polygon.diagonal(a, b)).collect()
    }

    impl TriangulationJson {
        fn polygon(&self) -> Result<Polygon> {
            Polygon::new(self.polygon.n_vertices, self.polygon.kind)
        }

        pub fn to_triangulation(&self) -> Result<Triangulation> {
            let polygon = self.polygon()?;
            Triangulation::new(polygon, diagonals(polygon, &self.diagonals)?)
        }

        pub fn to_colored(&self) -> Result<ColoredTriangulation> {
            let support = self.to_triangulation()?;
            let polygon = support.polygon;
            let coloring = self
                .colors
                .iter()
                .map(|&(a, b, c)| Ok((polygon.diagonal(a, b)?, c)))
                .collect::<Result<Vec<_>>>()?;
            ColoredTriangulation::new(support, &coloring)
        }
    }

    fn parse(input: &str) -> Result<TriangulationJson> {
        serde_json::from_str(input).map_err(|e| TriangulationError::Json(e.to_string()))
    }

    impl Triangulation {
        pub fn to_json(&self) -> String {
            serde_json::to_string(&TriangulationJson::from(self)).expect("serializable")
        }

        /// Parses an uncolored triangulation; a `colors` list, if present, is ignored.
        pub fn from_json_str(input: &str) -> Result<Self> {
            parse(input)?.to_triangulation()
        }
    }

    impl ColoredTriangulation {
        pub fn to_json(&self) -> String {
            serde_json::to_string(&TriangulationJson::from(self)).expect("serializable")
        }

        pub fn from_json_str(input: &str) -> Result<Self> {
            parse(input)?.to_colored()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pentagon() -> Polygon {
        Polygon::associahedron(2).unwrap()
    }

    fn d(a: Label, b: Label) -> Diagonal {
        Diagonal::new(a, b)
    }

    #[test]
    fn polygon_validation() {
        assert_eq!(
            Polygon::new(2, PolygonKind::Plain),
            Err(TriangulationError::TooFewVertices(2))
        );
        assert_eq!(
            Polygon::new(7, PolygonKind::CentrallySymmetric),
            Err(TriangulationError::NotCentrallySymmetric(7))
        );
        assert_eq!(
            Polygon::new(4, PolygonKind::CentrallySymmetric),
            Err(TriangulationError::NotCentrallySymmetric(4))
        );
        assert!(Polygon::new(65, PolygonKind::Plain).is_err());
        assert_eq!(Polygon::cyclohedron(2).unwrap().num_vertices(), 8);
    }

    #[test]
    fn diagonal_classification() {
        let hex = Polygon::associahedron(3).unwrap();
        assert!(hex.diagonal(1, 2).is_err());
        assert!(hex.diagonal(6, 1).is_err());
        assert!(hex.diagonal(3, 3).is_err());
        assert!(hex.is_short(hex.diagonal(1, 3).unwrap()));
        assert!(hex.is_short(hex.diagonal(5, 1).unwrap()));
        assert!(!hex.is_short(hex.diagonal(1, 4).unwrap()));
        assert!(!hex.is_central(d(1, 4)));
        let oct = Polygon::cyclohedron(2).unwrap();
        assert!(oct.is_central(d(1, 5)));
        assert!(!oct.is_central(d(1, 4)));
        assert_eq!(oct.half_turn(d(1, 3)), d(5, 7));
        assert_eq!(oct.half_turn(d(3, 6)), d(2, 7));
        assert_eq!(hex.ear_diagonal(1).unwrap(), d(2, 6));
    }

    #[test]
    fn crossing_is_combinatorial() {
        assert!(d(1, 3).crosses(&d(2, 4)));
        assert!(d(2, 4).crosses(&d(1, 3)));
        assert!(!d(1, 3).crosses(&d(1, 4)));
        assert!(!d(1, 4).crosses(&d(1, 3)));
        assert!(!d(1, 3).crosses(&d(4, 6)));
        assert!(d(1, 4).crosses(&d(2, 6)));
        assert!(!d(2, 5).crosses(&d(2, 5)));
    }

    #[test]
    fn triangulation_validation() {
        let p = pentagon();
        assert!(Triangulation::new(p, vec![d(1, 3), d(1, 4)]).is_ok());
        assert_eq!(
            Triangulation::new(p, vec![d(1, 3), d(2, 4)]),
            Err(TriangulationError::Crossing(d(1, 3), d(2, 4)))
        );
        assert!(matches!(
            Triangulation::new(p, vec![d(1, 3)]),
            Err(TriangulationError::WrongDiagonalCount { expected: 2, got: 1 })
        ));
        let oct = Polygon::cyclohedron(2).unwrap();
        // Fan at 1 is not symmetric.
        assert!(matches!(
            Triangulation::new(oct, vec![d(1, 3), d(1, 4), d(1, 5), d(1, 6), d(1, 7)]),
            Err(TriangulationError::NotSymmetric(_))
        ));
    }

    #[test]
    fn small_enumerations() {
        let tri = Polygon::associahedron(0).unwrap();
        let ts = enumerate_triangulations(tri);
        assert_eq!(ts.len(), 1);
        assert!(ts[0].diagonals().is_empty());
        assert_eq!(enumerate_triangulations(pentagon()).len(), 5);
        assert_eq!(enumerate_triangulations(Polygon::associahedron(3).unwrap()).len(), 14);
        assert_eq!(enumerate_triangulations(Polygon::cyclohedron(1).unwrap()).len(), 6);
    }

    #[test]
    fn colored_enumeration_checks_color_count() {
        assert_eq!(
            enumerate_colored_triangulations(pentagon(), 3).unwrap_err(),
            TriangulationError::ColorCountMismatch { expected: 2, got: 3 }
        );
        assert_eq!(enumerate_colored_triangulations(pentagon(), 2).unwrap().len(), 10);
        let quad = Polygon::associahedron(1).unwrap();
        assert_eq!(enumerate_colored_triangulations(quad, 1).unwrap().len(), 2);
    }

    #[test]
    fn pentagon_flip_keeps_color() {
        let p = pentagon();
        let support = Triangulation::new(p, vec![d(1, 3), d(1, 4)]).unwrap();
        let t = ColoredTriangulation::new(support, &[(d(1, 3), ColorId(0)), (d(1, 4), ColorId(1))]).unwrap();
        let flipped = t.flip(d(1, 3)).unwrap();
        assert_eq!(flipped.support().diagonals(), &[d(1, 4), d(2, 4)]);
        assert_eq!(flipped.color_of(d(2, 4)), Some(ColorId(0)));
        assert_eq!(flipped.color_of(d(1, 4)), Some(ColorId(1)));
        assert_eq!(flipped.flip(d(2, 4)).unwrap(), t);
        assert!(matches!(t.flip(d(2, 5)), Err(TriangulationError::NotInTriangulation(_))));
    }

    #[test]
    fn central_flip_in_octagon_fan() {
        let oct = Polygon::cyclohedron(2).unwrap();
        // Symmetric "fan" through the central diagonal {1,5}.
        let t = Triangulation::new(oct, vec![d(1, 3), d(1, 4), d(1, 5), d(5, 7), d(5, 8)]).unwrap();
        let flipped = t.flip(d(1, 5)).unwrap();
        let c = flipped.central_diagonal().unwrap();
        assert_ne!(c, d(1, 5));
        assert!(oct.is_central(c));
        assert_eq!(c, d(4, 8));
        // Pair flip moves both partners.
        let paired = t.flip(d(1, 3)).unwrap();
        assert!(paired.contains(d(2, 4)) && paired.contains(d(6, 8)));
        assert!(Triangulation::new(oct, paired.diagonals().to_vec()).is_ok());
    }

    #[test]
    fn coloring_rules_for_symmetric_polygons() {
        let oct = Polygon::cyclohedron(2).unwrap();
        let t = Triangulation::new(oct, vec![d(1, 3), d(1, 4), d(1, 5), d(5, 7), d(5, 8)]).unwrap();
        let ok = [
            (d(1, 3), ColorId(0)),
            (d(5, 7), ColorId(0)),
            (d(1, 4), ColorId(1)),
            (d(5, 8), ColorId(1)),
            (d(1, 5), ColorId::UNCOLOR),
        ];
        assert!(ColoredTriangulation::new(t.clone(), &ok).is_ok());
        let mut split = ok;
        split[1].1 = ColorId(1);
        split[3].1 = ColorId(0);
        assert!(ColoredTriangulation::new(t.clone(), &split).is_err());
        let mut colored_center = ok;
        colored_center[4].1 = ColorId(1);
        assert!(ColoredTriangulation::new(t, &colored_center).is_err());
    }

    #[test]
    fn symmetry_validation() {
        let hex = Polygon::associahedron(3).unwrap();
        assert!(PolygonSymmetry::new(hex, vec![2, 3, 4, 5, 6, 1]).is_ok());
        assert!(PolygonSymmetry::new(hex, vec![2, 1, 3, 4, 5, 6]).is_err());
        let r = PolygonSymmetry::reflection(hex, 2);
        assert_eq!(r.apply(1), 1);
        assert_eq!(r.apply(2), 6);
        assert!(PolygonSymmetry::new(hex, (1..=6).map(|v| r.apply(v)).collect()).is_ok());
        assert!(PolygonSymmetry::rotation(hex, 6).is_identity());
    }

    #[test]
    fn json_round_trip_and_rejection() {
        let oct = Polygon::cyclohedron(2).unwrap();
        let ts = enumerate_colored_triangulations(oct, 2).unwrap();
        let s = ts[7].to_json();
        assert!(s.contains("\"c*\""));
        assert_eq!(ColoredTriangulation::from_json_str(&s).unwrap(), ts[7]);
        let bad = r#"{"polygon":{"n_vertices":5,"kind":"plain"},"diagonals":[[1,3],[2,4]],"colors":[]}"#;
        assert!(matches!(
            Triangulation::from_json_str(bad),
            Err(TriangulationError::Crossing(..))
        ));
        assert!(matches!(
            Triangulation::from_json_str("{\"polygon\":"),
            Err(TriangulationError::Json(_))
        ));
    }
}
