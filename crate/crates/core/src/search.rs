//! Backtracking search for isomorphisms between vertex- and edge-colored
//! graphs, pruned by color refinement with individualization.
//!
//! Both graphs are refined jointly so that cell labels are comparable: a
//! vertex of `a` may only map to a vertex of `b` carrying the same label.

use std::collections::{HashMap, VecDeque};

/// A vertex's cell plus the sorted multiset of (edge key, neighbor cell).
type Signature = (u32, Vec<(u32, u32)>);

/// How edge colors constrain a map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeRule {
    /// Edge colors are ignored.
    Ignore,
    /// Every edge keeps its color.
    Preserve,
    /// Edge colors are permuted consistently: a bijection on colors is built
    /// alongside the vertex map.
    Respect,
}

/// A graph with vertex colors and edge colors, both small integers.
#[derive(Clone, Debug)]
pub struct Structure {
    vertex_color: Vec<u32>,
    /// `(neighbor, edge color)`, sorted by neighbor.
    adj: Vec<Vec<(u32, u32)>>,
}

impl Structure {
    pub fn new(vertex_color: Vec<u32>, edges: impl IntoIterator<Item = (u32, u32, u32)>) -> Self {
        let mut adj = vec![Vec::new(); vertex_color.len()];
        for (u, v, c) in edges {
            adj[u as usize].push((v, c));
            adj[v as usize].push((u, c));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Structure { vertex_color, adj }
    }

    pub fn len(&self) -> usize {
        self.vertex_color.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_color.is_empty()
    }

    fn edge_color(&self, u: u32, v: u32) -> Option<u32> {
        let list = &self.adj[u as usize];
        list.binary_search_by_key(&v, |&(w, _)| w).ok().map(|k| list[k].1)
    }
}

/// A vertex bijection, with the color bijection for [`EdgeRule::Respect`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mapping {
    pub vertices: Vec<u32>,
    pub colors: Option<HashMap<u32, u32>>,
}

struct Search<'a> {
    a: &'a Structure,
    b: &'a Structure,
    rule: EdgeRule,
    first_only: bool,
    order: Vec<u32>,
    parent: Vec<Option<u32>>,
    image: Vec<u32>,
    preimage: Vec<u32>,
    color_fwd: HashMap<u32, u32>,
    color_bwd: HashMap<u32, u32>,
    found: Vec<Mapping>,
}

const UNSET: u32 = u32::MAX;

/// All isomorphisms from `a` to `b` (or at most one with `first_only`).
pub fn isomorphisms(a: &Structure, b: &Structure, rule: EdgeRule, first_only: bool) -> Vec<Mapping> {
    if a.len() != b.len() {
        return Vec::new();
    }
    let (order, parent) = bfs_order(a);
    let mut s = Search {
        a,
        b,
        rule,
        first_only,
        order,
        parent,
        image: vec![UNSET; a.len()],
        preimage: vec![UNSET; b.len()],
        color_fwd: HashMap::new(),
        color_bwd: HashMap::new(),
        found: Vec::new(),
    };
    let Some(cells) = refine(a, b, rule, initial_cells(a, b)) else {
        return Vec::new();
    };
    s.extend(0, &cells);
    s.found
}

/// The coarsest equitable partition of `a` refined from its vertex colors:
/// automorphisms only map vertices within a cell.
pub fn stable_cells(a: &Structure, rule: EdgeRule) -> Vec<u32> {
    let mut cells = refine(a, a, rule, initial_cells(a, a)).expect("a structure is balanced against itself");
    cells.truncate(a.len());
    cells
}

/// All automorphisms of `a`.
pub fn automorphisms(a: &Structure, rule: EdgeRule) -> Vec<Mapping> {
    isomorphisms(a, a, rule, false)
}

fn bfs_order(a: &Structure) -> (Vec<u32>, Vec<Option<u32>>) {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![None; n];
    for root in 0..n as u32 {
        if seen[root as usize] {
            continue;
        }
        seen[root as usize] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &(y, _) in &a.adj[x as usize] {
                if !std::mem::replace(&mut seen[y as usize], true) {
                    parent[y as usize] = Some(x);
                    queue.push_back(y);
                }
            }
        }
    }
    (order, parent)
}

/// Joint cell labels: `a`'s vertices first, then `b`'s.
fn initial_cells(a: &Structure, b: &Structure) -> Vec<u32> {
    a.vertex_color.iter().chain(&b.vertex_color).copied().collect()
}

/// Refines the joint labeling until stable. Returns `None` when some cell
/// has different sizes on the two sides.
fn refine(a: &Structure, b: &Structure, rule: EdgeRule, mut cells: Vec<u32>) -> Option<Vec<u32>> {
    let na = a.len();
    let mut distinct = count_distinct(&cells);
    loop {
        let signature = |x: usize| -> Signature {
            let (g, v, offset) = if x < na { (a, x, 0) } else { (b, x - na, na) };
            let mut nb: Vec<(u32, u32)> = g.adj[v]
                .iter()
                .map(|&(w, c)| {
                    let key = if rule == EdgeRule::Preserve { c } else { 0 };
                    (key, cells[offset + w as usize])
                })
                .collect();
            nb.sort_unstable();
            (cells[x], nb)
        };
        let sigs: Vec<Signature> = (0..cells.len()).map(signature).collect();
        let mut keys: Vec<&Signature> = sigs.iter().collect();
        keys.sort_unstable();
        keys.dedup();
        let ids: HashMap<&Signature, u32> =
            keys.iter().enumerate().map(|(i, k)| (*k, i as u32)).collect();
        let next: Vec<u32> = sigs.iter().map(|s| ids[s]).collect();
        let next_distinct = keys.len();
        cells = next;
        if !balanced(&cells, na) {
            return None;
        }
        if next_distinct == distinct {
            return Some(cells);
        }
        distinct = next_distinct;
    }
}

fn count_distinct(cells: &[u32]) -> usize {
    let mut v = cells.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn balanced(cells: &[u32], na: usize) -> bool {
    let mut count: HashMap<u32, i64> = HashMap::new();
    for (x, &c) in cells.iter().enumerate() {
        *count.entry(c).or_default() += if x < na { 1 } else { -1 };
    }
    count.values().all(|&d| d == 0)
}

impl Search<'_> {
    fn extend(&mut self, depth: usize, cells: &[u32]) -> bool {
        if depth == self.order.len() {
            self.found.push(Mapping {
                vertices: self.image.clone(),
                colors: (self.rule == EdgeRule::Respect).then(|| self.color_fwd.clone()),
            });
            return self.first_only;
        }
        let na = self.a.len();
        let x = self.order[depth];
        let cell = cells[x as usize];
        let candidates: Vec<u32> = match self.parent[x as usize] {
            Some(p) => self.b.adj[self.image[p as usize] as usize]
                .iter()
                .map(|&(y, _)| y)
                .filter(|&y| self.preimage[y as usize] == UNSET && cells[na + y as usize] == cell)
                .collect(),
            None => (0..self.b.len() as u32)
                .filter(|&y| self.preimage[y as usize] == UNSET && cells[na + y as usize] == cell)
                .collect(),
        };
        let branching = candidates.len() > 1;
        for y in candidates {
            let Some(new_colors) = self.consistent(x, y) else {
                continue;
            };
            for &(ca, cb) in &new_colors {
                self.color_fwd.insert(ca, cb);
                self.color_bwd.insert(cb, ca);
            }
            self.image[x as usize] = y;
            self.preimage[y as usize] = x;
            let stop = if branching {
                let mut next = cells.to_vec();
                let fresh = next.iter().copied().max().unwrap_or(0) + 1;
                next[x as usize] = fresh;
                next[na + y as usize] = fresh;
                match refine(self.a, self.b, self.rule, next) {
                    Some(refined) => self.extend(depth + 1, &refined),
                    None => false,
                }
            } else {
                self.extend(depth + 1, cells)
            };
            self.image[x as usize] = UNSET;
            self.preimage[y as usize] = UNSET;
            for &(ca, cb) in &new_colors {
                self.color_fwd.remove(&ca);
                self.color_bwd.remove(&cb);
            }
            if stop {
                return true;
            }
        }
        false
    }

    /// Checks `x -> y` against the already mapped neighbors. Returns the
    /// color pairs this assignment adds to the color map.
    fn consistent(&self, x: u32, y: u32) -> Option<Vec<(u32, u32)>> {
        let mut added: Vec<(u32, u32)> = Vec::new();
        let mut mapped_a = 0;
        for &(xn, ca) in &self.a.adj[x as usize] {
            let yn = self.image[xn as usize];
            if yn == UNSET {
                continue;
            }
            mapped_a += 1;
            let cb = self.b.edge_color(y, yn)?;
            match self.rule {
                EdgeRule::Ignore => {}
                EdgeRule::Preserve => {
                    if ca != cb {
                        return None;
                    }
                }
                EdgeRule::Respect => {
                    let fwd = self.color_fwd.get(&ca).copied().or_else(|| {
                        added.iter().find(|p| p.0 == ca).map(|p| p.1)
                    });
                    let bwd = self.color_bwd.get(&cb).copied().or_else(|| {
                        added.iter().find(|p| p.1 == cb).map(|p| p.0)
                    });
                    match (fwd, bwd) {
                        (Some(f), _) if f != cb => return None,
                        (_, Some(g)) if g != ca => return None,
                        (None, None) => added.push((ca, cb)),
                        _ => {}
                    }
                }
            }
        }
        let mapped_b = self.b.adj[y as usize]
            .iter()
            .filter(|&&(yn, _)| self.preimage[yn as usize] != UNSET)
            .count();
        (mapped_a == mapped_b).then_some(added)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(k: u32, colored: bool) -> Structure {
        Structure::new(
            vec![0; k as usize],
            (0..k).map(|v| (v, (v + 1) % k, if colored { v % 2 } else { 0 })),
        )
    }

    #[test]
    fn cycle_groups() {
        assert_eq!(automorphisms(&cycle(10, false), EdgeRule::Ignore).len(), 20);
        assert_eq!(automorphisms(&cycle(10, true), EdgeRule::Preserve).len(), 10);
        let respecting = automorphisms(&cycle(10, true), EdgeRule::Respect);
        assert_eq!(respecting.len(), 20);
        let swaps = respecting
            .iter()
            .filter(|m| m.colors.as_ref().unwrap()[&0] == 1)
            .count();
        assert_eq!(swaps, 10);
    }

    #[test]
    fn petersen_has_120_automorphisms() {
        let mut edges = Vec::new();
        for i in 0..5u32 {
            edges.push((i, (i + 1) % 5, 0));
            edges.push((i, i + 5, 0));
            edges.push((i + 5, (i + 2) % 5 + 5, 0));
        }
        let p = Structure::new(vec![0; 10], edges);
        assert_eq!(automorphisms(&p, EdgeRule::Ignore).len(), 120);
    }

    #[test]
    fn isomorphism_respects_vertex_colors() {
        let path = |colors: Vec<u32>| Structure::new(colors, vec![(0, 1, 0), (1, 2, 0)]);
        let a = path(vec![0, 1, 2]);
        let b = path(vec![2, 1, 0]);
        let found = isomorphisms(&a, &b, EdgeRule::Ignore, false);
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].vertices, vec![2, 1, 0]);
        assert!(isomorphisms(&a, &path(vec![0, 0, 2]), EdgeRule::Ignore, false).is_empty());
        assert!(isomorphisms(&cycle(5, false), &cycle(6, false), EdgeRule::Ignore, true).is_empty());
    }

    #[test]
    fn disconnected_graphs() {
        let two_edges = Structure::new(vec![0; 4], vec![(0, 1, 0), (2, 3, 0)]);
        assert_eq!(automorphisms(&two_edges, EdgeRule::Ignore).len(), 8);
    }
}
