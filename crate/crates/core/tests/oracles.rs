//! Independent recomputations: brute-force enumeration, naive backtracking
//! and direct graph traversals checked against the library.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use itertools::Itertools;

use colorful_core::counting::{catalan, factorial};
use colorful_core::facets::FacetFamilies;
use colorful_core::flags::FlagGraph;
use colorful_core::graph::*;
use colorful_core::polytope::ColorfulPolytope;
use colorful_core::quotient::{build_classical_associahedron, quotient};
use colorful_core::symmetry::{colorful_factor_generators, graph_automorphisms, polytope_automorphisms, AutMode};
use colorful_core::triangulation::{enumerate_triangulations, PolygonKind};
use colorful_core::{ColorId, ColoredGraph, Polygon};

fn all_diagonals(m: u16) -> Vec<(u16, u16)> {
    let mut out = Vec::new();
    for a in 1..=m {
        for b in a + 2..=m {
            if !(a == 1 && b == m) {
                out.push((a, b));
            }
        }
    }
    out
}

fn crossing(x: (u16, u16), y: (u16, u16)) -> bool {
    let strictly_inside = |v: u16, (a, b): (u16, u16)| a < v && v < b;
    let shared = x.0 == y.0 || x.0 == y.1 || x.1 == y.0 || x.1 == y.1;
    !shared && (strictly_inside(y.0, x) != strictly_inside(y.1, x))
}

fn noncrossing(set: &[(u16, u16)]) -> bool {
    set.iter().enumerate().all(|(i, &x)| set[i + 1..].iter().all(|&y| !crossing(x, y)))
}

/// Maximal noncrossing sets of diagonals, found among all subsets of size
/// `m - 3`, optionally keeping only those closed under the half-turn.
fn brute_triangulations(m: u16, symmetric: bool) -> BTreeSet<Vec<(u16, u16)>> {
    let ds = all_diagonals(m);
    let turn = |(a, b): (u16, u16)| {
        let (x, y) = ((a + m / 2 - 1) % m + 1, (b + m / 2 - 1) % m + 1);
        (x.min(y), x.max(y))
    };
    ds.into_iter()
        .combinations(m as usize - 3)
        .filter(|set| !symmetric || set.iter().all(|&d| set.contains(&turn(d))))
        .filter(|set| noncrossing(set))
        .collect()
}

fn library_triangulations(polygon: Polygon) -> BTreeSet<Vec<(u16, u16)>> {
    enumerate_triangulations(polygon)
        .iter()
        .map(|t| t.diagonals().iter().map(|d| d.endpoints()).collect())
        .collect()
}

#[test]
fn triangulations_match_subset_enumeration() {
    for m in 4..=8u16 {
        let brute = brute_triangulations(m, false);
        assert_eq!(brute.len() as u128, catalan(m as u64 - 2));
        assert_eq!(library_triangulations(Polygon::new(m as usize, PolygonKind::Plain).unwrap()), brute);
    }
}

#[test]
fn symmetric_octagon_from_all_subsets() {
    // All 5-subsets of the octagon's 20 diagonals.
    let brute = brute_triangulations(8, true);
    assert_eq!(brute.len(), 20);
    assert_eq!(library_triangulations(Polygon::cyclohedron(2).unwrap()), brute);
    assert_eq!(brute_triangulations(6, true).len(), 6);
    assert_eq!(library_triangulations(Polygon::cyclohedron(1).unwrap()), brute_triangulations(6, true));
}

#[test]
fn catalan_recurrence() {
    let mut c = vec![1u128];
    for k in 1..20 {
        c.push((0..k).map(|i| c[i] * c[k - 1 - i]).sum());
    }
    for (k, &v) in c.iter().enumerate() {
        assert_eq!(catalan(k as u64), v);
    }
}

/// Vertex and edge counts by flipping every colored triangulation directly.
#[test]
fn exchange_graphs_by_direct_flips() {
    for n in 1..=4 {
        let g = build_colorful_exchange_graph(n).unwrap();
        let mut edges = 0;
        for t in g.vertices() {
            for (_, u) in t.neighbors() {
                assert!(g.index_of(&u).is_some());
                edges += 1;
            }
        }
        assert_eq!(edges % 2, 0);
        assert_eq!(edges / 2, g.graph().num_edges());
        assert_eq!(g.vertices().len() as u128, factorial(n as u64) * catalan(n as u64 + 1));
    }
    for n in 1..=3 {
        let g = build_cyclohedron_exchange_graph(n).unwrap();
        let plain = brute_triangulations(2 * n as u16 + 4, true).len() as u128;
        assert_eq!(g.vertices().len() as u128, factorial(n as u64) * plain);
        let edges: usize = g.vertices().iter().map(|t| t.neighbors().len()).sum();
        assert_eq!(edges / 2, g.graph().num_edges());
    }
}

fn bfs_class(g: &ColoredGraph, start: u32, colors: &[ColorId]) -> Vec<u32> {
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &(w, e) in g.neighbors(v) {
            if g.edge_color(e).is_some_and(|c| colors.contains(&c)) && seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    let mut out: Vec<u32> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

#[test]
fn classes_match_breadth_first_search() {
    for (g, name) in [
        (build_colorful_exchange_graph(3).unwrap().graph().clone(), "A3"),
        (build_cyclohedron_exchange_graph(2).unwrap().graph().clone(), "Z2"),
    ] {
        let p = ColorfulPolytope::build(&g).unwrap();
        let colors = g.color_set().to_vec();
        for mask in 0u32..1 << colors.len() {
            let set: Vec<ColorId> = (0..colors.len()).filter(|i| mask >> i & 1 == 1).map(|i| colors[i]).collect();
            for v in 0..g.num_vertices() as u32 {
                assert_eq!(p.class_of(&set, v).unwrap(), bfs_class(&g, v, &set).as_slice(), "{name} {set:?} {v}");
            }
        }
    }
}

/// Automorphisms by plain backtracking along a BFS order, optionally
/// requiring a consistent color map (and the identity color map).
fn naive_automorphisms(g: &ColoredGraph, respect: bool, preserve: bool) -> usize {
    let n = g.num_vertices();
    let mut order = vec![0u32];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        for &(w, _) in g.neighbors(order[i]) {
            if !seen[w as usize] {
                seen[w as usize] = true;
                order.push(w);
            }
        }
        i += 1;
    }
    assert_eq!(order.len(), n, "connected input");
    let mut image = vec![u32::MAX; n];
    let mut used = vec![false; n];
    let mut count = 0;
    #[allow(clippy::too_many_arguments)]
    fn go(
        g: &ColoredGraph,
        order: &[u32],
        k: usize,
        image: &mut Vec<u32>,
        used: &mut Vec<bool>,
        respect: bool,
        preserve: bool,
        count: &mut usize,
    ) {
        if k == order.len() {
            let mut cmap: HashMap<ColorId, ColorId> = HashMap::new();
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                let Some(f) = g.edge_between(image[u as usize], image[v as usize]) else {
                    return;
                };
                let (a, b) = (g.edge_color(e as u32), g.edge_color(f));
                if respect || preserve {
                    let (a, b) = (a.unwrap(), b.unwrap());
                    if preserve && a != b {
                        return;
                    }
                    if *cmap.entry(a).or_insert(b) != b {
                        return;
                    }
                }
            }
            *count += 1;
            return;
        }
        let v = order[k];
        for cand in 0..g.num_vertices() as u32 {
            if used[cand as usize] || g.degree(cand) != g.degree(v) {
                continue;
            }
            let ok = g.neighbors(v).iter().all(|&(w, _)| {
                let iw = image[w as usize];
                iw == u32::MAX || g.edge_between(cand, iw).is_some()
            });
            if !ok {
                continue;
            }
            image[v as usize] = cand;
            used[cand as usize] = true;
            go(g, order, k + 1, image, used, respect, preserve, count);
            image[v as usize] = u32::MAX;
            used[cand as usize] = false;
        }
    }
    go(g, &order, 0, &mut image, &mut used, respect, preserve, &mut count);
    count
}

#[test]
fn automorphism_orders_by_backtracking() {
    let decagon = build_colorful_exchange_graph(2).unwrap();
    assert_eq!(naive_automorphisms(decagon.graph(), false, false), 20);
    assert_eq!(naive_automorphisms(decagon.graph(), true, false), 20);
    assert_eq!(naive_automorphisms(decagon.graph(), false, true), 10);
    let cases = [
        (build_colorful_exchange_graph(3).unwrap().graph().clone(), 72),
        (build_cyclohedron_exchange_graph(1).unwrap().graph().clone(), 12),
        (build_cyclohedron_exchange_graph(2).unwrap().graph().clone(), 16),
    ];
    for (g, expected) in cases {
        let naive = naive_automorphisms(&g, true, false);
        assert_eq!(naive, expected);
        assert_eq!(graph_automorphisms(&g, AutMode::ColorRespecting).group.order(), naive);
        assert_eq!(naive_automorphisms(&g, false, true), graph_automorphisms(&g, AutMode::ColorPreserving).group.order());
    }
    // The classical cyclohedron for n = 1 is a hexagon: twelve symmetries.
    let hexagon = build_uncolored_cyclohedron_exchange_graph(1).unwrap();
    assert_eq!(naive_automorphisms(hexagon.graph(), false, false), 12);
    let z2 = build_uncolored_cyclohedron_exchange_graph(2).unwrap();
    assert_eq!(naive_automorphisms(z2.graph(), false, false), 8);
}

/// Two-colored cycles as 2-faces, oriented by propagation: the surface is
/// orientable when every edge is traversed once in each direction.
fn surface_by_faces(g: &ColoredGraph) -> (i64, bool) {
    let colors = g.color_set().to_vec();
    let mut faces: Vec<Vec<u32>> = Vec::new();
    for (i, &a) in colors.iter().enumerate() {
        for &b in &colors[i + 1..] {
            let mut done = vec![false; g.num_vertices()];
            for s in 0..g.num_vertices() as u32 {
                if done[s as usize] {
                    continue;
                }
                // Walk the cycle alternating colors a, b.
                let mut cycle = vec![s];
                let mut cur = s;
                let mut color = a;
                loop {
                    done[cur as usize] = true;
                    let next = g.neighbor_by_color(cur, color).unwrap();
                    color = if color == a { b } else { a };
                    if next == s {
                        break;
                    }
                    cycle.push(next);
                    cur = next;
                }
                faces.push(cycle);
            }
        }
    }
    let chi = g.num_vertices() as i64 - g.num_edges() as i64 + faces.len() as i64;
    let key = |u: u32, v: u32| (u.min(v), u.max(v));
    let mut on_edge: HashMap<(u32, u32), Vec<(usize, bool)>> = HashMap::new();
    for (f, cyc) in faces.iter().enumerate() {
        for k in 0..cyc.len() {
            let (u, v) = (cyc[k], cyc[(k + 1) % cyc.len()]);
            on_edge.entry(key(u, v)).or_default().push((f, u < v));
        }
    }
    let mut flip: Vec<Option<bool>> = vec![None; faces.len()];
    let mut orientable = true;
    for start in 0..faces.len() {
        if flip[start].is_some() {
            continue;
        }
        flip[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(f) = queue.pop_front() {
            let cyc = &faces[f];
            for k in 0..cyc.len() {
                let (u, v) = (cyc[k], cyc[(k + 1) % cyc.len()]);
                for &(h, dir) in &on_edge[&key(u, v)] {
                    if h == f {
                        continue;
                    }
                    let mine = (u < v) ^ flip[f].unwrap();
                    let want = !mine ^ dir;
                    match flip[h] {
                        None => {
                            flip[h] = Some(want);
                            queue.push_back(h);
                        }
                        Some(x) if x != want => orientable = false,
                        _ => {}
                    }
                }
            }
        }
    }
    (chi, orientable)
}

#[test]
fn surfaces_from_two_colored_cycles() {
    let a3 = build_colorful_exchange_graph(3).unwrap();
    assert_eq!(surface_by_faces(a3.graph()), (-6, true));
    let z2 = build_cyclohedron_exchange_graph(2).unwrap();
    assert_eq!(surface_by_faces(z2.graph()), (0, true));
    for g in [a3.graph(), z2.graph()] {
        let p = ColorfulPolytope::build(g).unwrap();
        let s = colorful_core::surface::surface_report(p.poset()).unwrap();
        assert_eq!((s.euler_characteristic, s.orientable), surface_by_faces(g));
    }
}

#[test]
fn flags_of_simple_polytopes() {
    // Every vertex of a simple rank-n polytope lies in n! flags.
    for n in 1..=4 {
        let g = build_colorful_exchange_graph(n).unwrap();
        let p = ColorfulPolytope::build(g.graph()).unwrap();
        let flags = FlagGraph::new(p.poset());
        assert_eq!(flags.len() as u128, g.vertices().len() as u128 * factorial(n as u64));
    }
}

#[test]
fn facet_intersections_by_search() {
    for n in 3..=4 {
        let g = build_colorful_exchange_graph(n).unwrap();
        let p = ColorfulPolytope::build(g.graph()).unwrap();
        let fam = FacetFamilies::new(&p, &g).unwrap();
        let polygon = g.vertex(0).polygon();
        let colors: Vec<ColorId> = (0..n as u16).map(ColorId).collect();
        let mut sets: HashMap<(u16, ColorId), HashSet<u32>> = HashMap::new();
        for i in 1..=n as u16 + 3 {
            let ear = polygon.ear_diagonal(i).unwrap();
            for &c in &colors {
                let v = g.vertices().iter().position(|t| t.color_of(ear) == Some(c)).unwrap() as u32;
                let rest: Vec<ColorId> = colors.iter().copied().filter(|&x| x != c).collect();
                sets.insert((i, c), bfs_class(g.graph(), v, &rest).into_iter().collect());
            }
        }
        for (&a, sa) in &sets {
            for (&b, sb) in &sets {
                if a == b {
                    continue;
                }
                let k = sets
                    .iter()
                    .filter(|(&x, sx)| x != a && x != b && !sx.is_disjoint(sa) && !sx.is_disjoint(sb))
                    .count();
                assert_eq!(fam.intersection_count(p.poset(), a, b).unwrap(), k);
            }
        }
    }
}

#[test]
fn quotient_face_numbers_by_noncrossing_sets() {
    // Faces of rank j of the classical associahedron are noncrossing sets
    // of n - j diagonals.
    for n in 2..=4 {
        let m = n as u16 + 3;
        let ds = all_diagonals(m);
        let mut f = vec![0usize; n + 1];
        for mask in 0u64..1 << ds.len() {
            let k = mask.count_ones() as usize;
            if k > n {
                continue;
            }
            let set: Vec<_> = (0..ds.len()).filter(|i| mask >> i & 1 == 1).map(|i| ds[i]).collect();
            if noncrossing(&set) {
                f[n - k] += 1;
            }
        }
        let g = build_colorful_exchange_graph(n).unwrap();
        let p = ColorfulPolytope::build(g.graph()).unwrap();
        let gens = colorful_factor_generators(&g).unwrap();
        let q = quotient(p.poset(), &gens.transpositions).unwrap();
        assert_eq!(q.poset.f_vector(), f);
        assert_eq!(build_classical_associahedron(n).unwrap().poset.f_vector(), f);
    }
}

#[test]
fn polytope_automorphisms_of_small_polygons() {
    for k in 3..=8 {
        let a = polytope_automorphisms(&colorful_core::poset::samples::polygon(k)).unwrap();
        assert_eq!(a.order(), 2 * k as usize);
    }
}
