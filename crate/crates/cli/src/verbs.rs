use std::path::PathBuf;
use std::process::ExitCode;

use colorful_core::axioms::{check_axioms_with_flags, AxiomReport, ConnectivityMode};
use colorful_core::counting::{binomial, catalan, factorial};
use colorful_core::facets::{
    classical_facet_census, cyclohedron_facet_census, facets_isomorphic_to, FacetFamilies, KCase,
};
use colorful_core::flags::FlagGraph;
use colorful_core::graph::build_colorful_exchange_graph;
use colorful_core::polytope::ColorfulPolytope;
use colorful_core::quotient::{covering_map, poset_isomorphism, quotient as orbit_poset, support_projection, witness_json};
use colorful_core::report::{counts_table, groups_table, k_table, surfaces_table};
use colorful_core::surface::surface_report_with_flags;
use colorful_core::symmetry::{
    classical_factor_generators, colorful_factor_generators, graph_automorphisms, polytope_automorphisms_with_flags,
    same_elements, verify_group_structure, AutMode, FactorGenerators, GroupShape, PermGroup,
};
use colorful_core::RankedPoset;

use crate::output::{csv, status, write_out, Format, Report};
use crate::subject::{self, invalid, resolve, Built, Family, InputError, Subject};
use crate::{Common, Mode, TableArg};

pub const DEFAULT_SEED: u64 = 20_240_601;

type Outcome = Result<ExitCode, InputError>;

fn subject_of(c: &Common, for_verify: bool) -> Result<Subject, InputError> {
    resolve(c.family, c.n, c.from_file.as_deref(), for_verify)
}

fn connectivity_mode(c: &Common, rank: i32) -> ConnectivityMode {
    if c.exhaustive || rank < 4 {
        ConnectivityMode::Exhaustive
    } else {
        ConnectivityMode::sampled(c.seed)
    }
}

fn slash(values: &[usize]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("/")
}

/// The f-vector without the top face.
fn f_vector(poset: &RankedPoset) -> String {
    let f = poset.f_vector();
    slash(&f[..f.len().saturating_sub(1)])
}

fn predicted_vertices(family: Family, n: usize) -> Option<u128> {
    let m = n as u64;
    match family {
        Family::Associahedron => Some(catalan(m + 1)),
        Family::ColorfulAssociahedron => Some(factorial(m) * catalan(m + 1)),
        Family::Cyclohedron => Some((m as u128 + 2) * catalan(m + 1)),
        Family::ColorfulCyclohedron => Some(factorial(m) * binomial(2 * m + 2, m + 1)),
        Family::FromFile => None,
    }
}

fn degree_of(family: Family, n: usize) -> Option<usize> {
    match family {
        Family::Associahedron | Family::ColorfulAssociahedron => Some(n),
        Family::Cyclohedron | Family::ColorfulCyclohedron => Some(n + 1),
        Family::FromFile => None,
    }
}

fn predicted_group(family: Family, n: usize) -> Option<usize> {
    let f = factorial(n as u64) as usize;
    match family {
        Family::Associahedron if n >= 2 => Some(2 * (n + 3)),
        Family::ColorfulAssociahedron if n >= 2 => Some(f * 2 * (n + 3)),
        Family::Cyclohedron if n >= 1 => Some(2 * (n + 2)),
        Family::ColorfulCyclohedron if n == 1 => Some(12),
        Family::ColorfulCyclohedron if n >= 2 => Some(f * 2 * (n + 2)),
        _ => None,
    }
}

fn shape_of(family: Family, n: usize) -> Option<GroupShape> {
    match family {
        Family::Associahedron if n >= 2 => Some(GroupShape::Dihedral { m: n + 3 }),
        Family::Cyclohedron if n >= 2 => Some(GroupShape::Dihedral { m: n + 2 }),
        Family::ColorfulAssociahedron if n >= 2 => Some(GroupShape::SymmetricTimesDihedral { n, m: n + 3 }),
        Family::ColorfulCyclohedron if n >= 2 => Some(GroupShape::SymmetricTimesDihedral { n, m: n + 2 }),
        _ => None,
    }
}

fn factor_generators(s: &Subject) -> Result<FactorGenerators, InputError> {
    let out = match s {
        Subject::Colored { exchange: Some(x), .. } => colorful_factor_generators(x),
        Subject::Classical { exchange, .. } => classical_factor_generators(exchange),
        Subject::Colored { exchange: None, .. } => return Err(invalid("a graph file carries no polygon symmetries")),
    };
    out.map_err(|e| invalid(e.to_string()))
}

/// The automorphism group the family's closed forms refer to: color
/// respecting for colored graphs, all automorphisms otherwise.
fn natural_group(s: &Subject) -> PermGroup {
    let mode = match s {
        Subject::Colored { .. } => AutMode::ColorRespecting,
        Subject::Classical { .. } => AutMode::Full,
    };
    graph_automorphisms(s.graph(), mode).group
}

fn axiom_checks(r: &mut Report, a: &AxiomReport) {
    r.check(
        "flags have full length",
        format!("{} flags, {} dead ends", a.flag_count, a.flag_length.dead_ends.len()),
        a.flag_length.passed,
    );
    r.check(
        "diamond condition",
        format!("{} intervals, {} violations", a.diamond.intervals_checked, a.diamond.violation_count),
        a.diamond.passed,
    );
    let sc = &a.strong_flag_connectivity;
    let mode = match sc.seed {
        Some(seed) => format!("{}, seed {seed}", sc.mode),
        None => sc.mode.clone(),
    };
    let detail = match sc.failure {
        Some((x, y)) => format!("{mode}: flags {x} and {y} not joined"),
        None => format!("{mode}, {} checked", sc.checked),
    };
    r.check("strong flag-connectivity", detail, a.strong_flag_connectivity.passed);
    r.check(
        "simple",
        format!("{} vertex figures, {} failing", a.simple.vertices_checked, a.simple.failing_vertices.len()),
        a.simple.passed,
    );
}

fn surface_checks(r: &mut Report, family: Family, n: usize, poset: &RankedPoset, flags: &FlagGraph) {
    let Ok(s) = surface_report_with_flags(poset, flags) else {
        return;
    };
    r.info("euler characteristic", s.euler_characteristic);
    match (s.genus, s.crosscaps) {
        (Some(g), _) => r.info("surface", format!("orientable, genus {g}")),
        (_, Some(k)) => r.info("surface", format!("non-orientable, {k} crosscaps")),
        _ => {}
    }
    r.check("every edge in two 2-faces", s.closed, s.closed);
    r.expect("flags = 4e", 4 * s.e, s.flag_count);
    let expected = match (family, n) {
        (Family::ColorfulAssociahedron, 3) => Some((-6, 4)),
        (Family::ColorfulCyclohedron, 2) => Some((0, 1)),
        _ => None,
    };
    if let Some((chi, genus)) = expected {
        r.expect("euler characteristic", chi, s.euler_characteristic);
        r.expect("orientable", true, s.orientable);
        r.expect("genus", genus, s.genus.map_or("none".into(), |g| g.to_string()));
    }
    if (family, n) == (Family::ColorfulAssociahedron, 3) {
        let sizes: Vec<String> = s.face_sizes.iter().map(|(k, c)| format!("{k}^{c}")).collect();
        r.expect("2-face sizes", "4^18 10^18", sizes.join(" "));
        let census: Vec<String> = s
            .vertex_census
            .iter()
            .map(|(k, c)| format!("{}:{c}", slash(k).replace('/', "-")))
            .collect();
        r.expect("vertex types", "4-10-10:72 10-10-10:12", census.join(" "));
    }
    r.data("surface", &s);
}

pub fn build(c: &Common) -> Outcome {
    let s = subject_of(c, false)?;
    let g = s.graph();
    let body = match c.format {
        Format::Json => g.to_json() + "\n",
        Format::Dot => g.to_dot(),
        Format::Csv => {
            let mut out = String::from("u,v,color\n");
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                let color = g.edge_color(e as u32).map(|c| c.to_string()).unwrap_or_default();
                out.push_str(&format!("{u},{v},{}\n", csv(&color)));
            }
            out
        }
        Format::Text => {
            let report = g.validate();
            let mut out = format!("{}\nvertices: {}\nedges: {}\n", s.title(), g.num_vertices(), g.num_edges());
            if let Some(d) = report.regularity {
                out.push_str(&format!("regular of degree {d}\n"));
            }
            if g.is_colored() {
                out.push_str(&format!("colors: {}\n", g.color_set().len()));
            }
            out.push_str(&format!("connected: {}\n", report.is_connected));
            out
        }
    };
    write_out(&body, c.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

pub fn verify(c: &Common) -> Outcome {
    let s = subject_of(c, true)?;
    let (family, n) = (s.family(), s.n());
    let mut r = Report::new(format!("verify {}", s.title()));
    let g = s.graph();
    let gr = g.validate();
    if let Some(v) = predicted_vertices(family, n) {
        r.expect("vertices", v, g.num_vertices());
    }
    if let Some(d) = degree_of(family, n) {
        r.expect("edges", g.num_vertices() * d / 2, g.num_edges());
        r.expect("regular degree", d, gr.regularity.map_or("irregular".into(), |x| x.to_string()));
    }
    r.check("connected", gr.is_connected, gr.is_connected);
    if g.is_colored() {
        let failure = gr.hypothesis_failure();
        r.check(
            "properly edge colored",
            failure.clone().unwrap_or_else(|| format!("{} colors", gr.colors_used.unwrap_or(0))),
            failure.is_none(),
        );
        let chi1 = gr.chromatic_index_witness.map_or("none".into(), |x| x.to_string());
        match degree_of(family, n) {
            Some(d) => r.expect("chromatic index χ₁", d, chi1),
            None => r.check("chromatic index χ₁", chi1, gr.chromatic_index_witness.is_some()),
        };
    }

    let built = s.poset()?;
    let poset = built.poset();
    r.info("f-vector", f_vector(poset));
    r.info("rank", poset.rank());
    let flags = FlagGraph::new(poset);
    let axioms = check_axioms_with_flags(poset, &flags, connectivity_mode(c, poset.rank()));
    axiom_checks(&mut r, &axioms);
    if family == Family::ColorfulAssociahedron {
        let f = factorial(n as u64);
        r.expect("flags", f * f * catalan(n as u64 + 1), flags.len());
    }

    let graph_group = natural_group(&s);
    match polytope_automorphisms_with_flags(poset, &flags) {
        Ok(pa) => {
            match predicted_group(family, n) {
                Some(p) => r.expect("|Γ|", p, pa.order()),
                None => r.check("|Γ|", pa.order(), true),
            };
            let same = same_elements(&pa.vertex_group(), &graph_group);
            let name = if g.is_colored() {
                "polytope automorphisms = color-respecting graph automorphisms"
            } else {
                "polytope automorphisms = graph automorphisms"
            };
            r.check(name, format!("{} vs {}", pa.order(), graph_group.order()), same);
        }
        Err(e) => {
            r.check("|Γ|", e, false);
        }
    }
    if let Some(shape) = shape_of(family, n) {
        let gens = factor_generators(&s)?;
        let st = verify_group_structure(&graph_group, shape, &gens);
        let failed: Vec<&str> = st.checks.iter().filter(|(_, ok)| !ok).map(|(k, _)| k.as_str()).collect();
        let detail = if failed.is_empty() { "all relations hold".to_string() } else { format!("failed: {}", failed.join(", ")) };
        r.check(format!("Γ ≅ {shape}"), detail, st.holds);
    }
    if poset.rank() == 3 {
        surface_checks(&mut r, family, n, poset, &flags);
    }
    if let (Some(classical_family), Subject::Colored { exchange: Some(x), .. }) = (family.classical_counterpart(), &s) {
        let gens = factor_generators(&s)?;
        let classical = subject::classical(classical_family, n)?;
        match orbit_poset(poset, &gens.transpositions) {
            Ok(q) => {
                let iso = poset_isomorphism(&q.poset, &classical.poset).is_some();
                r.check(format!("quotient by S{n} ≅ {classical_family}"), f_vector(&q.poset), iso);
            }
            Err(e) => {
                r.check(format!("quotient by S{n}"), e, false);
            }
        }
        let projection = support_projection(x, &classical.triangulations);
        match covering_map(poset, &classical.poset, &projection) {
            Ok(cov) => r.expect("covering fiber size", factorial(n as u64), cov.fiber_size),
            Err(e) => r.check("covering", e, false),
        };
    }
    r.data("axioms", &axioms);
    r.data("graph", &gr);
    r.emit(c.format, c.out.as_deref())
}

pub fn aut(c: &Common, mode: Mode) -> Outcome {
    let s = subject_of(c, true)?;
    let g = s.graph();
    let mode = match mode {
        Mode::Full => AutMode::Full,
        Mode::Preserving => AutMode::ColorPreserving,
        Mode::Respecting => AutMode::ColorRespecting,
    };
    if !g.is_colored() && mode != AutMode::Full {
        return Err(invalid("color-preserving and color-respecting modes need an edge-colored graph"));
    }
    let auts = graph_automorphisms(g, mode);
    let mut r = Report::new(format!("aut {}", s.title()));
    match (mode, predicted_group(s.family(), s.n())) {
        (AutMode::Full | AutMode::ColorRespecting, Some(p)) => r.expect("|Γ|", p, auts.group.order()),
        _ => r.check("|Γ|", auts.group.order(), true),
    };
    r.info("generators", auts.group.generators().len());
    r.data("automorphisms", auts.export());
    r.emit(c.format, c.out.as_deref())
}

pub fn verify_group(c: &Common) -> Outcome {
    let s = subject_of(c, true)?;
    let shape = shape_of(s.family(), s.n())
        .ok_or_else(|| invalid(format!("no product structure is predicted for {}", s.title())))?;
    let gens = factor_generators(&s)?;
    let group = natural_group(&s);
    let st = verify_group_structure(&group, shape, &gens);
    let mut r = Report::new(format!("verify-group {} against {shape}", s.title()));
    r.expect("order", st.expected_order, st.order);
    for (name, ok) in &st.checks {
        if name != "order" {
            r.check(name.clone(), ok, *ok);
        }
    }
    r.data("group", group.export());
    r.emit(c.format, c.out.as_deref())
}

fn colored_with_classical(s: &Subject) -> Result<Family, InputError> {
    s.family()
        .classical_counterpart()
        .ok_or_else(|| invalid(format!("{} has no colorblind counterpart; use a colorful family", s.family())))
}

pub fn quotient(c: &Common) -> Outcome {
    let s = subject_of(c, true)?;
    let classical_family = colored_with_classical(&s)?;
    let n = s.n();
    let built = s.poset()?;
    let poset = built.poset();
    let gens = factor_generators(&s)?;
    let q = orbit_poset(poset, &gens.transpositions).map_err(|e| invalid(e.to_string()))?;
    let classical = subject::classical(classical_family, n)?;
    let mut r = Report::new(format!("quotient {} by S{n}", s.title()));
    r.info("f-vector", f_vector(&q.poset));
    r.check(
        "orbit incidence agrees with representative incidence",
        q.representative_incidence_consistent(poset),
        q.representative_incidence_consistent(poset),
    );
    let flags = FlagGraph::new(&q.poset);
    let axioms = check_axioms_with_flags(&q.poset, &flags, connectivity_mode(c, q.poset.rank()));
    r.check("quotient is an abstract polytope", axioms.is_polytope(), axioms.is_polytope());
    let witness = poset_isomorphism(&q.poset, &classical.poset);
    r.check(format!("isomorphic to {classical_family} n={n}"), witness.is_some(), witness.is_some());
    r.data("quotient", q.poset.export());
    if let Some(map) = witness {
        r.data("witness", witness_json(&q.poset, &classical.poset, &map));
    }
    r.emit(c.format, c.out.as_deref())
}

pub fn check_covering(c: &Common) -> Outcome {
    let s = subject_of(c, true)?;
    let classical_family = colored_with_classical(&s)?;
    let n = s.n();
    let Subject::Colored { exchange: Some(x), .. } = &s else {
        return Err(invalid("covering needs a built colorful family"));
    };
    let built = s.poset()?;
    let Built::Colorful(p) = &built else {
        unreachable!("colored subject");
    };
    let classical = subject::classical(classical_family, n)?;
    let projection = support_projection(x, &classical.triangulations);
    let mut r = Report::new(format!("check-covering {} onto {classical_family}", s.title()));
    match covering_map(p.poset(), &classical.poset, &projection) {
        Ok(cov) => {
            r.check("rank- and incidence-preserving surjection", true, true);
            r.expect("vertex fiber size", factorial(n as u64), cov.fiber_size);
            if s.family() == Family::ColorfulAssociahedron && n >= 2 {
                let fam = FacetFamilies::new(p, x).map_err(|e| invalid(e.to_string()))?;
                let ok = fam.covering_respects_families(&cov, &classical);
                r.check("G_{i,c} maps onto the facet fixing {i-1,i+1}", ok, ok);
            }
            let by_rank: Vec<String> = cov
                .fibers_by_rank
                .iter()
                .map(|f| {
                    let (lo, hi) = (f.iter().min().copied().unwrap_or(0), f.iter().max().copied().unwrap_or(0));
                    if lo == hi { lo.to_string() } else { format!("{lo}..{hi}") }
                })
                .collect();
            r.info("fiber sizes by rank", by_rank.join("/"));
            r.data("covering", &cov);
        }
        Err(e) => {
            r.check("covering", e, false);
        }
    }
    r.emit(c.format, c.out.as_deref())
}

pub fn check_iso(c: &Common, with: Option<Family>, with_n: Option<usize>, with_file: Option<PathBuf>) -> Outcome {
    let a = subject_of(c, true)?;
    let b = resolve(with, with_n, with_file.as_deref(), true)?;
    let (pa, pb) = (a.poset()?, b.poset()?);
    let witness = poset_isomorphism(pa.poset(), pb.poset());
    let mut r = Report::new(format!("check-iso {} vs {}", a.title(), b.title()));
    r.info("f-vectors", format!("{} vs {}", f_vector(pa.poset()), f_vector(pb.poset())));
    r.check("isomorphic", witness.is_some(), witness.is_some());
    if let Some(map) = witness {
        r.data("witness", witness_json(pa.poset(), pb.poset(), &map));
    }
    r.emit(c.format, c.out.as_deref())
}

pub fn surface(c: &Common) -> Outcome {
    let s = subject_of(c, true)?;
    let built = s.poset()?;
    let poset = built.poset();
    if poset.rank() != 3 {
        return Err(invalid(format!("surface data needs a rank-3 polytope, {} has rank {}", s.title(), poset.rank())));
    }
    let flags = FlagGraph::new(poset);
    let mut r = Report::new(format!("surface {}", s.title()));
    r.info("v/e/f", f_vector(poset));
    surface_checks(&mut r, s.family(), s.n(), poset, &flags);
    r.emit(c.format, c.out.as_deref())
}

pub fn facet_stats(c: &Common) -> Outcome {
    let s = subject_of(c, true)?;
    let (family, n) = (s.family(), s.n());
    let mut r = Report::new(format!("facet-stats {}", s.title()));
    match family {
        Family::ColorfulAssociahedron if n >= 2 => {
            let Subject::Colored { exchange: Some(x), graph, .. } = &s else {
                unreachable!("built colorful family");
            };
            let p = ColorfulPolytope::build(graph).map_err(|e| invalid(e.to_string()))?;
            let fam = FacetFamilies::new(&p, x).map_err(|e| invalid(e.to_string()))?;
            let poset = p.poset();
            let mut distinct: Vec<u32> = fam.members().iter().map(|m| m.2).collect();
            distinct.sort_unstable();
            distinct.dedup();
            r.expect("distinct G_{i,c}", n * (n + 3), distinct.len());
            let prev = ColorfulPolytope::build(build_colorful_exchange_graph(n - 1).map_err(|e| invalid(e.to_string()))?.graph())
                .map_err(|e| invalid(e.to_string()))?;
            let iso = facets_isomorphic_to(poset, prev.poset());
            r.expect(format!("facets isomorphic to the n={} polytope", n - 1), n * (n + 3), iso.len());
            let all_g = iso.iter().all(|f| fam.position_of(*f).is_some());
            r.check("those facets are the G_{i,c}", all_g, all_g);
            let m = fam.positions() as u16;
            let disjoint = (1..=m).all(|i| fam.families_disjoint(poset, i, i % m + 1));
            r.check("neighboring families share no vertex", disjoint, disjoint);
            let entries = fam.k_table(poset);
            for case in KCase::ALL {
                let rows: Vec<_> = entries.iter().filter(|e| e.case == case).collect();
                let bad = rows.iter().filter(|e| e.predicted != e.computed as i64).count();
                let mut values: Vec<usize> = rows.iter().map(|e| e.computed).collect();
                values.sort_unstable();
                values.dedup();
                let computed = format!(
                    "{} over {} tuples",
                    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("|"),
                    rows.len()
                );
                r.check(format!("K[{case}] = {} = {}", case.formula(), case.closed_form(n)), computed, bad == 0 && !rows.is_empty());
            }
            let flags = FlagGraph::new(poset);
            let pa = polytope_automorphisms_with_flags(poset, &flags).map_err(|e| invalid(e.to_string()))?;
            let blocks = pa.face_maps.iter().all(|fm| fam.blocks_preserved(fm));
            r.check(
                format!("families F_i are blocks for all {} automorphisms", pa.order()),
                blocks,
                blocks,
            );
            r.data("k_table", &entries);
        }
        Family::Associahedron if n >= 3 => {
            let classical = subject::classical(family, n)?;
            let model = subject::classical(family, n - 1)?;
            let census = classical_facet_census(&classical, &model.poset).ok_or_else(|| invalid("empty polytope"))?;
            r.expect(format!("facets isomorphic to the n={} associahedron", n - 1), n + 3, census.isomorphic_to_model);
            r.expect("of which fix a short diagonal", n + 3, census.isomorphic_short);
            r.check("F_j and F_k share a ridge iff k ≠ j±1", census.ridge_pattern_holds, census.ridge_pattern_holds);
            r.data("census", &census);
        }
        Family::ColorfulCyclohedron if n >= 2 => {
            let built = s.poset()?;
            let Built::Colorful(p) = &built else {
                unreachable!("colored subject");
            };
            let model = ColorfulPolytope::build(build_colorful_exchange_graph(n).map_err(|e| invalid(e.to_string()))?.graph())
                .map_err(|e| invalid(e.to_string()))?;
            let census = cyclohedron_facet_census(p, model.poset());
            r.expect("facets with the central diagonal rigid", n + 2, census.central.len());
            let central_iso = census.central.iter().filter(|f| f.isomorphic_to_model).count();
            r.expect("of which isomorphic to the colorful associahedron", n + 2, central_iso);
            let paired_iso = census.paired.iter().filter(|f| f.isomorphic_to_model).count();
            r.info("facets with a symmetric pair rigid", census.paired.len());
            r.expect("pair-rigid facets isomorphic to the colorful associahedron", 0, paired_iso);
            r.data("census", &census);
        }
        _ => return Err(invalid(format!("facet statistics are not defined for {}", s.title()))),
    }
    r.emit(c.format, c.out.as_deref())
}

pub fn build_polytope(c: &Common) -> Outcome {
    let s = subject_of(c, false)?;
    let built = s.poset()?;
    let poset = built.poset();
    let body = match c.format {
        Format::Json => serde_json::to_string_pretty(&poset.export()).expect("serializable") + "\n",
        Format::Csv => {
            let mut out = String::from("rank,face,vertices\n");
            for r in 0..=poset.rank() {
                for &f in poset.faces_of_rank(r) {
                    let face = poset.face(f);
                    out.push_str(&format!("{r},{},{}\n", csv(&face.label.key()), face.vertices.len()));
                }
            }
            out
        }
        Format::Text => format!("{}\nrank: {}\nf-vector: {}\n", s.title(), poset.rank(), f_vector(poset)),
        Format::Dot => return Err(invalid("dot output is only available for `build`")),
    };
    write_out(&body, c.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

pub fn check_axioms(c: &Common) -> Outcome {
    let s = subject_of(c, true)?;
    let built = s.poset()?;
    let poset = built.poset();
    let flags = FlagGraph::new(poset);
    let axioms = check_axioms_with_flags(poset, &flags, connectivity_mode(c, poset.rank()));
    let mut r = Report::new(format!("check-axioms {}", s.title()));
    r.info("f-vector", f_vector(poset));
    axiom_checks(&mut r, &axioms);
    r.data("axioms", &axioms);
    r.emit(c.format, c.out.as_deref())
}

pub fn report(c: &Common, table: TableArg) -> Outcome {
    let tables = match table {
        TableArg::Counts => vec![counts_table(c.n.unwrap_or(5).min(5))],
        TableArg::Groups => vec![groups_table(c.n.unwrap_or(4).min(4))],
        TableArg::Surfaces => vec![surfaces_table()],
        TableArg::KTable => match c.n {
            Some(n) if (3..=4).contains(&n) => vec![k_table(n)],
            Some(n) => return Err(invalid(format!("K_table is available for n = 3 and 4, not {n}"))),
            None => vec![k_table(3), k_table(4)],
        },
    };
    let body = match c.format {
        Format::Text => tables.iter().map(|t| t.to_text()).collect::<Vec<_>>().join("\n"),
        Format::Csv => tables.iter().map(|t| t.to_csv()).collect::<Vec<_>>().join("\n"),
        Format::Json => serde_json::to_string_pretty(&tables).expect("serializable") + "\n",
        Format::Dot => return Err(invalid("dot output is only available for `build`")),
    };
    write_out(&body, c.out.as_deref())?;
    Ok(status(tables.iter().all(|t| t.all_matched())))
}
