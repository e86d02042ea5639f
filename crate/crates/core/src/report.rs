//! Closed-form values next to computed ones, as printable tables.

use std::fmt::Write as _;

use serde::Serialize;

use crate::counting::*;
use crate::facets::{FacetFamilies, KCase};
use crate::graph::{
    build_colorful_exchange_graph, build_cyclohedron_exchange_graph, build_uncolored_cyclohedron_exchange_graph,
    build_uncolored_exchange_graph,
};
use crate::polytope::ColorfulPolytope;
use crate::quotient::{build_classical_associahedron, build_classical_cyclohedron};
use crate::surface::surface_report;
use crate::symmetry::polytope_automorphisms;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Counts,
    Groups,
    Surfaces,
    KTable,
}

impl TableKind {
    pub fn parse(s: &str) -> Option<TableKind> {
        match s {
            "counts" => Some(TableKind::Counts),
            "groups" => Some(TableKind::Groups),
            "surfaces" => Some(TableKind::Surfaces),
            "K_table" | "k_table" | "k-table" => Some(TableKind::KTable),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TableKind::Counts => "counts",
            TableKind::Groups => "groups",
            TableKind::Surfaces => "surfaces",
            TableKind::KTable => "K_table",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub item: String,
    pub formula: String,
    pub predicted: String,
    pub computed: String,
    pub matched: bool,
}

impl Row {
    fn new(item: impl Into<String>, formula: impl Into<String>, predicted: impl ToString, computed: impl ToString) -> Row {
        let (predicted, computed) = (predicted.to_string(), computed.to_string());
        Row {
            item: item.into(),
            formula: formula.into(),
            matched: predicted == computed,
            predicted,
            computed,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub kind: String,
    pub rows: Vec<Row>,
}

impl Table {
    pub fn all_matched(&self) -> bool {
        self.rows.iter().all(|r| r.matched)
    }

    pub fn to_text(&self) -> String {
        let head = ["item", "formula", "predicted", "computed", "status"];
        let cells: Vec<[String; 5]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.item.clone(),
                    r.formula.clone(),
                    r.predicted.clone(),
                    r.computed.clone(),
                    if r.matched { "match" } else { "mismatch" }.to_string(),
                ]
            })
            .collect();
        let mut width = head.map(|h| h.chars().count());
        for row in &cells {
            for (w, c) in width.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = format!("# {}\n", self.kind);
        let mut line = |cols: &[String]| {
            let parts: Vec<String> = cols
                .iter()
                .zip(width)
                .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            let _ = writeln!(out, "{}", parts.join("  ").trim_end());
        };
        line(&head.map(String::from));
        for row in &cells {
            line(row);
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let quote = |s: &str| {
            if s.contains([',', '"', '\n']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        };
        let mut out = String::from("item,formula,predicted,computed,status\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                quote(&r.item),
                quote(&r.formula),
                quote(&r.predicted),
                quote(&r.computed),
                if r.matched { "match" } else { "mismatch" }
            );
        }
        out
    }
}

/// Vertex, edge and flag counts against their closed forms.
pub fn counts_table(max_n: usize) -> Table {
    let mut rows = Vec::new();
    for n in 0..=max_n.min(5) {
        let plain = build_uncolored_exchange_graph(n).expect("supported size");
        rows.push(Row::new(format!("G_{n} vertices"), "C_{n+1}", associahedron_vertices(n as u64), plain.vertices().len()));
        let colored = build_colorful_exchange_graph(n).expect("supported size");
        rows.push(Row::new(
            format!("Gc_{n} vertices"),
            "n! C_{n+1}",
            colorful_associahedron_vertices(n as u64),
            colored.vertices().len(),
        ));
        if (1..=4).contains(&n) {
            let p = ColorfulPolytope::build(colored.graph()).expect("valid graph");
            let flags = crate::flags::FlagGraph::new(p.poset());
            rows.push(Row::new(
                format!("Ac_{n} flags"),
                "(n!)^2 C_{n+1}",
                colorful_associahedron_flags(n as u64),
                flags.len(),
            ));
        }
    }
    for n in 1..=max_n.min(3) {
        let plain = build_uncolored_cyclohedron_exchange_graph(n).expect("supported size");
        rows.push(Row::new(format!("Z_{n} vertices"), "(n+2) C_{n+1}", cyclohedron_vertices(n as u64), plain.vertices().len()));
        let colored = build_cyclohedron_exchange_graph(n).expect("supported size");
        rows.push(Row::new(
            format!("Hc_{n} vertices"),
            "n! binom(2n+2,n+1)",
            colorful_cyclohedron_vertices(n as u64),
            colored.vertices().len(),
        ));
        rows.push(Row::new(
            format!("Hc_{n} edges"),
            "(2n+2)!/(2(n+1)!)",
            colorful_cyclohedron_edges(n as u64),
            colored.graph().num_edges(),
        ));
    }
    Table {
        kind: "counts".into(),
        rows,
    }
}

/// Automorphism group orders of the classical and colorful polytopes.
pub fn groups_table(max_n: usize) -> Table {
    let mut rows = Vec::new();
    let order = |p: &crate::poset::RankedPoset| polytope_automorphisms(p).map(|a| a.order().to_string()).unwrap_or_else(|e| e.to_string());
    for n in 2..=max_n.min(4) {
        let c = build_classical_associahedron(n).expect("supported size");
        rows.push(Row::new(format!("A_{n}"), "2(n+3)", 2 * (n + 3), order(&c.poset)));
    }
    for n in 2..=max_n.min(4) {
        let g = build_colorful_exchange_graph(n).expect("supported size");
        let p = ColorfulPolytope::build(g.graph()).expect("valid graph");
        rows.push(Row::new(
            format!("Ac_{n}"),
            format!("{n}!*2*{}", n + 3),
            factorial(n as u64) * 2 * (n as u128 + 3),
            order(p.poset()),
        ));
    }
    for n in 1..=max_n.min(3) {
        let g = build_cyclohedron_exchange_graph(n).expect("supported size");
        let p = ColorfulPolytope::build(g.graph()).expect("valid graph");
        let (formula, predicted) = if n == 1 {
            ("D6".to_string(), 12)
        } else {
            (format!("{n}!*2*{}", n + 2), factorial(n as u64) * 2 * (n as u128 + 2))
        };
        rows.push(Row::new(format!("Zc_{n}"), formula, predicted, order(p.poset())));
    }
    for n in 1..=max_n.min(3) {
        let c = build_classical_cyclohedron(n).expect("supported size");
        rows.push(Row::new(format!("Z_{n}"), "2(n+2)", 2 * (n + 2), order(&c.poset)));
    }
    Table {
        kind: "groups".into(),
        rows,
    }
}

/// Surface data of the two rank-3 colorful polytopes.
pub fn surfaces_table() -> Table {
    let mut rows = Vec::new();
    let a3 = ColorfulPolytope::build(build_colorful_exchange_graph(3).expect("n = 3").graph()).expect("valid graph");
    let z2 = ColorfulPolytope::build(build_cyclohedron_exchange_graph(2).expect("n = 2").graph()).expect("valid graph");
    for (name, p, expected) in [("Ac_3", a3, (84, 126, 36, -6, "orientable genus 4")), ("Zc_2", z2, (40, 60, 20, 0, "orientable genus 1"))] {
        let s = surface_report(p.poset()).expect("rank 3");
        rows.push(Row::new(
            format!("{name} v/e/f"),
            "face counts",
            format!("{}/{}/{}", expected.0, expected.1, expected.2),
            format!("{}/{}/{}", s.v, s.e, s.f),
        ));
        rows.push(Row::new(format!("{name} euler"), "v-e+f", expected.3, s.euler_characteristic));
        let kind = match (s.orientable, s.genus, s.crosscaps) {
            (true, Some(g), _) => format!("orientable genus {g}"),
            (_, _, Some(k)) => format!("non-orientable crosscaps {k}"),
            _ => "unknown".into(),
        };
        rows.push(Row::new(format!("{name} surface"), "chi = 2-2g", expected.4, kind));
        rows.push(Row::new(format!("{name} closed"), "each edge in two 2-faces", true, s.closed));
        if name == "Ac_3" {
            let sizes: Vec<String> = s.face_sizes.iter().map(|(k, c)| format!("{k}^{c}")).collect();
            rows.push(Row::new(format!("{name} 2-face sizes"), "size^count", "4^18 10^18", sizes.join(" ")));
            let census: Vec<String> = s
                .vertex_census
                .iter()
                .map(|(k, c)| format!("{}:{c}", k.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("-")))
                .collect();
            rows.push(Row::new(format!("{name} vertex types"), "sizes:count", "4-10-10:72 10-10-10:12", census.join(" ")));
        }
    }
    Table {
        kind: "surfaces".into(),
        rows,
    }
}

/// The intersection counts, one row per case: the row matches when every
/// admissible tuple of that case agrees with the closed form.
pub fn k_table(n: usize) -> Table {
    let g = build_colorful_exchange_graph(n).expect("supported size");
    let p = ColorfulPolytope::build(g.graph()).expect("valid graph");
    let rows = match FacetFamilies::new(&p, &g) {
        Ok(fam) => {
            let entries = fam.k_table(p.poset());
            KCase::ALL
                .iter()
                .map(|&case| {
                    let mut values: Vec<usize> = entries.iter().filter(|e| e.case == case).map(|e| e.computed).collect();
                    values.sort_unstable();
                    values.dedup();
                    let computed = values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("|");
                    let mut row = Row::new(format!("n={n} {case}"), case.formula(), case.closed_form(n), computed);
                    row.matched &= !values.is_empty();
                    row
                })
                .collect()
        }
        Err(e) => vec![Row::new(format!("n={n}"), "facet families", "defined", e)],
    };
    Table {
        kind: format!("K_table n={n}"),
        rows,
    }
}
