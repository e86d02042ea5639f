//! Turning `--family`/`-n`/`--from-file` into a graph and a polytope.

use std::fmt;
use std::path::Path;

use clap::ValueEnum;
use colorful_core::graph::{
    build_colorful_exchange_graph, build_cyclohedron_exchange_graph, build_uncolored_cyclohedron_exchange_graph,
    build_uncolored_exchange_graph,
};
use colorful_core::polytope::ColorfulPolytope;
use colorful_core::quotient::{build_classical_associahedron, build_classical_cyclohedron, ClassicalPolytope};
use colorful_core::{ColoredGraph, ColoredTriangulation, ExchangeGraph, RankedPoset, Triangulation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Family {
    Associahedron,
    ColorfulAssociahedron,
    Cyclohedron,
    ColorfulCyclohedron,
    FromFile,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Associahedron => "associahedron",
            Family::ColorfulAssociahedron => "colorful_associahedron",
            Family::Cyclohedron => "cyclohedron",
            Family::ColorfulCyclohedron => "colorful_cyclohedron",
            Family::FromFile => "from_file",
        }
    }

    /// Largest supported `n` for building and for full verification.
    pub fn limits(self) -> (usize, usize, usize) {
        match self {
            Family::Associahedron => (0, 6, 6),
            Family::ColorfulAssociahedron => (0, 5, 4),
            Family::Cyclohedron => (1, 4, 4),
            Family::ColorfulCyclohedron => (1, 3, 3),
            Family::FromFile => (0, 0, 0),
        }
    }

    pub fn is_cyclohedron(self) -> bool {
        matches!(self, Family::Cyclohedron | Family::ColorfulCyclohedron)
    }

    pub fn colored_counterpart(self) -> Option<Family> {
        match self {
            Family::Associahedron => Some(Family::ColorfulAssociahedron),
            Family::Cyclohedron => Some(Family::ColorfulCyclohedron),
            _ => None,
        }
    }

    pub fn classical_counterpart(self) -> Option<Family> {
        match self {
            Family::ColorfulAssociahedron => Some(Family::Associahedron),
            Family::ColorfulCyclohedron => Some(Family::Cyclohedron),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

pub fn invalid(msg: impl Into<String>) -> InputError {
    InputError(msg.into())
}

/// A built family member or a graph read from a file.
pub enum Subject {
    Colored {
        family: Family,
        n: usize,
        exchange: Option<ExchangeGraph<ColoredTriangulation>>,
        graph: ColoredGraph,
    },
    Classical {
        family: Family,
        n: usize,
        exchange: ExchangeGraph<Triangulation>,
    },
}

impl Subject {
    pub fn family(&self) -> Family {
        match self {
            Subject::Colored { family, .. } | Subject::Classical { family, .. } => *family,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Subject::Colored { n, .. } | Subject::Classical { n, .. } => *n,
        }
    }

    pub fn graph(&self) -> &ColoredGraph {
        match self {
            Subject::Colored { graph, .. } => graph,
            Subject::Classical { exchange, .. } => exchange.graph(),
        }
    }

    pub fn title(&self) -> String {
        match self.family() {
            Family::FromFile => format!("from_file ({} colors)", self.n()),
            f => format!("{f} n={}", self.n()),
        }
    }

    /// The colorful polytope, or the classical face poset built from fixed
    /// diagonals.
    pub fn poset(&self) -> Result<Built, InputError> {
        match self {
            Subject::Colored { graph, .. } => {
                let p = ColorfulPolytope::build(graph).map_err(|e| invalid(e.to_string()))?;
                Ok(Built::Colorful(p))
            }
            Subject::Classical { family, n, .. } => Ok(Built::Classical(classical(*family, *n)?)),
        }
    }
}

pub enum Built {
    Colorful(ColorfulPolytope),
    Classical(ClassicalPolytope),
}

impl Built {
    pub fn poset(&self) -> &RankedPoset {
        match self {
            Built::Colorful(p) => p.poset(),
            Built::Classical(c) => &c.poset,
        }
    }
}

pub fn classical(family: Family, n: usize) -> Result<ClassicalPolytope, InputError> {
    let out = match family {
        Family::Associahedron | Family::ColorfulAssociahedron => build_classical_associahedron(n),
        Family::Cyclohedron | Family::ColorfulCyclohedron => build_classical_cyclohedron(n),
        Family::FromFile => return Err(invalid("a graph file has no classical counterpart")),
    };
    out.map_err(|e| invalid(e.to_string()))
}

/// Resolves the family: `--from-file` implies `from_file`.
pub fn resolve(family: Option<Family>, n: Option<usize>, file: Option<&Path>, for_verify: bool) -> Result<Subject, InputError> {
    match (family, file) {
        (Some(Family::FromFile) | None, Some(path)) => from_file(path),
        (Some(Family::FromFile), None) => Err(invalid("--family from_file needs --from-file PATH")),
        (Some(f), Some(_)) => Err(invalid(format!("--from-file conflicts with --family {f}"))),
        (None, None) => Err(invalid("give --family or --from-file")),
        (Some(f), None) => {
            let n = n.ok_or_else(|| invalid(format!("--family {f} needs -n")))?;
            let (lo, build_max, verify_max) = f.limits();
            let max = if for_verify { verify_max } else { build_max };
            if n < lo || n > max {
                return Err(invalid(format!("n = {n} is outside the supported range {lo}..={max} for {f}")));
            }
            build(f, n)
        }
    }
}

pub fn build(family: Family, n: usize) -> Result<Subject, InputError> {
    let err = |e: colorful_core::GraphError| invalid(e.to_string());
    Ok(match family {
        Family::ColorfulAssociahedron | Family::ColorfulCyclohedron => {
            let exchange = if family == Family::ColorfulAssociahedron {
                build_colorful_exchange_graph(n).map_err(err)?
            } else {
                build_cyclohedron_exchange_graph(n).map_err(err)?
            };
            Subject::Colored {
                family,
                n,
                graph: exchange.graph().clone(),
                exchange: Some(exchange),
            }
        }
        Family::Associahedron => Subject::Classical {
            family,
            n,
            exchange: build_uncolored_exchange_graph(n).map_err(err)?,
        },
        Family::Cyclohedron => Subject::Classical {
            family,
            n,
            exchange: build_uncolored_cyclohedron_exchange_graph(n).map_err(err)?,
        },
        Family::FromFile => return Err(invalid("from_file is not a built-in family")),
    })
}

fn from_file(path: &Path) -> Result<Subject, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| invalid(format!("cannot read {}: {e}", path.display())))?;
    let graph = ColoredGraph::from_json_str(&text).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    if let Some(reason) = graph.validate().hypothesis_failure() {
        return Err(invalid(format!("{}: {reason}", path.display())));
    }
    Ok(Subject::Colored {
        family: Family::FromFile,
        n: graph.color_set().len(),
        exchange: None,
        graph,
    })
}
