//! Colorful associahedra and colorful cyclohedra.
//!
//! Colored triangulations of convex and centrally symmetric polygons, their
//! flip graphs, the abstract polytopes built from those graphs, and the
//! symmetry, quotient and surface computations around them.

pub mod axioms;
pub mod color;
pub mod counting;
pub mod facets;
pub mod flags;
pub mod graph;
pub mod polytope;
pub mod poset;
pub mod quotient;
pub mod report;
pub mod search;
pub mod surface;
pub mod symmetry;
pub mod triangulation;
pub mod union_find;

pub use color::{ColorId, ColorPermutation};
pub use graph::{ColoredGraph, ExchangeGraph, GraphError, GraphReport};
pub use poset::{Face, FaceId, FaceLabel, RankedPoset};
pub use triangulation::{ColoredTriangulation, Diagonal, Polygon, Triangulation};
