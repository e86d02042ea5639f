//! `colorful`: build, verify and tabulate colorful associahedra and
//! cyclohedra.

mod output;
mod subject;
mod verbs;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::Format;
use subject::Family;

#[derive(Parser, Debug)]
#[command(name = "colorful", version, about = "Colorful associahedra and cyclohedra")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Which polytope family to build.
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    /// Size parameter: the polygon has n+3 vertices (2n+4 for cyclohedra).
    #[arg(short = 'n', long = "n")]
    pub n: Option<usize>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for sampled flag-connectivity.
    #[arg(long, default_value_t = verbs::DEFAULT_SEED)]
    pub seed: u64,
    /// Check strong flag-connectivity exhaustively at every size.
    #[arg(long)]
    pub exhaustive: bool,
    /// Read an edge-colored graph (JSON) instead of a built-in family.
    #[arg(long, value_name = "PATH")]
    pub from_file: Option<PathBuf>,
    /// Write the report here instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Full,
    Preserving,
    Respecting,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableArg {
    Counts,
    Groups,
    Surfaces,
    #[value(name = "K_table", alias = "k_table", alias = "k-table")]
    KTable,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Build the exchange graph (or validate a graph file).
    Build(Common),
    /// Run every check available for the family.
    Verify(Common),
    /// Automorphism group of the exchange graph.
    Aut {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Mode::Respecting)]
        mode: Mode,
    },
    /// Check the automorphism group against S_n x D_m (or D_m).
    VerifyGroup(Common),
    /// Quotient a colorful polytope by color permutations and compare with
    /// the classical polytope.
    Quotient(Common),
    /// Check the colorblind projection onto the classical polytope.
    CheckCovering(Common),
    /// Decide whether two polytopes are isomorphic.
    CheckIso {
        #[command(flatten)]
        common: Common,
        /// Family of the second polytope.
        #[arg(long, value_enum)]
        with: Option<Family>,
        /// Size of the second polytope.
        #[arg(long)]
        with_n: Option<usize>,
        /// Graph file for the second polytope.
        #[arg(long, value_name = "PATH")]
        with_file: Option<PathBuf>,
    },
    /// Euler characteristic, orientability and genus of a rank-3 polytope.
    Surface(Common),
    /// Facet families, intersection counts and facet census.
    FacetStats(Common),
    /// Build the polytope and export its face poset.
    BuildPolytope(Common),
    /// Check the abstract polytope axioms.
    CheckAxioms(Common),
    /// Closed-form values next to computed ones.
    Report {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        table: TableArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(threads) = std::env::var("POLYCOLOR_THREADS") {
        match threads.parse::<usize>() {
            Ok(t) if t > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
            }
            _ => {
                eprintln!("error: POLYCOLOR_THREADS must be a positive integer, got {threads:?}");
                return ExitCode::from(2);
            }
        }
    }
    let result = match cli.verb {
        Verb::Build(c) => verbs::build(&c),
        Verb::Verify(c) => verbs::verify(&c),
        Verb::Aut { common, mode } => verbs::aut(&common, mode),
        Verb::VerifyGroup(c) => verbs::verify_group(&c),
        Verb::Quotient(c) => verbs::quotient(&c),
        Verb::CheckCovering(c) => verbs::check_covering(&c),
        Verb::CheckIso {
            common,
            with,
            with_n,
            with_file,
        } => verbs::check_iso(&common, with, with_n, with_file),
        Verb::Surface(c) => verbs::surface(&c),
        Verb::FacetStats(c) => verbs::facet_stats(&c),
        Verb::BuildPolytope(c) => verbs::build_polytope(&c),
        Verb::CheckAxioms(c) => verbs::check_axioms(&c),
        Verb::Report { common, table } => verbs::report(&common, table),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
