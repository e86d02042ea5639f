#![no_main]

use colorful_core::axioms::{check_axioms, ConnectivityMode};
use colorful_core::polytope::ColorfulPolytope;
use colorful_core::ColoredGraph;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(graph) = ColoredGraph::from_json_str(text) else {
        return;
    };
    let back = ColoredGraph::from_json_str(&graph.to_json()).expect("own output parses");
    assert_eq!(back.edges(), graph.edges());
    let report = graph.validate();
    let _ = graph.to_dot();
    // Polytope construction only for graphs meeting its hypotheses, kept
    // small so each input stays fast.
    if report.hypothesis_failure().is_none() && graph.num_vertices() <= 64 && graph.color_set().len() <= 6 {
        let p = ColorfulPolytope::build(&graph).expect("hypotheses hold");
        let _ = check_axioms(p.poset(), ConnectivityMode::Exhaustive);
    }
});
