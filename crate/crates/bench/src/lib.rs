//! Shared inputs for the criterion benchmarks.

use cliquerich::{gen_er, GenSpec, Graph};

/// Seeded `G(n, M)` graph used across benchmarks.
pub fn er_graph(n: usize, density: f64) -> Graph {
    gen_er(&GenSpec::er(n, density, 0x5eed)).expect("valid spec")
}

/// Unit-weight ER graph reweighted with deterministic pseudo-random
/// integer weights in `1..=100`.
pub fn weighted_er_graph(n: usize, density: f64) -> Graph {
    let g = er_graph(n, density);
    let edges = g.edges().iter().map(|e| {
        let w = ((e.u * 7919 + e.v * 104_729) % 100 + 1) as f64;
        (e.u, e.v, w)
    });
    Graph::from_edges(n, edges).expect("valid graph")
}
