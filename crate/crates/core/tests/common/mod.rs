#![allow(dead_code)]

use cliquerich::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)` with unit weights, or integer weights in `1..=max_weight`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64, max_weight: Option<u32>) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                let w = match max_weight {
                    Some(m) => rng.gen_range(1..=m) as f64,
                    None => 1.0,
                };
                edges.push((u, v, w));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn label_set(g: &Graph, vertices: &[usize]) -> Vec<String> {
    let mut l: Vec<String> = vertices.iter().map(|&v| g.label(v)).collect();
    l.sort();
    l
}

pub fn sorted(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v
}

pub fn strings(xs: &[&str]) -> Vec<String> {
    sorted(xs.iter().map(|s| s.to_string()).collect())
}
