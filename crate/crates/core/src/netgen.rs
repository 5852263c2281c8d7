//! Seeded Erdős–Rényi `G(n, M)` and Watts–Strogatz generators.
//!
//! All randomness comes from ChaCha8 streams, so a `(spec, seed)` pair
//! produces the same graph on every platform.

use rand::seq::index;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::census::binomial;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub const DEFAULT_REWIRING_BETA: f64 = 0.1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Er,
    Ws,
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "er" => Ok(Family::Er),
            "ws" => Ok(Family::Ws),
            other => Err(Error::InvalidGenSpec(format!("unknown family `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub family: Family,
    pub n: usize,
    pub target_density: f64,
    #[serde(default = "default_beta")]
    pub rewiring_beta: f64,
    pub seed: u64,
}

fn default_beta() -> f64 {
    DEFAULT_REWIRING_BETA
}

impl GenSpec {
    pub fn er(n: usize, target_density: f64, seed: u64) -> Self {
        GenSpec {
            family: Family::Er,
            n,
            target_density,
            rewiring_beta: DEFAULT_REWIRING_BETA,
            seed,
        }
    }

    pub fn ws(n: usize, target_density: f64, rewiring_beta: f64, seed: u64) -> Self {
        GenSpec {
            family: Family::Ws,
            n,
            target_density,
            rewiring_beta,
            seed,
        }
    }

    /// Nearest even integer to `target_density · (n − 1)`, ties rounded down.
    pub fn ring_degree(&self) -> usize {
        let half = self.target_density * (self.n.saturating_sub(1)) as f64 / 2.0;
        let floor = half.floor();
        let r = if half - floor > 0.5 {
            floor + 1.0
        } else {
            floor
        };
        2 * r.max(0.0) as usize
    }

    /// Number of edges `round(target_density · C(n, 2))` used by `G(n, M)`.
    pub fn er_edge_count(&self) -> usize {
        (self.target_density * binomial(self.n, 2) as f64).round() as usize
    }

    pub fn generate(&self) -> Result<Graph> {
        match self.family {
            Family::Er => gen_er(self),
            Family::Ws => gen_ws(self),
        }
    }
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` seeds drawn from stream `stream` of the generator seeded with
/// `base`; distinct streams never overlap.
pub fn derive_seeds(base: u64, stream: u64, count: usize) -> Vec<u64> {
    let mut rng = rng_for(base);
    rng.set_stream(stream);
    (0..count).map(|_| rng.next_u64()).collect()
}

/// Uniform graph with exactly `round(density · C(n,2))` unit-weight edges.
pub fn gen_er(spec: &GenSpec) -> Result<Graph> {
    let n = spec.n;
    if n < 2 {
        return Err(Error::InvalidGenSpec(format!("n = {n} must be at least 2")));
    }
    if !(spec.target_density > 0.0 && spec.target_density <= 1.0) {
        return Err(Error::InvalidGenSpec(format!(
            "density {} outside (0, 1]",
            spec.target_density
        )));
    }
    let pairs = binomial(n, 2) as usize;
    let m = spec.er_edge_count().min(pairs);
    let mut rng = rng_for(spec.seed);
    let mut chosen = index::sample(&mut rng, pairs, m).into_vec();
    chosen.sort_unstable();
    // decode pair indices in row-major upper-triangle order
    let mut edges = Vec::with_capacity(m);
    let (mut u, mut row_start) = (0usize, 0usize);
    for idx in chosen {
        while idx >= row_start + (n - 1 - u) {
            row_start += n - 1 - u;
            u += 1;
        }
        edges.push(Edge {
            u,
            v: u + 1 + (idx - row_start),
            weight: 1.0,
        });
    }
    Ok(Graph::from_sorted(n, edges, None))
}

/// Ring lattice with `ring_degree / 2` neighbors per side, each lattice
/// edge then rewired with probability `rewiring_beta` to a uniformly chosen
/// vertex that is neither the source nor already adjacent to it.
pub fn gen_ws(spec: &GenSpec) -> Result<Graph> {
    let n = spec.n;
    if n < 4 {
        return Err(Error::InvalidGenSpec(format!("n = {n} must be at least 4")));
    }
    if !(spec.target_density > 0.0 && spec.target_density <= 1.0) {
        return Err(Error::InvalidGenSpec(format!(
            "density {} outside (0, 1]",
            spec.target_density
        )));
    }
    if !(0.0..=1.0).contains(&spec.rewiring_beta) {
        return Err(Error::InvalidGenSpec(format!(
            "rewiring probability {} outside [0, 1]",
            spec.rewiring_beta
        )));
    }
    let ring = spec.ring_degree();
    if ring < 2 || ring >= n {
        return Err(Error::InvalidGenSpec(format!(
            "ring degree {ring} must satisfy 2 <= k < n = {n}; density too low or too high"
        )));
    }
    let mut adj = vec![vec![false; n]; n];
    for u in 0..n {
        for j in 1..=ring / 2 {
            let v = (u + j) % n;
            adj[u][v] = true;
            adj[v][u] = true;
        }
    }
    let mut rng = rng_for(spec.seed);
    let mut candidates = Vec::with_capacity(n);
    for j in 1..=ring / 2 {
        for u in 0..n {
            if rng.gen::<f64>() >= spec.rewiring_beta {
                continue;
            }
            let v = (u + j) % n;
            candidates.clear();
            candidates.extend((0..n).filter(|&w| w != u && !adj[u][w]));
            if candidates.is_empty() {
                continue;
            }
            let w = candidates[rng.gen_range(0..candidates.len())];
            adj[u][v] = false;
            adj[v][u] = false;
            adj[u][w] = true;
            adj[w][u] = true;
        }
    }
    let mut edges = Vec::with_capacity(n * ring / 2);
    for u in 0..n {
        for v in u + 1..n {
            if adj[u][v] {
                edges.push(Edge { u, v, weight: 1.0 });
            }
        }
    }
    Ok(Graph::from_sorted(n, edges, None))
}
