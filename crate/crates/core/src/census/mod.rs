//! Participation numbers of vertices and edges in complete (`K_k`) and
//! pseudo-complete subgraphs.
//!
//! A census visits every qualifying `k`-vertex subset exactly once and
//! tallies, for each vertex and each edge, how many of those subsets
//! contain it. Tallies are integers merged by summation, so results do not
//! depend on the number of worker threads.

mod exact;
mod oracle;
mod pseudo;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use exact::{degeneracy_order, exact_census};
pub use oracle::{brute_force_census, ORACLE_LIMIT};
pub use pseudo::pseudo_census;

/// Which subsets a census counts.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum CensusMode {
    /// Induced subgraph is complete.
    Exact,
    /// Induced subgraph is connected on positive weights and its upper
    /// median pair weight (absent pairs count as 0) is at least `threshold`.
    Pseudo { threshold: f64 },
}

/// Participation count of one edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCount {
    pub u: usize,
    pub v: usize,
    pub count: u64,
}

/// Per-vertex and per-edge participation numbers from one census run.
///
/// `edge_counts[i]` belongs to edge id `i` of the graph the census ran on.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParticipationTable {
    pub k: usize,
    #[serde(flatten)]
    pub mode: CensusMode,
    pub total: u64,
    pub vertex_counts: Vec<u64>,
    pub edge_counts: Vec<EdgeCount>,
    pub graph_fingerprint: u64,
}

impl ParticipationTable {
    pub fn vertex(&self, v: usize) -> u64 {
        self.vertex_counts[v]
    }

    /// Participation of `{u, v}`; 0 when the pair is not an edge.
    pub fn edge(&self, u: usize, v: usize) -> u64 {
        let key = (u.min(v), u.max(v));
        self.edge_counts
            .binary_search_by_key(&key, |e| (e.u, e.v))
            .map_or(0, |i| self.edge_counts[i].count)
    }

    pub fn threshold(&self) -> Option<f64> {
        match self.mode {
            CensusMode::Exact => None,
            CensusMode::Pseudo { threshold } => Some(threshold),
        }
    }

    /// Errors unless this table was computed on `g` with order `k`.
    pub fn check_matches(&self, g: &Graph, k: usize) -> Result<()> {
        if self.k != k {
            return Err(Error::TableMismatch(format!(
                "table has k = {}, expected {k}",
                self.k
            )));
        }
        if self.graph_fingerprint != g.fingerprint() || self.vertex_counts.len() != g.n() {
            return Err(Error::TableMismatch(
                "table was computed on a different graph".into(),
            ));
        }
        Ok(())
    }
}

/// `C(n, k)` in 128-bit arithmetic.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Upper median of the `C(k,2)` pair weights of `subset`, absent pairs
/// counting as 0: the value at 1-based position `⌊m/2⌋ + 1` of the
/// ascending sort.
pub fn median_pair_weight(g: &Graph, subset: &[usize], k: usize) -> Result<f64> {
    if subset.len() != k || k < 2 {
        return Err(Error::SubsetSize {
            found: subset.len(),
            expected: k.max(2),
        });
    }
    for (i, &a) in subset.iter().enumerate() {
        if a >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: a,
                n: g.n(),
            });
        }
        if subset[..i].contains(&a) {
            return Err(Error::SubsetSize {
                found: i,
                expected: k,
            });
        }
    }
    let mut weights = Vec::with_capacity(k * (k - 1) / 2);
    for (i, &a) in subset.iter().enumerate() {
        for &b in &subset[i + 1..] {
            weights.push(g.weight(a, b));
        }
    }
    weights.sort_by(f64::total_cmp);
    Ok(weights[weights.len() / 2])
}

pub(crate) fn check_order(g: &Graph, k: usize) -> Result<()> {
    if k < 2 || k > g.n() {
        Err(Error::OrderOutOfRange { k, n: g.n() })
    } else {
        Ok(())
    }
}

/// Per-worker accumulator.
#[derive(Clone, Debug)]
pub(crate) struct Tally {
    pub total: u64,
    pub vertices: Vec<u64>,
    pub edges: Vec<u64>,
}

impl Tally {
    pub fn new(n: usize, m: usize) -> Self {
        Tally {
            total: 0,
            vertices: vec![0; n],
            edges: vec![0; m],
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.total += other.total;
        for (a, b) in self.vertices.iter_mut().zip(&other.vertices) {
            *a += b;
        }
        for (a, b) in self.edges.iter_mut().zip(&other.edges) {
            *a += b;
        }
        self
    }

    pub fn into_table(self, g: &Graph, k: usize, mode: CensusMode) -> ParticipationTable {
        let edge_counts = g
            .edges()
            .iter()
            .zip(self.edges)
            .map(|(e, count)| EdgeCount {
                u: e.u,
                v: e.v,
                count,
            })
            .collect();
        ParticipationTable {
            k,
            mode,
            total: self.total,
            vertex_counts: self.vertices,
            edge_counts,
            graph_fingerprint: g.fingerprint(),
        }
    }
}

/// Runs `visit` once per root on the current rayon pool and sums the
/// per-worker tallies.
pub(crate) fn tally_roots<F>(g: &Graph, roots: usize, visit: F) -> Tally
where
    F: Fn(usize, &mut Tally) + Sync,
{
    let (n, m) = (g.n(), g.edge_count());
    (0..roots)
        .into_par_iter()
        .fold(
            || Tally::new(n, m),
            |mut t, r| {
                visit(r, &mut t);
                t
            },
        )
        .reduce(|| Tally::new(n, m), Tally::merge)
}
