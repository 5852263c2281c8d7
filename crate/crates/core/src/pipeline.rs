//! Iterative pseudo-census thresholding that reduces a weighted graph to
//! its SUpernodes.
//!
//! Iteration `i` takes graph `G_i`, sets `w_i` to the `P_i`-th nearest-rank
//! percentile of its edge weights, runs a pseudo census at `w_i`, and builds
//! `G_{i+1}` on the same vertices from the edges that took part in at least
//! one qualifying subset, weighted by that participation. The loop stops
//! when two consecutive iterations count the same number of subsets, when
//! the graph runs out of edges, or when the schedule ends.

use serde::{Deserialize, Serialize};

use crate::census::{pseudo_census, ParticipationTable};
use crate::club::WeightedEdge;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub const DEFAULT_K: usize = 5;
pub const DEFAULT_SCHEDULE_LEN: usize = 10;

/// Ordered percentiles, one per iteration.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PercentileSchedule {
    entries: Vec<f64>,
}

impl Default for PercentileSchedule {
    /// `50, 50`, then each entry halves the remaining distance to 100.
    fn default() -> Self {
        Self::halving(DEFAULT_SCHEDULE_LEN)
    }
}

impl PercentileSchedule {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidRecipe("empty percentile schedule".into()));
        }
        if let Some(&p) = entries.iter().find(|&&p| !(p > 0.0 && p <= 100.0)) {
            return Err(Error::InvalidPercentile(p));
        }
        Ok(PercentileSchedule { entries })
    }

    /// `len` entries of the halving schedule.
    pub fn halving(len: usize) -> Self {
        let mut entries = Vec::with_capacity(len);
        for i in 0..len {
            let p = match i {
                0 | 1 => 50.0,
                _ => (100.0 + entries[i - 1]) / 2.0,
            };
            entries.push(p);
        }
        PercentileSchedule { entries }
    }

    /// Reads a JSON array or a comma/whitespace separated list.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let entries: Vec<f64> = if trimmed.starts_with('[') {
            serde_json::from_str(trimmed).map_err(|e| Error::InvalidRecipe(e.to_string()))?
        } else {
            trimmed
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<f64>()
                        .map_err(|_| Error::InvalidRecipe(format!("`{t}` is not a percentile")))
                })
                .collect::<Result<_>>()?
        };
        Self::new(entries)
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Nearest-rank percentile: the `⌈P/100 · m⌉`-th smallest of `m` values.
pub fn percentile_value(weights: &[f64], percentile: f64) -> Result<f64> {
    if weights.is_empty() {
        return Err(Error::EmptyWeights);
    }
    if !(percentile > 0.0 && percentile <= 100.0) {
        return Err(Error::InvalidPercentile(percentile));
    }
    let mut sorted = weights.to_vec();
    sorted.sort_by(f64::total_cmp);
    let m = sorted.len();
    let rank = ((percentile * m as f64) / 100.0).ceil() as usize;
    Ok(sorted[rank.clamp(1, m) - 1])
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineOptions {
    /// Additionally drop edges of `G_{i+1}` whose participation falls below
    /// the `P_i`-th percentile of the participation weights.
    pub hard_percentile_cut: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HaltReason {
    Converged,
    Edgeless,
    ScheduleExhausted,
}

/// One iteration: schedule entry `schedule_index` applied to
/// `G_{input_graph}` produced `G_{output_graph}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IterationRecord {
    pub schedule_index: usize,
    pub input_graph: usize,
    pub output_graph: usize,
    pub percentile: f64,
    pub threshold: f64,
    pub total: u64,
    pub input_edges: usize,
    pub surviving_edges: usize,
    pub vertex_participation: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PipelineTrace {
    pub k: usize,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub iterations: Vec<IterationRecord>,
    pub halt: HaltReason,
    pub supernodes: Vec<usize>,
    pub final_edges: Vec<WeightedEdge>,
}

/// Single iteration on `g` with percentile `percentile`.
pub fn run_iteration(g: &Graph, k: usize, percentile: f64) -> Result<(Graph, IterationRecord)> {
    iterate(g, k, percentile, 0, false)
}

fn iterate(
    g: &Graph,
    k: usize,
    percentile: f64,
    index: usize,
    hard_cut: bool,
) -> Result<(Graph, IterationRecord)> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let weights: Vec<f64> = g.edges().iter().map(|e| e.weight).collect();
    let threshold = percentile_value(&weights, percentile)?;
    let table = pseudo_census(g, k, threshold)?;
    let next = rebuild(g, &table, hard_cut.then_some(percentile))?;
    let record = IterationRecord {
        schedule_index: index,
        input_graph: index,
        output_graph: index + 1,
        percentile,
        threshold,
        total: table.total,
        input_edges: g.edge_count(),
        surviving_edges: next.edge_count(),
        vertex_participation: table.vertex_counts,
    };
    Ok((next, record))
}

fn rebuild(g: &Graph, table: &ParticipationTable, cut: Option<f64>) -> Result<Graph> {
    let mut edges: Vec<Edge> = table
        .edge_counts
        .iter()
        .filter(|e| e.count > 0)
        .map(|e| Edge {
            u: e.u,
            v: e.v,
            weight: e.count as f64,
        })
        .collect();
    if let (Some(p), false) = (cut, edges.is_empty()) {
        let weights: Vec<f64> = edges.iter().map(|e| e.weight).collect();
        let floor = percentile_value(&weights, p)?;
        edges.retain(|e| e.weight >= floor);
    }
    Ok(g.with_edges(edges))
}

pub fn run_pipeline(g0: &Graph, k: usize, schedule: &PercentileSchedule) -> Result<PipelineTrace> {
    run_pipeline_with(g0, k, schedule, PipelineOptions::default())
}

pub fn run_pipeline_with(
    g0: &Graph,
    k: usize,
    schedule: &PercentileSchedule,
    options: PipelineOptions,
) -> Result<PipelineTrace> {
    if g0.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let mut g = g0.clone();
    let mut iterations: Vec<IterationRecord> = Vec::with_capacity(schedule.len());
    let mut halt = HaltReason::ScheduleExhausted;
    for (i, &p) in schedule.entries().iter().enumerate() {
        let (next, record) = iterate(&g, k, p, i, options.hard_percentile_cut)?;
        let repeated = iterations
            .last()
            .is_some_and(|prev| prev.total == record.total);
        iterations.push(record);
        g = next;
        if g.edge_count() == 0 {
            halt = HaltReason::Edgeless;
            break;
        }
        if repeated {
            halt = HaltReason::Converged;
            break;
        }
    }
    let supernodes = (0..g.n()).filter(|&v| !g.incident(v).is_empty()).collect();
    let final_edges = g
        .edges()
        .iter()
        .map(|e| WeightedEdge {
            u: e.u,
            v: e.v,
            weight: e.weight,
        })
        .collect();
    Ok(PipelineTrace {
        k,
        n: g0.n(),
        labels: g0.labels().map(<[String]>::to_vec),
        iterations,
        halt,
        supernodes,
        final_edges,
    })
}
