//! Rich-club, Super rich-club and rich edge-club membership and their
//! coefficients. All memberships use a strict `> j` comparison.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::census::{binomial, CensusMode, ParticipationTable};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A ratio that may be undefined (club smaller than two vertices, or a
/// zero denominator). Serializes as a number or the string `"undefined"`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Coefficient {
    Defined(f64),
    Undefined,
}

impl Coefficient {
    pub fn ratio(numerator: f64, denominator: f64) -> Self {
        if denominator > 0.0 {
            Coefficient::Defined(numerator / denominator)
        } else {
            Coefficient::Undefined
        }
    }

    pub fn value(self) -> Option<f64> {
        match self {
            Coefficient::Defined(x) => Some(x),
            Coefficient::Undefined => None,
        }
    }

    pub fn is_defined(self) -> bool {
        matches!(self, Coefficient::Defined(_))
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Defined(x) => write!(f, "{x}"),
            Coefficient::Undefined => f.write_str("undefined"),
        }
    }
}

impl Serialize for Coefficient {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Coefficient::Defined(x) => s.serialize_f64(*x),
            Coefficient::Undefined => s.serialize_str("undefined"),
        }
    }
}

impl<'de> Deserialize<'de> for Coefficient {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Number(f64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Number(x) => Ok(Coefficient::Defined(x)),
            Repr::Text(t) if t == "undefined" => Ok(Coefficient::Undefined),
            Repr::Text(t) => Err(serde::de::Error::custom(format!(
                "expected a number or \"undefined\", found \"{t}\""
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClubKind {
    RichClub,
    SuperRichClub,
    RichEdgeClub,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightedEdge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

/// Club membership together with its coefficient.
///
/// `member_edges` holds the edges of the club graph: internal edges with
/// their original weights for the rich-club, internal edges weighted by
/// edge participation for the Super rich-club, and the selected edges
/// weighted by edge participation for the rich edge-club.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClubReport {
    pub kind: ClubKind,
    pub k: usize,
    pub threshold: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight_threshold: Option<f64>,
    pub members: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub member_labels: Option<Vec<String>>,
    pub member_edges: Vec<WeightedEdge>,
    pub coefficient: Coefficient,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weighted_coefficient: Option<Coefficient>,
}

impl ClubReport {
    /// Adds the weighted participation coefficient of the members at
    /// weight threshold `t`.
    pub fn with_weighted_coefficient(mut self, g: &Graph, t: f64) -> Result<Self> {
        self.weighted_coefficient = Some(weighted_participation_coefficient(g, &self.members, t)?);
        self.weight_threshold = Some(t);
        Ok(self)
    }
}

#[inline]
fn exceeds(score: u64, j: i64) -> bool {
    j < 0 || score > j as u64
}

fn labels_for(g: &Graph, members: &[usize]) -> Option<Vec<String>> {
    g.labels()
        .map(|l| members.iter().map(|&v| l[v].clone()).collect())
}

/// Density of the subgraph induced by `members`, plus its internal edges.
fn induced_density(g: &Graph, members: &[usize]) -> (Coefficient, Vec<usize>) {
    let mut inside = vec![false; g.n()];
    for &v in members {
        inside[v] = true;
    }
    let internal: Vec<usize> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| inside[e.u] && inside[e.v])
        .map(|(id, _)| id)
        .collect();
    let pairs = binomial(members.len(), 2) as f64;
    (Coefficient::ratio(internal.len() as f64, pairs), internal)
}

/// Rich-club of vertices with degree `> j` and its coefficient
/// `E_{>j} / C(N_{>j}, 2)`.
pub fn rich_club(g: &Graph, j: i64) -> ClubReport {
    let members: Vec<usize> = (0..g.n())
        .filter(|&v| exceeds(g.incident(v).len() as u64, j))
        .collect();
    let (coefficient, internal) = induced_density(g, &members);
    let member_edges = internal
        .into_iter()
        .map(|id| {
            let e = g.edges()[id];
            WeightedEdge {
                u: e.u,
                v: e.v,
                weight: e.weight,
            }
        })
        .collect();
    ClubReport {
        kind: ClubKind::RichClub,
        k: 2,
        threshold: j,
        weight_threshold: None,
        member_labels: labels_for(g, &members),
        members,
        member_edges,
        coefficient,
        weighted_coefficient: None,
    }
}

/// Super rich-club: vertices with participation `ξ(v,k) > j`; the
/// coefficient is the density of the subgraph they induce.
pub fn super_rich_club(
    g: &Graph,
    k: usize,
    j: i64,
    table: &ParticipationTable,
) -> Result<ClubReport> {
    table.check_matches(g, k)?;
    let members: Vec<usize> = (0..g.n())
        .filter(|&v| exceeds(table.vertex_counts[v], j))
        .collect();
    let (coefficient, internal) = induced_density(g, &members);
    let member_edges = internal
        .into_iter()
        .map(|id| {
            let e = &table.edge_counts[id];
            WeightedEdge {
                u: e.u,
                v: e.v,
                weight: e.count as f64,
            }
        })
        .collect();
    Ok(ClubReport {
        kind: ClubKind::SuperRichClub,
        k,
        threshold: j,
        weight_threshold: None,
        member_labels: labels_for(g, &members),
        members,
        member_edges,
        coefficient,
        weighted_coefficient: None,
    })
}

/// Share of edge weight held inside `members`: the weight of edges with
/// both endpoints in `members`, over the weight of all edges heavier than
/// `weight_threshold`.
pub fn weighted_participation_coefficient(
    g: &Graph,
    members: &[usize],
    weight_threshold: f64,
) -> Result<Coefficient> {
    if !(weight_threshold >= 0.0 && weight_threshold.is_finite()) {
        return Err(Error::InvalidThreshold(weight_threshold));
    }
    let mut inside = vec![false; g.n()];
    for &v in members {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
        inside[v] = true;
    }
    let numerator: f64 = g
        .edges()
        .iter()
        .filter(|e| inside[e.u] && inside[e.v])
        .map(|e| e.weight)
        .sum();
    let denominator: f64 = g
        .edges()
        .iter()
        .filter(|e| e.weight > weight_threshold)
        .map(|e| e.weight)
        .sum();
    Ok(Coefficient::ratio(numerator, denominator))
}

/// Rich edge-club: edges with `ξ(e,k) > j`. The coefficient is their share
/// of all edge participation, `Σ ξ(e,k) / (C(k,2) · #K_k)`.
pub fn edge_club(g: &Graph, k: usize, j: i64, table: &ParticipationTable) -> Result<ClubReport> {
    table.check_matches(g, k)?;
    if table.mode != CensusMode::Exact {
        return Err(Error::TableMismatch(
            "edge-club needs an exact census table".into(),
        ));
    }
    let mut endpoint = vec![false; g.n()];
    let mut numerator = 0u64;
    let mut member_edges = Vec::new();
    for e in table.edge_counts.iter().filter(|e| exceeds(e.count, j)) {
        endpoint[e.u] = true;
        endpoint[e.v] = true;
        numerator += e.count;
        member_edges.push(WeightedEdge {
            u: e.u,
            v: e.v,
            weight: e.count as f64,
        });
    }
    let members: Vec<usize> = (0..g.n()).filter(|&v| endpoint[v]).collect();
    let denominator = binomial(k, 2) as f64 * table.total as f64;
    Ok(ClubReport {
        kind: ClubKind::RichEdgeClub,
        k,
        threshold: j,
        weight_threshold: None,
        member_labels: labels_for(g, &members),
        members,
        member_edges,
        coefficient: Coefficient::ratio(numerator as f64, denominator),
        weighted_coefficient: None,
    })
}

/// Picks the threshold `j'` whose club `{v : score > j'}` has size closest
/// to `target`. Equal scores are never split; a distance tie goes to the
/// smaller club. Among thresholds giving the chosen club the largest one is
/// returned, except for the empty club, where it is the maximum score.
pub fn select_threshold_for_size(scores: &[u64], target: usize) -> i64 {
    let mut distinct: Vec<u64> = scores.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let Some(&max) = distinct.last() else {
        return 0;
    };
    let club_size = |t: i64| scores.iter().filter(|&&s| exceeds(s, t)).count();
    // candidate thresholds in increasing order of club size
    let mut candidates = vec![max as i64];
    for w in distinct.windows(2).rev() {
        candidates.push(w[1] as i64 - 1);
    }
    candidates.push(distinct[0] as i64 - 1);
    let mut best = candidates[0];
    let mut best_gap = club_size(best).abs_diff(target);
    for &t in &candidates[1..] {
        let gap = club_size(t).abs_diff(target);
        if gap < best_gap {
            best = t;
            best_gap = gap;
        }
    }
    best
}
