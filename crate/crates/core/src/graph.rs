//! Simple undirected weighted graphs and their text formats.
//!
//! Vertices are dense indices `0..n`. Every stored edge carries a
//! non-negative weight; a pair that is not stored has implicit weight 0.

use std::collections::HashMap;
use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::bitset::BitMatrix;
use crate::error::{Error, Result};

/// Absolute tolerance for symmetry and zero-diagonal checks on dense input.
pub const SYMMETRY_TOLERANCE: f64 = 1e-9;

/// An undirected edge `{u, v}` stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

/// Immutable simple undirected weighted graph.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    labels: Option<Vec<String>>,
    edges: Vec<Edge>,
    // sorted by neighbor: (neighbor, edge id)
    adjacency: Vec<Vec<(usize, usize)>>,
    bits: BitMatrix,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.labels == other.labels && self.edges == other.edges
    }
}

/// Result of [`Graph::induced_subgraph`]: the subgraph plus, for each of its
/// vertices, the index of that vertex in the parent graph.
#[derive(Clone, Debug, PartialEq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub original: Vec<usize>,
}

impl Graph {
    /// Builds a graph from `(u, v, weight)` triples.
    ///
    /// Repeated pairs are accepted when their weights agree exactly and
    /// rejected otherwise.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let mut seen: HashMap<(usize, usize), f64> = HashMap::new();
        for (idx, (u, v, w)) in edges.into_iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "self-loop".into(),
                });
            }
            if !w.is_finite() || w < 0.0 {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: format!("weight {w} is not a non-negative finite number"),
                });
            }
            let key = (u.min(v), u.max(v));
            if let Some(&prev) = seen.get(&key) {
                if prev != w {
                    return Err(Error::ConflictingDuplicate {
                        line: idx + 1,
                        u: key.0.to_string(),
                        v: key.1.to_string(),
                        first: prev,
                        second: w,
                    });
                }
            } else {
                seen.insert(key, w);
            }
        }
        let mut edges: Vec<Edge> = seen
            .into_iter()
            .map(|((u, v), weight)| Edge { u, v, weight })
            .collect();
        edges.sort_by_key(|e| (e.u, e.v));
        Ok(Self::from_sorted(n, edges, None))
    }

    /// Unweighted graph: every edge gets weight 1.
    pub fn unweighted<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edges(n, edges.into_iter().map(|(u, v)| (u, v, 1.0)))
    }

    /// Complete graph on `n` vertices with unit weights.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push(Edge { u, v, weight: 1.0 });
            }
        }
        Self::from_sorted(n, edges, None)
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new(), None)
    }

    // `edges` must be sorted, deduplicated, validated, with u < v.
    pub(crate) fn from_sorted(n: usize, edges: Vec<Edge>, labels: Option<Vec<String>>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        let mut bits = BitMatrix::new(n);
        for (id, e) in edges.iter().enumerate() {
            adjacency[e.u].push((e.v, id));
            adjacency[e.v].push((e.u, id));
            bits.set(e.u, e.v);
            bits.set(e.v, e.u);
        }
        for row in &mut adjacency {
            row.sort_unstable();
        }
        Graph {
            n,
            labels,
            edges,
            adjacency,
            bits,
        }
    }

    /// Attaches one unique label per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidLabels(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if let Some(j) = seen.insert(l.as_str(), i) {
                return Err(Error::InvalidLabels(format!(
                    "label `{l}` used by vertices {j} and {i}"
                )));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted by `(u, v)`; the position of an edge is its edge id.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `v`, or its index rendered as a string.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v].iter().map(|&(u, _)| u).collect())
    }

    /// Neighbor/edge-id pairs of `v`, sorted by neighbor. Panics if `v >= n`.
    pub(crate) fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    /// Id of edge `{u, v}` if it is stored.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let row = self.adjacency.get(u)?;
        row.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| row[i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.bits.contains(u, v)
    }

    /// Weight of `{u, v}`; 0 for pairs that are not edges.
    pub fn weight(&self, u: usize, v: usize) -> f64 {
        self.edge_id(u, v).map_or(0.0, |id| self.edges[id].weight)
    }

    pub fn max_weight(&self) -> Option<f64> {
        self.edges.iter().map(|e| e.weight).reduce(f64::max)
    }

    /// Edge density `2|E| / (n² − n)`.
    pub fn density(&self) -> Result<f64> {
        if self.n < 2 {
            return Err(Error::UndefinedDensity(self.n));
        }
        let n = self.n as f64;
        Ok(2.0 * self.edges.len() as f64 / (n * n - n))
    }

    /// Subgraph induced by `vertices`, re-indexed in ascending original order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<InducedSubgraph> {
        let mut original: Vec<usize> = vertices.to_vec();
        original.sort_unstable();
        original.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (new, &old) in original.iter().enumerate() {
            self.check_vertex(old)?;
            index[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| index[e.u] != usize::MAX && index[e.v] != usize::MAX)
            .map(|e| Edge {
                u: index[e.u],
                v: index[e.v],
                weight: e.weight,
            })
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| original.iter().map(|&v| l[v].clone()).collect());
        Ok(InducedSubgraph {
            graph: Self::from_sorted(original.len(), edges, labels),
            original,
        })
    }

    /// Same vertex set and labels, new edge list.
    pub(crate) fn with_edges(&self, edges: Vec<Edge>) -> Graph {
        Self::from_sorted(self.n, edges, self.labels.clone())
    }

    /// Stable content hash over order, edges, and weights.
    pub fn fingerprint(&self) -> u64 {
        let mut h = Sha256::new();
        h.update((self.n as u64).to_le_bytes());
        for e in &self.edges {
            h.update((e.u as u64).to_le_bytes());
            h.update((e.v as u64).to_le_bytes());
            h.update(e.weight.to_bits().to_le_bytes());
        }
        let digest = h.finalize();
        u64::from_le_bytes(digest[..8].try_into().expect("digest is 32 bytes"))
    }

    /// Parses the edge-list format: one `u v [w]` record per line, `#`
    /// starts a comment, and a line with a single identifier declares an
    /// isolated vertex. Identifiers are vertex indices when every one of
    /// them is a non-negative integer, otherwise they are labels numbered
    /// in order of first appearance.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut records: Vec<(usize, Vec<&str>)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.len() {
                0 => continue,
                1..=3 => records.push((i + 1, tokens)),
                n => {
                    return Err(Error::Malformed {
                        line: i + 1,
                        reason: format!("expected `u v [weight]`, found {n} fields"),
                    })
                }
            }
        }
        let numeric = records
            .iter()
            .all(|(_, t)| t.iter().take(2).all(|s| s.parse::<usize>().is_ok()));

        let mut ids: HashMap<String, usize> = HashMap::new();
        let mut names: Vec<String> = Vec::new();
        let mut n = 0usize;
        let mut resolve = |tok: &str| -> usize {
            if numeric {
                let v: usize = tok.parse().expect("checked numeric");
                n = n.max(v + 1);
                v
            } else {
                *ids.entry(tok.to_string()).or_insert_with(|| {
                    names.push(tok.to_string());
                    names.len() - 1
                })
            }
        };

        let mut seen: HashMap<(usize, usize), f64> = HashMap::new();
        let mut edges = Vec::new();
        for (line, tokens) in &records {
            let line = *line;
            let u = resolve(tokens[0]);
            if tokens.len() == 1 {
                continue;
            }
            let v = resolve(tokens[1]);
            let weight = match tokens.get(2) {
                None => 1.0,
                Some(s) => match s.parse::<f64>() {
                    Ok(w) if w.is_finite() => w,
                    _ => {
                        return Err(Error::Malformed {
                            line,
                            reason: format!("weight `{s}` is not a finite number"),
                        })
                    }
                },
            };
            if u == v {
                return Err(Error::SelfLoop {
                    line,
                    vertex: tokens[0].to_string(),
                });
            }
            if weight < 0.0 {
                return Err(Error::NegativeWeight { line, weight });
            }
            let key = (u.min(v), u.max(v));
            match seen.get(&key) {
                Some(&prev) if prev != weight => {
                    return Err(Error::ConflictingDuplicate {
                        line,
                        u: tokens[0].to_string(),
                        v: tokens[1].to_string(),
                        first: prev,
                        second: weight,
                    })
                }
                Some(_) => {}
                None => {
                    seen.insert(key, weight);
                    edges.push(Edge {
                        u: key.0,
                        v: key.1,
                        weight,
                    });
                }
            }
        }
        edges.sort_by_key(|e| (e.u, e.v));
        if numeric {
            Ok(Self::from_sorted(n, edges, None))
        } else {
            let n = names.len();
            Ok(Self::from_sorted(n, edges, Some(names)))
        }
    }

    /// Parses a square, symmetric, non-negative matrix with zero diagonal.
    /// Entries may be separated by commas or whitespace. Entries above zero
    /// become edges; near-symmetric pairs are replaced by their mean.
    pub fn from_dense_matrix(text: &str) -> Result<Self> {
        let mut rows: Vec<Vec<f64>> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<f64>()
                        .ok()
                        .filter(|x| x.is_finite())
                        .ok_or_else(|| Error::Malformed {
                            line: i + 1,
                            reason: format!("`{t}` is not a finite number"),
                        })
                })
                .collect::<Result<Vec<f64>>>()?;
            rows.push(row);
        }
        let n = rows.len();
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: r,
                    found: row.len(),
                    expected: n,
                });
            }
        }
        let mut edges = Vec::new();
        for u in 0..n {
            if rows[u][u].abs() > SYMMETRY_TOLERANCE {
                return Err(Error::NonzeroDiagonal {
                    index: u,
                    value: rows[u][u],
                });
            }
            for v in 0..n {
                if rows[u][v] < 0.0 {
                    return Err(Error::NegativeEntry {
                        row: u,
                        col: v,
                        value: rows[u][v],
                    });
                }
            }
            for v in u + 1..n {
                let (a, b) = (rows[u][v], rows[v][u]);
                if (a - b).abs() > SYMMETRY_TOLERANCE {
                    return Err(Error::Asymmetric {
                        row: u,
                        col: v,
                        a,
                        b,
                    });
                }
                let weight = if a == b { a } else { (a + b) / 2.0 };
                if weight > 0.0 {
                    edges.push(Edge { u, v, weight });
                }
            }
        }
        Ok(Self::from_sorted(n, edges, None))
    }

    /// Emits the edge-list format. Isolated vertices (every vertex, for a
    /// labelled graph) are declared on their own line so that parsing the
    /// output restores the vertex count and numbering.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let name = |v: usize| self.label(v);
        for v in 0..self.n {
            if self.labels.is_some() || self.adjacency[v].is_empty() {
                let _ = writeln!(out, "{}", name(v));
            }
        }
        for e in &self.edges {
            let _ = writeln!(out, "{} {} {}", name(e.u), name(e.v), e.weight);
        }
        out
    }

    /// Emits the dense CSV matrix form accepted by [`Graph::from_dense_matrix`].
    pub fn to_dense_matrix(&self) -> String {
        let mut out = String::new();
        for u in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|v| self.weight(u, v).to_string()).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn edge_list_basic() {
        let g = Graph::from_edge_list("0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(g.edges().iter().all(|e| e.weight == 1.0));
    }

    #[test]
    fn edge_list_identical_duplicate_is_merged() {
        let g = Graph::from_edge_list("0 1 2.5\n0 1 2.5").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.weight(1, 0), 2.5);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        assert!(matches!(
            Graph::from_edge_list("0 0"),
            Err(Error::SelfLoop { line: 1, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("# header\n0 1 -3"),
            Err(Error::NegativeWeight { line: 2, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("0 1 2\n1 0 3"),
            Err(Error::ConflictingDuplicate { line: 2, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("0 1 x"),
            Err(Error::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("0 1 2 3"),
            Err(Error::Malformed { line: 1, .. })
        ));
    }

    #[test]
    fn edge_list_labels_and_isolated() {
        let g = Graph::from_edge_list("a b 2 # comment\nc\nb c").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.labels().unwrap(), ["a", "b", "c"]);
        assert_eq!(g.weight(0, 1), 2.0);
        let again = Graph::from_edge_list(&g.to_edge_list()).unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn dense_matrix_cases() {
        let g = Graph::from_dense_matrix("0 0 0\n0 0 0\n0 0 0").unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 0));
        assert!(matches!(
            Graph::from_dense_matrix("0,1\n2,0"),
            Err(Error::Asymmetric { .. })
        ));
        assert!(matches!(
            Graph::from_dense_matrix("0,1,0\n1,0"),
            Err(Error::NotSquare { .. })
        ));
        assert!(matches!(
            Graph::from_dense_matrix("0,-1\n-1,0"),
            Err(Error::NegativeEntry { .. })
        ));
        assert!(matches!(
            Graph::from_dense_matrix("1,1\n1,0"),
            Err(Error::NonzeroDiagonal { .. })
        ));
        let g = Graph::from_dense_matrix("0,2\n2.0000000001,0").unwrap();
        assert!((g.weight(0, 1) - 2.00000000005).abs() < 1e-15);
    }

    #[test]
    fn density_cases() {
        assert_eq!(Graph::complete(5).density().unwrap(), 1.0);
        assert_eq!(Graph::empty(5).density().unwrap(), 0.0);
        assert!(matches!(
            Graph::empty(1).density(),
            Err(Error::UndefinedDensity(1))
        ));
    }

    #[test]
    fn degree_and_induced() {
        let k4 = Graph::complete(4);
        assert!((0..4).all(|v| k4.degree(v).unwrap() == 3));
        assert!(k4.degree(4).is_err());
        let sub = k4.induced_subgraph(&[3, 1]).unwrap();
        assert_eq!(sub.original, vec![1, 3]);
        assert_eq!(sub.graph.edge_count(), 1);
        assert!(k4.induced_subgraph(&[0, 9]).is_err());
    }

    #[test]
    fn from_edges_validation() {
        assert!(Graph::from_edges(2, [(0, 0, 1.0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 2, 1.0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 1, f64::NAN)]).is_err());
        assert!(Graph::from_edges(2, [(0, 1, 1.0), (1, 0, 2.0)]).is_err());
        let g = Graph::from_edges(2, [(0, 1, 1.0), (1, 0, 1.0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(Graph::complete(3)
            .with_labels(vec!["a".into(), "a".into(), "b".into()])
            .is_err());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (2usize..14).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n, 0u32..50), 0..40).prop_map(move |raw| {
                let mut seen = std::collections::HashSet::new();
                let edges: Vec<_> = raw
                    .into_iter()
                    .filter(|&(u, v, _)| u != v && seen.insert((u.min(v), u.max(v))))
                    .map(|(u, v, w)| (u, v, w as f64 * 0.37 + 0.01))
                    .collect();
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn handshake(g in arb_graph()) {
            let sum: usize = g.degrees().iter().sum();
            prop_assert_eq!(sum, 2 * g.edge_count());
        }

        #[test]
        fn induced_on_all_vertices_is_identity(g in arb_graph()) {
            let all: Vec<usize> = (0..g.n()).collect();
            prop_assert_eq!(g.induced_subgraph(&all).unwrap().graph, g);
        }

        #[test]
        fn dense_matrix_round_trip(g in arb_graph()) {
            prop_assert_eq!(Graph::from_dense_matrix(&g.to_dense_matrix()).unwrap(), g);
        }

        #[test]
        fn complete_density_is_one(n in 2usize..40) {
            prop_assert_eq!(Graph::complete(n).density().unwrap(), 1.0);
        }
    }
}
