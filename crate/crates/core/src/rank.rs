//! Vertex rankings, swap (Kendall tau) distance, and set overlap between a
//! rich-club `R` and a Super rich-club `S`.

use serde::{Deserialize, Serialize};

use crate::census::ParticipationTable;
use crate::club::{select_threshold_for_size, Coefficient};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertices by descending score; equal scores keep ascending index order.
pub fn rank_vertices(scores: &[u64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].cmp(&scores[a]).then(a.cmp(&b)));
    order
}

fn positions(p: &[usize], name: &str) -> Result<Vec<usize>> {
    let mut pos = vec![usize::MAX; p.len()];
    for (i, &v) in p.iter().enumerate() {
        if v >= p.len() || pos[v] != usize::MAX {
            return Err(Error::InvalidRanking(format!(
                "{name} is not a permutation of 0..{}",
                p.len()
            )));
        }
        pos[v] = i;
    }
    Ok(pos)
}

/// Minimum number of adjacent transpositions turning `a` into `b`, i.e. the
/// number of vertex pairs the two rankings order differently.
pub fn swap_distance(a: &[usize], b: &[usize]) -> Result<u64> {
    if a.len() != b.len() {
        return Err(Error::InvalidRanking(format!(
            "lengths differ ({} vs {})",
            a.len(),
            b.len()
        )));
    }
    positions(a, "first ranking")?;
    let pos_b = positions(b, "second ranking")?;
    let mut seq: Vec<usize> = a.iter().map(|&v| pos_b[v]).collect();
    let mut buf = vec![0usize; seq.len()];
    Ok(count_inversions(&mut seq, &mut buf))
}

/// Merge sort that returns the number of inversions it removed.
fn count_inversions(seq: &mut [usize], buf: &mut [usize]) -> u64 {
    let n = seq.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut inv = {
        let (l, r) = seq.split_at_mut(mid);
        let (bl, br) = buf.split_at_mut(mid);
        count_inversions(l, bl) + count_inversions(r, br)
    };
    let (mut i, mut j, mut out) = (0, mid, 0);
    while i < mid && j < n {
        if seq[i] <= seq[j] {
            buf[out] = seq[i];
            i += 1;
        } else {
            buf[out] = seq[j];
            inv += (mid - i) as u64;
            j += 1;
        }
        out += 1;
    }
    buf[out..out + mid - i].copy_from_slice(&seq[i..mid]);
    out += mid - i;
    buf[out..n].copy_from_slice(&seq[j..n]);
    seq.copy_from_slice(&buf[..n]);
    inv
}

/// Overlap proportions between two vertex sets.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Overlap {
    pub size_a: usize,
    pub size_b: usize,
    pub common: usize,
    /// `|A∩B| / |A|`
    pub common_in_a: Coefficient,
    /// `|A∩B| / |B|`
    pub common_in_b: Coefficient,
    /// `|A∖B| / |A|`
    pub only_a: Coefficient,
    /// `|B∖A| / |B|`
    pub only_b: Coefficient,
}

pub fn overlap_report(set_a: &[usize], set_b: &[usize]) -> Overlap {
    let mut a = set_a.to_vec();
    let mut b = set_b.to_vec();
    a.sort_unstable();
    a.dedup();
    b.sort_unstable();
    b.dedup();
    let common = a.iter().filter(|v| b.binary_search(v).is_ok()).count();
    let (na, nb) = (a.len() as f64, b.len() as f64);
    Overlap {
        size_a: a.len(),
        size_b: b.len(),
        common,
        common_in_a: Coefficient::ratio(common as f64, na),
        common_in_b: Coefficient::ratio(common as f64, nb),
        only_a: Coefficient::ratio((a.len() - common) as f64, na),
        only_b: Coefficient::ratio((b.len() - common) as f64, nb),
    }
}

/// Degree ranking against participation ranking, with size-matched clubs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RankComparison {
    pub ranking_a: Vec<usize>,
    pub ranking_b: Vec<usize>,
    pub swap_distance: u64,
    /// Degree threshold `j` selecting the rich-club `R`.
    pub j: i64,
    /// Participation threshold `j'` selecting the Super rich-club `S`.
    pub j_prime: i64,
    pub set_a: Vec<usize>,
    pub set_b: Vec<usize>,
    pub overlap: Overlap,
}

/// Compares the rich-club (degree `> j`) with the Super rich-club
/// (`ξ(v,k) > j'`). `j` is chosen so `|R|` is as close as possible to
/// `target_size`, then `j'` so `|S|` is as close as possible to `|R|`.
pub fn compare_clubs(
    g: &Graph,
    table: &ParticipationTable,
    target_size: usize,
) -> Result<RankComparison> {
    let degrees = degree_scores(g);
    let j = select_threshold_for_size(&degrees, target_size);
    let size_a = members(&degrees, j).len();
    let j_prime = select_threshold_for_size(&table.vertex_counts, size_a);
    compare_clubs_at(g, table, j, j_prime)
}

/// Same comparison with both thresholds given.
pub fn compare_clubs_at(
    g: &Graph,
    table: &ParticipationTable,
    j: i64,
    j_prime: i64,
) -> Result<RankComparison> {
    if table.vertex_counts.len() != g.n() || table.graph_fingerprint != g.fingerprint() {
        return Err(Error::TableMismatch(
            "table was computed on a different graph".into(),
        ));
    }
    let degrees = degree_scores(g);
    let participation = &table.vertex_counts;
    let ranking_a = rank_vertices(&degrees);
    let ranking_b = rank_vertices(participation);
    let swap_distance = swap_distance(&ranking_a, &ranking_b)?;
    let set_a = members(&degrees, j);
    let set_b = members(participation, j_prime);
    let overlap = overlap_report(&set_a, &set_b);
    Ok(RankComparison {
        ranking_a,
        ranking_b,
        swap_distance,
        j,
        j_prime,
        set_a,
        set_b,
        overlap,
    })
}

fn degree_scores(g: &Graph) -> Vec<u64> {
    g.degrees().into_iter().map(|d| d as u64).collect()
}

fn members(scores: &[u64], j: i64) -> Vec<usize> {
    (0..scores.len())
        .filter(|&v| j < 0 || scores[v] > j as u64)
        .collect()
}
