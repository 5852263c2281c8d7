//! Unpruned enumeration of every `k`-subset; the reference the optimized
//! census kernels are checked against.

use std::collections::VecDeque;

use super::{binomial, check_order, median_pair_weight, CensusMode, ParticipationTable, Tally};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest `C(n, k)` the oracle will enumerate.
pub const ORACLE_LIMIT: u128 = 10_000_000;

pub fn brute_force_census(g: &Graph, k: usize, mode: CensusMode) -> Result<ParticipationTable> {
    check_order(g, k)?;
    let subsets = binomial(g.n(), k);
    if subsets > ORACLE_LIMIT {
        return Err(Error::OracleTooLarge {
            n: g.n(),
            k,
            subsets,
            limit: ORACLE_LIMIT,
        });
    }
    if let CensusMode::Pseudo { threshold } = mode {
        if !threshold.is_finite() || threshold < 0.0 {
            return Err(Error::InvalidThreshold(threshold));
        }
    }
    let mut tally = Tally::new(g.n(), g.edge_count());
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let qualifies = match mode {
            CensusMode::Exact => all_pairs_adjacent(g, &subset),
            CensusMode::Pseudo { threshold } => {
                connected(g, &subset) && median_pair_weight(g, &subset, k)? >= threshold
            }
        };
        if qualifies {
            tally.total += 1;
            for (i, &a) in subset.iter().enumerate() {
                tally.vertices[a] += 1;
                for &b in &subset[i + 1..] {
                    if let Some(e) = g.edge_id(a, b) {
                        let counted = match mode {
                            CensusMode::Exact => true,
                            CensusMode::Pseudo { .. } => g.edges()[e].weight > 0.0,
                        };
                        if counted {
                            tally.edges[e] += 1;
                        }
                    }
                }
            }
        }
        if !next_combination(&mut subset, g.n()) {
            break;
        }
    }
    Ok(tally.into_table(g, k, mode))
}

fn all_pairs_adjacent(g: &Graph, subset: &[usize]) -> bool {
    subset
        .iter()
        .enumerate()
        .all(|(i, &a)| subset[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

/// Breadth-first search restricted to `subset`, over positive weights.
fn connected(g: &Graph, subset: &[usize]) -> bool {
    let mut seen = vec![false; subset.len()];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut reached = 1;
    while let Some(i) = queue.pop_front() {
        for (j, &b) in subset.iter().enumerate() {
            if !seen[j] && g.weight(subset[i], b) > 0.0 {
                seen[j] = true;
                reached += 1;
                queue.push_back(j);
            }
        }
    }
    reached == subset.len()
}

/// Advances `c` to the next k-combination of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
