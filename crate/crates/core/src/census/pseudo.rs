use super::{check_order, tally_roots, CensusMode, ParticipationTable, Tally};
use crate::bitset::{self, BitMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Counts every `k`-subset that is connected through positive-weight edges
/// and whose upper-median pair weight is at least `threshold`.
///
/// Subsets are enumerated once each with the ESU scheme (extensions only
/// through vertices larger than the root and outside the current closed
/// neighborhood). The median test is evaluated as a count: the upper median
/// of `m` values is `>= w` exactly when at least `m - ⌊m/2⌋` of them are
/// `>= w`, which lets a branch be cut as soon as the pairs still open can
/// no longer supply enough heavy pairs.
pub fn pseudo_census(g: &Graph, k: usize, threshold: f64) -> Result<ParticipationTable> {
    check_order(g, k)?;
    if !threshold.is_finite() || threshold < 0.0 {
        return Err(Error::InvalidThreshold(threshold));
    }
    let n = g.n();
    let mut positive = BitMatrix::new(n);
    // with a zero threshold every pair, present or not, is heavy
    let mut heavy = (threshold > 0.0).then(|| BitMatrix::new(n));
    for e in g.edges().iter().filter(|e| e.weight > 0.0) {
        positive.set(e.u, e.v);
        positive.set(e.v, e.u);
        if let Some(h) = heavy.as_mut() {
            if e.weight >= threshold {
                h.set(e.u, e.v);
                h.set(e.v, e.u);
            }
        }
    }
    let pairs = k * (k - 1) / 2;
    let ctx = EsuContext {
        g,
        positive: &positive,
        heavy: heavy.as_ref(),
        k,
        pairs,
        needed: pairs - pairs / 2,
    };
    let tally = tally_roots(g, n, |root, tally| ctx.visit_root(root, tally));
    Ok(tally.into_table(g, k, CensusMode::Pseudo { threshold }))
}

struct EsuContext<'a> {
    g: &'a Graph,
    positive: &'a BitMatrix,
    heavy: Option<&'a BitMatrix>,
    k: usize,
    pairs: usize,
    needed: usize,
}

struct Walk {
    sub: Vec<usize>,
    sub_bits: Vec<u64>,
    sub_edges: Vec<usize>,
    // per-depth extension and closed-neighborhood sets
    ext: Vec<u64>,
    nbhd: Vec<u64>,
    above_root: Vec<u64>,
}

impl EsuContext<'_> {
    fn visit_root(&self, root: usize, tally: &mut Tally) {
        let n = self.g.n();
        let words = self.positive.words();
        let above_root = bitset::mask_from(root + 1, n);
        let row = self.positive.row(root);
        let mut walk = Walk {
            sub: vec![root],
            sub_bits: vec![0; words],
            sub_edges: Vec::with_capacity(self.pairs),
            ext: vec![0; words * self.k],
            nbhd: vec![0; words * self.k],
            above_root,
        };
        bitset::insert(&mut walk.sub_bits, root);
        for i in 0..words {
            walk.ext[i] = row[i] & walk.above_root[i];
            walk.nbhd[i] = row[i] | walk.sub_bits[i];
        }
        if bitset::is_empty(&walk.ext[..words]) {
            return;
        }
        self.extend(&mut walk, 1, 0, tally);
    }

    /// Heavy pairs between `w` and the current subset.
    #[inline]
    fn heavy_links(&self, w: usize, sub_bits: &[u64]) -> usize {
        match self.heavy {
            Some(h) => bitset::count_and(h.row(w), sub_bits),
            None => 0,
        }
    }

    #[inline]
    fn feasible(&self, heavy: usize, size: usize) -> bool {
        self.heavy.is_none() || heavy + self.pairs - size * (size - 1) / 2 >= self.needed
    }

    fn extend(&self, walk: &mut Walk, depth: usize, heavy: usize, tally: &mut Tally) {
        let words = self.positive.words();
        let cur = (depth - 1) * words;
        let last = depth + 1 == self.k;
        loop {
            let Some(w) = bitset::pop_first(&mut walk.ext[cur..cur + words]) else {
                return;
            };
            let h = heavy + self.heavy_links(w, &walk.sub_bits);
            if !self.feasible(h, depth + 1) {
                continue;
            }
            let mark = walk.sub_edges.len();
            for i in 0..walk.sub.len() {
                let s = walk.sub[i];
                if self.positive.contains(s, w) {
                    let e = self.g.edge_id(s, w).expect("positive pair is an edge");
                    walk.sub_edges.push(e);
                }
            }
            if last {
                tally.total += 1;
                tally.vertices[w] += 1;
                for &s in &walk.sub {
                    tally.vertices[s] += 1;
                }
                for &e in &walk.sub_edges {
                    tally.edges[e] += 1;
                }
            } else {
                let row = self.positive.row(w);
                let next = cur + words;
                for i in 0..words {
                    walk.ext[next + i] =
                        walk.ext[cur + i] | (row[i] & !walk.nbhd[cur + i] & walk.above_root[i]);
                    walk.nbhd[next + i] = walk.nbhd[cur + i] | row[i];
                }
                walk.sub.push(w);
                bitset::insert(&mut walk.sub_bits, w);
                self.extend(walk, depth + 1, h, tally);
                walk.sub.pop();
                walk.sub_bits[w / 64] &= !(1 << (w % 64));
            }
            walk.sub_edges.truncate(mark);
        }
    }
}
