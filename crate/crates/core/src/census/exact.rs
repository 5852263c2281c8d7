use super::{check_order, tally_roots, CensusMode, ParticipationTable, Tally};
use crate::bitset::{self, BitMatrix};
use crate::error::Result;
use crate::graph::Graph;

/// Smallest-last (degeneracy) ordering: vertices in the order they are
/// removed when repeatedly deleting a vertex of minimum remaining degree.
pub fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut degree = g.degrees();
    let max_deg = degree.iter().copied().max().unwrap_or(0);
    // bucket sort by degree; `pos`/`vert` give a degree-sorted permutation
    let mut bin = vec![0usize; max_deg + 2];
    for &d in &degree {
        bin[d] += 1;
    }
    let mut start = 0;
    for b in bin.iter_mut() {
        let c = *b;
        *b = start;
        start += c;
    }
    let mut pos = vec![0usize; n];
    let mut vert = vec![0usize; n];
    for v in 0..n {
        pos[v] = bin[degree[v]];
        vert[pos[v]] = v;
        bin[degree[v]] += 1;
    }
    for d in (1..bin.len()).rev() {
        bin[d] = bin[d - 1];
    }
    bin[0] = 0;
    for i in 0..n {
        let v = vert[i];
        for &(u, _) in g.incident(v) {
            if degree[u] > degree[v] {
                let du = degree[u];
                let pu = pos[u];
                let pw = bin[du];
                let w = vert[pw];
                if u != w {
                    pos[u] = pw;
                    vert[pu] = w;
                    pos[w] = pu;
                    vert[pw] = u;
                }
                bin[du] += 1;
                degree[u] -= 1;
            }
        }
    }
    vert
}

/// Counts every `k`-subset inducing a complete subgraph, with per-vertex
/// and per-edge participation. Runs on the current rayon thread pool.
pub fn exact_census(g: &Graph, k: usize) -> Result<ParticipationTable> {
    check_order(g, k)?;
    let order = degeneracy_order(g);
    let n = g.n();
    let mut rank = vec![0usize; n];
    for (p, &v) in order.iter().enumerate() {
        rank[v] = p;
    }
    // forward[p]: positions q > p adjacent to position p
    let mut forward = BitMatrix::new(n);
    for e in g.edges() {
        let (a, b) = (rank[e.u], rank[e.v]);
        forward.set(a.min(b), a.max(b));
    }
    let ctx = CliqueContext {
        g,
        order: &order,
        forward: &forward,
        k,
    };
    let tally = tally_roots(g, n, |root, tally| ctx.visit_root(root, tally));
    Ok(tally.into_table(g, k, CensusMode::Exact))
}

struct CliqueContext<'a> {
    g: &'a Graph,
    order: &'a [usize],
    forward: &'a BitMatrix,
    k: usize,
}

struct Walk {
    // vertices (original ids) of the current partial clique
    stack: Vec<usize>,
    // edge ids inside the partial clique
    stack_edges: Vec<usize>,
    // candidate sets, one `words`-wide slot per depth
    cands: Vec<u64>,
}

impl CliqueContext<'_> {
    fn visit_root(&self, root: usize, tally: &mut Tally) {
        let words = self.forward.words();
        let first = self.forward.row(root);
        if bitset::count(first) + 1 < self.k {
            return;
        }
        let mut walk = Walk {
            stack: vec![self.order[root]],
            stack_edges: Vec::with_capacity(self.k * self.k),
            cands: vec![0; words * self.k],
        };
        walk.cands[..words].copy_from_slice(first);
        self.extend(&mut walk, 1, tally);
    }

    fn extend(&self, walk: &mut Walk, depth: usize, tally: &mut Tally) {
        let words = self.forward.words();
        let cur = (depth - 1) * words;
        if depth + 1 == self.k {
            let cand = &walk.cands[cur..cur + words];
            let c = bitset::count(cand) as u64;
            if c == 0 {
                return;
            }
            tally.total += c;
            for &v in &walk.stack {
                tally.vertices[v] += c;
            }
            for &e in &walk.stack_edges {
                tally.edges[e] += c;
            }
            for q in bitset::iter(cand) {
                let v = self.order[q];
                tally.vertices[v] += 1;
                for &s in &walk.stack {
                    tally.edges[self.edge(s, v)] += 1;
                }
            }
            return;
        }
        // deeper calls only write slots > depth - 1, so slot `cur` is stable
        for wi in 0..words {
            let mut bits = walk.cands[cur + wi];
            while bits != 0 {
                let q = wi * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let row = self.forward.row(q);
                let mut size = 0;
                for i in 0..words {
                    let x = walk.cands[cur + i] & row[i];
                    walk.cands[cur + words + i] = x;
                    size += x.count_ones() as usize;
                }
                if depth + 1 + size < self.k {
                    continue;
                }
                let v = self.order[q];
                let mark = walk.stack_edges.len();
                for i in 0..walk.stack.len() {
                    let e = self.edge(walk.stack[i], v);
                    walk.stack_edges.push(e);
                }
                walk.stack.push(v);
                self.extend(walk, depth + 1, tally);
                walk.stack.pop();
                walk.stack_edges.truncate(mark);
            }
        }
    }

    #[inline]
    fn edge(&self, a: usize, b: usize) -> usize {
        self.g.edge_id(a, b).expect("clique pair is an edge")
    }
}
