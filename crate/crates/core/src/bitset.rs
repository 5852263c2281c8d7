//! Fixed-width bitsets used by the enumeration kernels.

/// Row-major square bit matrix; row `v` is the neighborhood of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BitMatrix {
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        BitMatrix {
            words,
            bits: vec![0; words * n],
        }
    }

    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

#[inline]
pub(crate) fn count(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn count_and(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

#[inline]
pub(crate) fn is_empty(set: &[u64]) -> bool {
    set.iter().all(|&w| w == 0)
}

#[inline]
pub(crate) fn insert(set: &mut [u64], v: usize) {
    set[v / 64] |= 1 << (v % 64);
}

/// Removes and returns the lowest set bit.
#[inline]
pub(crate) fn pop_first(set: &mut [u64]) -> Option<usize> {
    for (i, w) in set.iter_mut().enumerate() {
        if *w != 0 {
            let b = w.trailing_zeros() as usize;
            *w &= *w - 1;
            return Some(i * 64 + b);
        }
    }
    None
}

/// Iterates set bits in ascending order.
pub(crate) fn iter(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            }
        })
    })
}

/// Mask with bits `from..n` set.
pub(crate) fn mask_from(from: usize, n: usize) -> Vec<u64> {
    let mut m = vec![0u64; words_for(n)];
    for v in from..n {
        insert(&mut m, v);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pop_and_iter_agree() {
        let mut s = vec![0u64; 3];
        for v in [0, 5, 63, 64, 130] {
            insert(&mut s, v);
        }
        assert_eq!(iter(&s).collect::<Vec<_>>(), vec![0, 5, 63, 64, 130]);
        assert_eq!(count(&s), 5);
        let mut popped = Vec::new();
        while let Some(v) = pop_first(&mut s) {
            popped.push(v);
        }
        assert_eq!(popped, vec![0, 5, 63, 64, 130]);
        assert!(is_empty(&s));
    }

    #[test]
    fn matrix_rows() {
        let mut m = BitMatrix::new(70);
        m.set(3, 69);
        assert!(m.contains(3, 69));
        assert!(!m.contains(69, 3));
        assert_eq!(m.words(), 2);
        assert_eq!(mask_from(68, 70), vec![0, 0b11 << 4]);
    }
}
