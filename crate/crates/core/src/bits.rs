//! Small fixed-size bit tables used by the graph types.

/// Symmetric adjacency bitset over `n` vertices: row `u` holds the neighbor
/// set of `u` packed into `stride` words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymAdj {
    n: usize,
    stride: usize,
    words: Vec<u64>,
}

impl SymAdj {
    pub fn new(n: usize) -> Self {
        let stride = n.div_ceil(64);
        SymAdj {
            n,
            stride,
            words: vec![0; n * stride],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.words[u * self.stride..(u + 1) * self.stride]
    }

    #[inline]
    pub fn test(&self, u: usize, v: usize) -> bool {
        self.words[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn set(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.words[u * self.stride + v / 64] |= 1 << (v % 64);
        self.words[v * self.stride + u / 64] |= 1 << (u % 64);
    }

    pub fn clear(&mut self, u: usize, v: usize) {
        self.words[u * self.stride + v / 64] &= !(1 << (v % 64));
        self.words[v * self.stride + u / 64] &= !(1 << (u % 64));
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of unordered adjacent pairs.
    pub fn edge_count(&self) -> usize {
        let total: usize = (0..self.n).map(|u| self.degree(u)).sum();
        total / 2
    }

    /// Writes `row(u) & row(v)` into `out` (caller-provided scratch).
    pub fn and_rows(&self, u: usize, v: usize, out: &mut Vec<u64>) {
        out.clear();
        out.extend(
            self.row(u)
                .iter()
                .zip(self.row(v))
                .map(|(a, b)| a & b),
        );
    }

    pub fn vertices_in(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
        words.iter().enumerate().flat_map(|(wi, &w)| {
            IterOnes { word: w }.map(move |b| wi * 64 + b)
        })
    }
}

struct IterOnes {
    word: u64,
}

impl Iterator for IterOnes {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let b = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(b)
    }
}

/// Iterates the set bit positions of a packed word slice.
pub fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    SymAdj::vertices_in(words)
}

pub fn count_ones(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}
