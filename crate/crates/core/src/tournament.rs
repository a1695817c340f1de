//! Tournaments, permutations, inversions, and left graphs.
//!
//! A tournament on `n` labeled vertices stores one bit per unordered pair in
//! row-major order `(0,1),(0,2),...,(0,n-1),(1,2),...,(n-2,n-1)`; bit 1 for
//! pair `(i,j)`, `i < j`, means the edge is directed `i -> j`. Completeness
//! and antisymmetry are structural: there is exactly one bit per pair.

use crate::bits::{self, SymAdj};
use crate::error::{Error, Result};
use crate::rng::SplitMix64;

/// Complete antisymmetric orientation on `n` labeled vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    bits: Vec<u64>,
}

/// Row-major index of pair `(i,j)`, `i < j`, in the upper-triangle table.
#[inline]
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Number of unordered pairs on `n` vertices.
#[inline]
pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

impl Tournament {
    fn empty_table(n: usize) -> Result<Tournament> {
        if n == 0 {
            return Err(Error::input("tournament needs at least one vertex"));
        }
        let words = pair_count(n).div_ceil(64);
        Ok(Tournament {
            n,
            bits: vec![0; words.max(1)],
        })
    }

    /// Builds a tournament from its pair-order bit sequence.
    pub fn from_bits(n: usize, bits: &[bool]) -> Result<Tournament> {
        if bits.len() != pair_count(n.max(1)) {
            return Err(Error::format(
                0,
                format!(
                    "expected {} bits for n={}, got {}",
                    pair_count(n.max(1)),
                    n,
                    bits.len()
                ),
            ));
        }
        let mut t = Tournament::empty_table(n)?;
        for (p, &b) in bits.iter().enumerate() {
            if b {
                t.bits[p / 64] |= 1 << (p % 64);
            }
        }
        Ok(t)
    }

    /// The transitive tournament: `i -> j` for all `i < j`.
    pub fn transitive(n: usize) -> Tournament {
        let mut t = Tournament::empty_table(n).expect("positive n");
        for p in 0..pair_count(n) {
            t.bits[p / 64] |= 1 << (p % 64);
        }
        t
    }

    /// Seeded random tournament: each pair's direction is one fair coin flip
    /// from a [`SplitMix64`] stream, so `(n, seed)` pins the result.
    pub fn random(n: usize, seed: u64) -> Tournament {
        let mut t = Tournament::empty_table(n).expect("positive n");
        let mut rng = SplitMix64::new(seed);
        for p in 0..pair_count(n) {
            if rng.next_bool() {
                t.bits[p / 64] |= 1 << (p % 64);
            }
        }
        t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn bit(&self, p: usize) -> bool {
        self.bits[p / 64] >> (p % 64) & 1 == 1
    }

    /// True iff the edge between `u` and `v` is directed `u -> v`.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert_ne!(u, v);
        if u < v {
            self.bit(pair_index(self.n, u, v))
        } else {
            !self.bit(pair_index(self.n, v, u))
        }
    }

    fn flip_pair(&mut self, i: usize, j: usize) {
        let p = pair_index(self.n, i.min(j), i.max(j));
        self.bits[p / 64] ^= 1 << (p % 64);
    }

    /// Inversion: reverses every edge with both endpoints in `step`.
    /// All other pairs are untouched.
    pub fn invert(&self, step: &InversionStep) -> Result<Tournament> {
        step.check_range(self.n)?;
        let mut out = self.clone();
        let vs = step.verts();
        for a in 0..vs.len() {
            for b in a + 1..vs.len() {
                out.flip_pair(vs[a], vs[b]);
            }
        }
        Ok(out)
    }

    /// Applies a whole sequence of inversions. Order is immaterial: the joint
    /// effect flips each pair once per step containing both endpoints.
    pub fn invert_all<'a>(
        &self,
        steps: impl IntoIterator<Item = &'a InversionStep>,
    ) -> Result<Tournament> {
        let mut out = self.clone();
        for s in steps {
            out = out.invert(s)?;
        }
        Ok(out)
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.bit(pair_index(self.n, i, j)) {
                    deg[i] += 1;
                } else {
                    deg[j] += 1;
                }
            }
        }
        deg
    }

    /// A tournament is acyclic iff it is transitive iff its out-degree
    /// sequence is a permutation of `{0,...,n-1}`.
    pub fn is_acyclic(&self) -> bool {
        let mut seen = vec![false; self.n];
        for d in self.out_degrees() {
            if seen[d] {
                return false;
            }
            seen[d] = true;
        }
        true
    }

    /// The left graph `T_L(pi)`: unordered pairs whose tournament edge runs
    /// from the earlier position to the later one under `pi`. The complement
    /// within the pair set is `T_L(pi reversed) = T_R(pi)`.
    pub fn left_graph(&self, pi: &Permutation) -> LeftGraph {
        assert_eq!(pi.n(), self.n, "permutation size mismatch");
        let mut adj = SymAdj::new(self.n);
        let mut count = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                let forward = self.bit(pair_index(self.n, i, j));
                let (tail, head) = if forward { (i, j) } else { (j, i) };
                if pi.pos(tail) < pi.pos(head) {
                    adj.set(i, j);
                    count += 1;
                }
            }
        }
        LeftGraph {
            adj,
            edge_count: count,
        }
    }

    /// Relabels vertices: vertex `v` becomes `sigma(v)`.
    pub fn relabel(&self, sigma: &Permutation) -> Tournament {
        assert_eq!(sigma.n(), self.n);
        let mut out = Tournament::empty_table(self.n).expect("positive n");
        for i in 0..self.n {
            for j in i + 1..self.n {
                let (ni, nj) = (sigma.pos(i), sigma.pos(j));
                let forward = self.bit(pair_index(self.n, i, j));
                let edge_ni_to_nj = if ni < nj { forward } else { !forward };
                if edge_ni_to_nj {
                    out.flip_pair(ni, nj);
                }
            }
        }
        out
    }

    /// Sub-tournament induced by `verts`, relabeled `0..verts.len()` in the
    /// given order.
    pub fn induced(&self, verts: &[usize]) -> Tournament {
        let mut out = Tournament::empty_table(verts.len()).expect("nonempty verts");
        for a in 0..verts.len() {
            for b in a + 1..verts.len() {
                if self.has_edge(verts[a], verts[b]) {
                    out.flip_pair(a, b);
                }
            }
        }
        out
    }

    /// Bit table packed into one integer, most significant bit first, so
    /// integer order equals lexicographic order of the bit string. Requires
    /// at most 64 pairs (n <= 11).
    pub fn bit_key(&self) -> Result<u64> {
        let pairs = pair_count(self.n);
        if pairs > 64 {
            return Err(Error::capacity(format!(
                "bit key needs n <= 11, got n={}",
                self.n
            )));
        }
        let mut key = 0u64;
        for p in 0..pairs {
            key = key << 1 | self.bit(p) as u64;
        }
        Ok(key)
    }

    /// Inverse of [`bit_key`](Self::bit_key).
    pub fn from_bit_key(n: usize, key: u64) -> Result<Tournament> {
        let pairs = pair_count(n.max(1));
        if pairs > 64 {
            return Err(Error::capacity(format!("bit key needs n <= 11, got n={n}")));
        }
        let bits: Vec<bool> = (0..pairs).map(|p| key >> (pairs - 1 - p) & 1 == 1).collect();
        Tournament::from_bits(n, &bits)
    }

    /// The '0'/'1' pair-order bit string.
    pub fn bit_string(&self) -> String {
        (0..pair_count(self.n))
            .map(|p| if self.bit(p) { '1' } else { '0' })
            .collect()
    }
}

/// Bijection `[n] -> [n]`; `pos(v)` is the position assigned to vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    pos: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            pos: (0..n).collect(),
        }
    }

    /// Validates that `pos` is a bijection onto `{0,...,n-1}`.
    pub fn from_pos(pos: Vec<usize>) -> Result<Permutation> {
        let n = pos.len();
        let mut seen = vec![false; n];
        for &p in &pos {
            if p >= n || seen[p] {
                return Err(Error::input(format!(
                    "positions are not a bijection onto 0..{n}"
                )));
            }
            seen[p] = true;
        }
        Ok(Permutation { pos })
    }

    /// Uniform random permutation by Fisher-Yates on the supplied stream.
    pub fn random(n: usize, rng: &mut SplitMix64) -> Permutation {
        let mut pos: Vec<usize> = (0..n).collect();
        rng.shuffle(&mut pos);
        Permutation { pos }
    }

    pub fn n(&self) -> usize {
        self.pos.len()
    }

    #[inline]
    pub fn pos(&self, v: usize) -> usize {
        self.pos[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.pos
    }

    /// Order reversal: position `p` becomes `n-1-p`.
    pub fn reversed(&self) -> Permutation {
        let n = self.n();
        Permutation {
            pos: self.pos.iter().map(|&p| n - 1 - p).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (v, &p) in self.pos.iter().enumerate() {
            inv[p] = v;
        }
        Permutation { pos: inv }
    }

    /// Composition `(self ∘ inner)(x) = self(inner(x))`: `inner` assigns
    /// provisional positions, `self` relabels positions.
    pub fn compose(&self, inner: &Permutation) -> Permutation {
        assert_eq!(self.n(), inner.n());
        Permutation {
            pos: (0..self.n()).map(|x| self.pos[inner.pos[x]]).collect(),
        }
    }

    /// Vertices listed by increasing position.
    pub fn order(&self) -> Vec<usize> {
        self.inverse().pos
    }
}

/// One inversion: a set of at least two distinct vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InversionStep {
    verts: Vec<usize>,
}

impl InversionStep {
    pub fn new(mut verts: Vec<usize>) -> Result<InversionStep> {
        verts.sort_unstable();
        if verts.len() < 2 {
            return Err(Error::input("inversion set needs at least two vertices"));
        }
        if verts.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::input("inversion set has duplicate vertices"));
        }
        Ok(InversionStep { verts })
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn verts(&self) -> &[usize] {
        &self.verts
    }

    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.verts.last() {
            Some(&max) if max >= n => Err(Error::input(format!(
                "inversion set vertex {max} out of range for n={n}"
            ))),
            _ => Ok(()),
        }
    }
}

/// Ordered list of inversions with a cap on the step size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecyclingSequence {
    pub steps: Vec<InversionStep>,
    pub k_cap: usize,
}

impl DecyclingSequence {
    pub fn new(k_cap: usize, steps: Vec<InversionStep>) -> Result<DecyclingSequence> {
        if let Some(s) = steps.iter().find(|s| s.len() > k_cap) {
            return Err(Error::input(format!(
                "step of size {} exceeds cap k={k_cap}",
                s.len()
            )));
        }
        Ok(DecyclingSequence { steps, k_cap })
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Undirected view of the tournament edges going "left to right" under some
/// ordering; each stored pair is a tournament edge whose tail precedes its
/// head.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftGraph {
    adj: SymAdj,
    edge_count: usize,
}

impl LeftGraph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<LeftGraph> {
        let mut adj = SymAdj::new(n);
        let mut count = 0;
        for &(u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::input(format!("bad edge ({u},{v}) for n={n}")));
            }
            if !adj.test(u, v) {
                adj.set(u, v);
                count += 1;
            }
        }
        Ok(LeftGraph {
            adj,
            edge_count: count,
        })
    }

    pub fn complete(n: usize) -> LeftGraph {
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        LeftGraph::from_edges(n, &edges).expect("valid")
    }

    pub fn n(&self) -> usize {
        self.adj.n()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.test(u, v)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj.degree(u)
    }

    pub(crate) fn row(&self, u: usize) -> &[u64] {
        self.adj.row(u)
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.adj.row(u))
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        debug_assert!(self.adj.test(u, v));
        self.adj.clear(u, v);
        self.edge_count -= 1;
    }

    /// Unordered edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Pair-order bit table as an integer key (n <= 11), MSB first.
    pub fn bit_key(&self) -> Result<u64> {
        let n = self.n();
        if pair_count(n) > 64 {
            return Err(Error::capacity(format!("bit key needs n <= 11, got n={n}")));
        }
        let mut key = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                key = key << 1 | self.adj.test(i, j) as u64;
            }
        }
        Ok(key)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_str(n: usize, s: &str) -> Tournament {
        let bits: Vec<bool> = s.chars().map(|c| c == '1').collect();
        Tournament::from_bits(n, &bits).unwrap()
    }

    #[test]
    fn from_bits_decodes_transitive() {
        // n=3, bits=110: edges 0->1, 0->2, 2->1 — transitive.
        let t = from_str(3, "110");
        assert!(t.has_edge(0, 1) && t.has_edge(0, 2) && t.has_edge(2, 1));
        assert!(t.is_acyclic());
    }

    #[test]
    fn from_bits_decodes_three_cycle() {
        // n=3, bits=101: edges 0->1, 2->0, 1->2 — the directed 3-cycle.
        let t = from_str(3, "101");
        assert!(t.has_edge(0, 1) && t.has_edge(2, 0) && t.has_edge(1, 2));
        assert!(!t.is_acyclic());
    }

    #[test]
    fn from_bits_length_mismatch() {
        let bits = [true, false, true];
        assert!(matches!(
            Tournament::from_bits(2, &bits),
            Err(Error::Format { .. })
        ));
    }

    #[test]
    fn random_is_deterministic() {
        assert_eq!(Tournament::random(9, 5), Tournament::random(9, 5));
        assert_ne!(Tournament::random(9, 5), Tournament::random(9, 6));
    }

    #[test]
    fn random_single_vertex_has_no_edges() {
        let t = Tournament::random(1, 99);
        assert_eq!(t.out_degrees(), vec![0]);
        assert!(t.is_acyclic());
    }

    #[test]
    fn random_density_concentrates() {
        // Binomial concentration at n=10000: observed fraction of set bits
        // stays within 0.5 +- 0.02 (the true sd is ~7e-5).
        let t = Tournament::random(10_000, 12345);
        let set: usize = (0..pair_count(10_000)).filter(|&p| t.bit(p)).count();
        let frac = set as f64 / pair_count(10_000) as f64;
        assert!((frac - 0.5).abs() <= 0.02, "density {frac}");
    }

    #[test]
    fn invert_full_three_cycle_reverses_it() {
        let t = from_str(3, "101"); // 0->1->2->0
        let x = InversionStep::new(vec![0, 1, 2]).unwrap();
        let r = t.invert(&x).unwrap();
        assert!(r.has_edge(1, 0) && r.has_edge(2, 1) && r.has_edge(0, 2));
        assert!(!r.is_acyclic());
    }

    #[test]
    fn invert_pair_flips_only_that_edge() {
        let t = Tournament::random(8, 3);
        let x = InversionStep::new(vec![2, 5]).unwrap();
        let r = t.invert(&x).unwrap();
        for i in 0..8 {
            for j in i + 1..8 {
                let changed = (i, j) == (2, 5);
                assert_eq!(t.has_edge(i, j) != r.has_edge(i, j), changed);
            }
        }
    }

    #[test]
    fn invert_out_of_range_vertex() {
        let t = Tournament::random(4, 0);
        let x = InversionStep::new(vec![1, 5]).unwrap();
        assert!(matches!(t.invert(&x), Err(Error::Input(_))));
    }

    #[test]
    fn invert_is_involution_on_seeded_instances() {
        for seed in 0..200 {
            let t = Tournament::random(7, seed);
            let mut rng = SplitMix64::new(seed ^ 0xABCD);
            let size = 2 + rng.next_below(5) as usize;
            let mut vs: Vec<usize> = (0..7).collect();
            rng.shuffle(&mut vs);
            vs.truncate(size);
            let x = InversionStep::new(vs).unwrap();
            assert_eq!(t.invert(&x).unwrap().invert(&x).unwrap(), t);
        }
    }

    #[test]
    fn left_graph_of_transitive_is_complete_or_empty() {
        let t = Tournament::transitive(6);
        let topo = Permutation::identity(6);
        assert_eq!(t.left_graph(&topo).edge_count(), pair_count(6));
        assert_eq!(t.left_graph(&topo.reversed()).edge_count(), 0);
    }

    #[test]
    fn left_and_right_partition_pairs() {
        for seed in 0..100 {
            let t = Tournament::random(9, seed);
            let mut rng = SplitMix64::new(seed);
            let pi = Permutation::random(9, &mut rng);
            let l = t.left_graph(&pi);
            let r = t.left_graph(&pi.reversed());
            assert_eq!(l.edge_count() + r.edge_count(), pair_count(9));
            for i in 0..9 {
                for j in i + 1..9 {
                    assert_ne!(l.has_edge(i, j), r.has_edge(i, j));
                }
            }
        }
    }

    #[test]
    fn acyclic_iff_no_directed_triangle_small() {
        // Exhaustive agreement with a directed-triangle scan for n <= 5.
        for n in 1..=5usize {
            for key in 0u64..1 << pair_count(n) {
                let t = Tournament::from_bit_key(n, key).unwrap();
                let mut has_tri = false;
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            if a != b
                                && b != c
                                && a != c
                                && t.has_edge(a, b)
                                && t.has_edge(b, c)
                                && t.has_edge(c, a)
                            {
                                has_tri = true;
                            }
                        }
                    }
                }
                assert_eq!(t.is_acyclic(), !has_tri, "n={n} key={key}");
            }
        }
    }

    #[test]
    fn relabel_keeps_isomorphism_invariants() {
        let t = Tournament::random(7, 11);
        let mut rng = SplitMix64::new(1);
        let sigma = Permutation::random(7, &mut rng);
        let r = t.relabel(&sigma);
        let mut d1 = t.out_degrees();
        let mut d2 = r.out_degrees();
        d1.sort_unstable();
        d2.sort_unstable();
        assert_eq!(d1, d2);
        for u in 0..7 {
            for v in 0..7 {
                if u != v {
                    assert_eq!(t.has_edge(u, v), r.has_edge(sigma.pos(u), sigma.pos(v)));
                }
            }
        }
    }

    #[test]
    fn bit_key_round_trip() {
        for seed in 0..50 {
            let t = Tournament::random(6, seed);
            let k = t.bit_key().unwrap();
            assert_eq!(Tournament::from_bit_key(6, k).unwrap(), t);
        }
    }

    #[test]
    fn induced_transversal_keeps_edges() {
        let t = Tournament::random(8, 2);
        let verts = [1, 4, 6];
        let s = t.induced(&verts);
        for a in 0..3 {
            for b in 0..3 {
                if a != b {
                    assert_eq!(s.has_edge(a, b), t.has_edge(verts[a], verts[b]));
                }
            }
        }
    }

    #[test]
    fn permutation_compose_and_inverse() {
        let p = Permutation::from_pos(vec![2, 0, 1]).unwrap();
        let q = Permutation::from_pos(vec![1, 2, 0]).unwrap();
        let pq = p.compose(&q);
        for x in 0..3 {
            assert_eq!(pq.pos(x), p.pos(q.pos(x)));
        }
        let id = p.compose(&p.inverse());
        assert_eq!(id, Permutation::identity(3));
    }

    #[test]
    fn step_rejects_duplicates_and_singletons() {
        assert!(InversionStep::new(vec![3]).is_err());
        assert!(InversionStep::new(vec![1, 1]).is_err());
        assert!(InversionStep::new(vec![4, 1]).is_ok());
    }
}
