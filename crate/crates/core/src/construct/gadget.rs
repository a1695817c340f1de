//! Local inversion gadgets.
//!
//! A 4-cycle of the left graph can be reversed by inverting two 3-sets: the
//! overlap flips twice and is restored, so exactly the four cycle edges
//! change. Likewise a complete bipartite subgraph (`K_{k,k}` for even `k`,
//! `K_{k+1,k-1}` for odd `k`) is reversed by four k-sets built from the
//! half-parts: within-part pairs flip twice, cross pairs exactly once.

use crate::bits;
use crate::error::{Error, Result};
use crate::tournament::{InversionStep, LeftGraph, Permutation, Tournament};

/// The three ways a left-graph 4-cycle can sit on position-sorted vertices
/// `a, b, c, d`: which two of the six pairs are the missing chords.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FourCycleCase {
    /// Cycle edges `{ab, ac, bd, cd}` (chords `ad`, `bc`).
    Case1,
    /// Cycle edges `{ab, bc, cd, ad}` (chords `ac`, `bd`).
    Case2,
    /// Cycle edges `{ac, bc, ad, bd}` (chords `ab`, `cd`).
    Case3,
}

/// A 4-cycle of a left graph, with vertices sorted by position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourCycleWitness {
    /// Position-sorted: `pos(verts[0]) < ... < pos(verts[3])`.
    pub verts: [usize; 4],
    /// The four unordered cycle pairs.
    pub cycle_edges: [(usize, usize); 4],
    pub case: FourCycleCase,
}

impl FourCycleCase {
    /// Cycle pairs as index pairs into the sorted vertex quadruple.
    fn pattern(self) -> [(usize, usize); 4] {
        match self {
            FourCycleCase::Case1 => [(0, 1), (0, 2), (1, 3), (2, 3)],
            FourCycleCase::Case2 => [(0, 1), (1, 2), (2, 3), (0, 3)],
            FourCycleCase::Case3 => [(0, 2), (1, 2), (0, 3), (1, 3)],
        }
    }

    /// The two 3-sets (as indices into the sorted quadruple) whose joint
    /// inversion reverses exactly the cycle.
    fn triple_indices(self) -> ([usize; 3], [usize; 3]) {
        match self {
            FourCycleCase::Case1 => ([0, 1, 2], [1, 2, 3]),
            FourCycleCase::Case2 => ([0, 1, 2], [0, 2, 3]),
            FourCycleCase::Case3 => ([0, 1, 2], [0, 1, 3]),
        }
    }
}

impl FourCycleWitness {
    /// Builds the witness for a cycle `s0 - s1 - s2 - s3 - s0` given the
    /// sorted quadruple and the set of cycle pairs.
    fn from_sorted(verts: [usize; 4], pairs: &[(usize, usize); 4]) -> Result<FourCycleWitness> {
        let has = |i: usize, j: usize| {
            pairs
                .iter()
                .any(|&(u, v)| (u, v) == (verts[i], verts[j]) || (v, u) == (verts[i], verts[j]))
        };
        for case in [
            FourCycleCase::Case1,
            FourCycleCase::Case2,
            FourCycleCase::Case3,
        ] {
            if case.pattern().iter().all(|&(i, j)| has(i, j)) {
                let cycle_edges = case.pattern().map(|(i, j)| {
                    let (u, v) = (verts[i], verts[j]);
                    (u.min(v), u.max(v))
                });
                return Ok(FourCycleWitness {
                    verts,
                    cycle_edges,
                    case,
                });
            }
        }
        Err(Error::input("pairs do not form a 4-cycle on the vertices"))
    }
}

/// Finds any (not necessarily induced) 4-cycle of `g`, vertices sorted by
/// `pi`-position, scanning vertex pairs for two common neighbors. Returns
/// `None` only when `g` has no 4-cycle at all.
pub fn find_four_cycle(g: &LeftGraph, pi: &Permutation) -> Option<FourCycleWitness> {
    let n = g.n();
    let mut scratch = Vec::new();
    for u in 0..n {
        for w in u + 1..n {
            scratch.clear();
            scratch.extend(
                g.row(u)
                    .iter()
                    .zip(g.row(w))
                    .map(|(a, b)| a & b),
            );
            let mut common = bits::ones(&scratch);
            let (Some(a), Some(b)) = (common.next(), common.next()) else {
                continue;
            };
            // Cycle u - a - w - b - u.
            let mut verts = [u, a, w, b];
            verts.sort_unstable_by_key(|&v| pi.pos(v));
            let pairs = [
                (u.min(a), u.max(a)),
                (a.min(w), a.max(w)),
                (w.min(b), w.max(b)),
                (b.min(u), b.max(u)),
            ];
            return Some(
                FourCycleWitness::from_sorted(verts, &pairs)
                    .expect("two common neighbors always close a 4-cycle"),
            );
        }
    }
    None
}

/// The two 3-sets whose joint inversion reverses exactly the witnessed
/// 4-cycle of `t` and nothing else.
///
/// Fails if the witness is inconsistent with `t`: vertices must be strictly
/// position-sorted, the cycle pairs must match the case pattern, and every
/// cycle edge must run from the earlier to the later position in `t`.
pub fn four_cycle_pair(
    t: &Tournament,
    pi: &Permutation,
    w: &FourCycleWitness,
) -> Result<(InversionStep, InversionStep)> {
    let n = t.n();
    if w.verts.iter().any(|&v| v >= n) {
        return Err(Error::input("witness vertex out of range"));
    }
    if !w.verts.windows(2).all(|p| pi.pos(p[0]) < pi.pos(p[1])) {
        return Err(Error::input("witness vertices are not position-sorted"));
    }
    let expected = w.case.pattern().map(|(i, j)| {
        let (u, v) = (w.verts[i], w.verts[j]);
        (u.min(v), u.max(v))
    });
    let mut claimed = w.cycle_edges;
    claimed.sort_unstable();
    let mut expect_sorted = expected;
    expect_sorted.sort_unstable();
    if claimed != expect_sorted {
        return Err(Error::input("cycle edges do not match the case pattern"));
    }
    for &(u, v) in &expected {
        let (tail, head) = if pi.pos(u) < pi.pos(v) { (u, v) } else { (v, u) };
        if !t.has_edge(tail, head) {
            return Err(Error::input(
                "witness edge is not a left edge of the tournament",
            ));
        }
    }
    let (xi, yi) = w.case.triple_indices();
    let x = InversionStep::new(xi.iter().map(|&i| w.verts[i]).collect())?;
    let y = InversionStep::new(yi.iter().map(|&i| w.verts[i]).collect())?;
    Ok((x, y))
}

/// A complete bipartite subgraph of a left graph; `left_part` is the larger
/// side for odd `k` (sizes `(k+1, k-1)`), both sides have size `k` for even
/// `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicliqueWitness {
    pub left_part: Vec<usize>,
    pub right_part: Vec<usize>,
}

impl BicliqueWitness {
    /// Validates that every cross pair is an edge of `g` and the parts are
    /// disjoint.
    pub fn new(left_part: Vec<usize>, right_part: Vec<usize>, g: &LeftGraph) -> Result<Self> {
        for &u in &left_part {
            if right_part.contains(&u) {
                return Err(Error::input("biclique parts overlap"));
            }
            for &v in &right_part {
                if !g.has_edge(u, v) {
                    return Err(Error::input(format!("missing cross edge ({u},{v})")));
                }
            }
        }
        Ok(BicliqueWitness {
            left_part,
            right_part,
        })
    }
}

/// The four k-sets whose joint inversion reverses exactly the cross edges
/// of the biclique: halves `A, B` of the larger part and `C, D` of the
/// smaller part combine as `A∪C, A∪D, B∪C, B∪D`.
pub fn biclique_quartet(k: usize, w: &BicliqueWitness) -> Result<[InversionStep; 4]> {
    let (big, small) = (&w.left_part, &w.right_part);
    let shape_ok = if k >= 4 && k % 2 == 0 {
        big.len() == k && small.len() == k
    } else if k >= 5 && k % 2 == 1 {
        big.len() == k + 1 && small.len() == k - 1
    } else {
        return Err(Error::input("biclique gadget needs k >= 4"));
    };
    if !shape_ok {
        return Err(Error::input(format!(
            "part sizes ({}, {}) do not fit k={k}",
            big.len(),
            small.len()
        )));
    }
    let (a, b) = big.split_at(big.len() / 2);
    let (c, d) = small.split_at(small.len() / 2);
    let join = |x: &[usize], y: &[usize]| {
        InversionStep::new(x.iter().chain(y).copied().collect())
    };
    Ok([join(a, c)?, join(a, d)?, join(b, c)?, join(b, d)?])
}

/// Searches `g` for a biclique with the given part sizes by enumerating
/// candidate small parts and intersecting neighborhoods. `budget` caps the
/// number of search-tree expansions; on exhaustion the search reports
/// `None` (the caller falls back to smaller gadgets).
pub fn find_biclique(
    g: &LeftGraph,
    big_size: usize,
    small_size: usize,
    budget: &mut usize,
) -> Option<BicliqueWitness> {
    let n = g.n();
    if big_size + small_size > n {
        return None;
    }
    let words = g.row(0).len();
    let full: Vec<u64> = (0..words)
        .map(|w| {
            let hi = n - w * 64;
            if hi >= 64 {
                u64::MAX
            } else {
                (1u64 << hi) - 1
            }
        })
        .collect();

    fn dfs(
        g: &LeftGraph,
        start: usize,
        chosen: &mut Vec<usize>,
        common: &[u64],
        big_size: usize,
        small_size: usize,
        budget: &mut usize,
    ) -> Option<BicliqueWitness> {
        if bits::count_ones(common) < big_size {
            return None;
        }
        if chosen.len() == small_size {
            let big: Vec<usize> = bits::ones(common).take(big_size).collect();
            let w = BicliqueWitness::new(big, chosen.clone(), g)
                .expect("common neighborhood gives all cross edges");
            return Some(w);
        }
        for v in start..g.n() {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            let next: Vec<u64> = common
                .iter()
                .zip(g.row(v))
                .map(|(a, b)| a & b)
                .collect();
            chosen.push(v);
            if let Some(w) = dfs(g, v + 1, chosen, &next, big_size, small_size, budget) {
                return Some(w);
            }
            chosen.pop();
        }
        None
    }

    let mut chosen = Vec::with_capacity(small_size);
    dfs(g, 0, &mut chosen, &full, big_size, small_size, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use crate::Tournament;

    /// Forces the four cycle edges of `case` onto a random tournament so the
    /// sorted quadruple `[0,1,2,3]` under the identity ordering witnesses it.
    fn planted_instance(case: FourCycleCase, seed: u64) -> (Tournament, FourCycleWitness) {
        let mut t = Tournament::random(8, seed);
        let verts = [0usize, 1, 2, 3];
        for (i, j) in case.pattern() {
            let (u, v) = (verts[i], verts[j]);
            if !t.has_edge(u, v) {
                t = t
                    .invert(&InversionStep::new(vec![u, v]).unwrap())
                    .unwrap();
            }
        }
        let cycle_edges = case.pattern().map(|(i, j)| (verts[i], verts[j]));
        let w = FourCycleWitness {
            verts,
            cycle_edges,
            case,
        };
        (t, w)
    }

    #[test]
    fn gadget_flips_exactly_the_cycle_for_all_cases() {
        let pi = Permutation::identity(8);
        for case in [
            FourCycleCase::Case1,
            FourCycleCase::Case2,
            FourCycleCase::Case3,
        ] {
            for seed in 0..50 {
                let (t, w) = planted_instance(case, seed);
                let (x, y) = four_cycle_pair(&t, &pi, &w).unwrap();
                let r = t.invert_all([&x, &y]).unwrap();
                let mut flipped = Vec::new();
                for i in 0..8 {
                    for j in i + 1..8 {
                        if t.has_edge(i, j) != r.has_edge(i, j) {
                            flipped.push((i, j));
                        }
                    }
                }
                let mut want: Vec<(usize, usize)> = w.cycle_edges.to_vec();
                want.sort_unstable();
                assert_eq!(flipped, want, "case {case:?} seed {seed}");
            }
        }
    }

    #[test]
    fn paper_case_triples() {
        // Case 1 gives X={a,b,c}, Y={b,c,d}; case 2 gives Y={a,c,d};
        // case 3 gives Y={a,b,d}.
        let pi = Permutation::identity(8);
        let cases = [
            (FourCycleCase::Case1, vec![1, 2, 3]),
            (FourCycleCase::Case2, vec![0, 2, 3]),
            (FourCycleCase::Case3, vec![0, 1, 3]),
        ];
        for (case, want_y) in cases {
            let (t, w) = planted_instance(case, 7);
            let (x, y) = four_cycle_pair(&t, &pi, &w).unwrap();
            assert_eq!(x.verts(), &[0, 1, 2]);
            assert_eq!(y.verts(), want_y.as_slice());
        }
    }

    #[test]
    fn inconsistent_witness_is_rejected() {
        let (t, mut w) = planted_instance(FourCycleCase::Case1, 3);
        let pi = Permutation::identity(8);
        // Break one claimed edge.
        w.cycle_edges[0] = (0, 3);
        assert!(four_cycle_pair(&t, &pi, &w).is_err());
        // Reverse one tournament edge out from under the witness.
        let (t2, w2) = planted_instance(FourCycleCase::Case1, 3);
        let broken = t2
            .invert(&InversionStep::new(vec![0, 1]).unwrap())
            .unwrap();
        assert!(four_cycle_pair(&broken, &pi, &w2).is_err());
    }

    #[test]
    fn k4_contains_a_cycle_and_trees_do_not() {
        let k4 = LeftGraph::complete(4);
        let pi = Permutation::identity(4);
        assert!(find_four_cycle(&k4, &pi).is_some());

        let tree =
            LeftGraph::from_edges(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        let pi6 = Permutation::identity(6);
        assert!(find_four_cycle(&tree, &pi6).is_none());
    }

    #[test]
    fn absence_matches_exhaustive_scan() {
        // Independent oracle: check every 4-subset for a spanning cycle.
        let mut rng = SplitMix64::new(99);
        for trial in 0..200u64 {
            let n = 4 + (trial % 7) as usize; // 4..=10
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.next_below(3) == 0 {
                        edges.push((i, j));
                    }
                }
            }
            let g = LeftGraph::from_edges(n, &edges).unwrap();
            let pi = Permutation::identity(n);

            let mut exhaustive = false;
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        for d in c + 1..n {
                            let quad = [a, b, c, d];
                            let e = |i: usize, j: usize| g.has_edge(quad[i], quad[j]);
                            // Three possible spanning cycles on four vertices.
                            if (e(0, 1) && e(1, 2) && e(2, 3) && e(0, 3))
                                || (e(0, 1) && e(1, 3) && e(2, 3) && e(0, 2))
                                || (e(0, 2) && e(1, 2) && e(1, 3) && e(0, 3))
                            {
                                exhaustive = true;
                            }
                        }
                    }
                }
            }
            assert_eq!(
                find_four_cycle(&g, &pi).is_some(),
                exhaustive,
                "trial {trial}"
            );
        }
    }

    #[test]
    fn quartet_even_shape_matches_reference_split() {
        let g = biclique_graph(4, 4);
        let w = BicliqueWitness::new(vec![0, 1, 2, 3], vec![4, 5, 6, 7], &g).unwrap();
        let steps = biclique_quartet(4, &w).unwrap();
        let verts: Vec<&[usize]> = steps.iter().map(|s| s.verts()).collect();
        assert_eq!(
            verts,
            vec![
                &[0, 1, 4, 5][..],
                &[0, 1, 6, 7][..],
                &[2, 3, 4, 5][..],
                &[2, 3, 6, 7][..]
            ]
        );
    }

    fn biclique_graph(a: usize, b: usize) -> LeftGraph {
        let edges: Vec<(usize, usize)> = (0..a)
            .flat_map(|u| (a..a + b).map(move |v| (u, v)))
            .collect();
        LeftGraph::from_edges(a + b, &edges).unwrap()
    }

    #[test]
    fn quartet_flip_counts_match_parity() {
        // Even k = 4 flips k^2 = 16 pairs; odd k = 5 flips k^2 - 1 = 24.
        for (k, big, small, expect) in [(4usize, 4usize, 4usize, 16usize), (5, 6, 4, 24)] {
            let n = big + small;
            let t = Tournament::random(n, 11 + k as u64);
            let g = LeftGraph::complete(n);
            let w = BicliqueWitness::new(
                (0..big).collect(),
                (big..n).collect(),
                &g,
            )
            .unwrap();
            let steps = biclique_quartet(k, &w).unwrap();
            assert!(steps.iter().all(|s| s.len() == k));
            let r = t.invert_all(steps.iter()).unwrap();
            let mut flipped = 0;
            let mut within = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if t.has_edge(i, j) != r.has_edge(i, j) {
                        flipped += 1;
                        if (i < big) == (j < big) {
                            within += 1;
                        }
                    }
                }
            }
            assert_eq!(flipped, expect, "k={k}");
            assert_eq!(within, 0, "within-part pair changed for k={k}");
        }
    }

    #[test]
    fn quartet_rejects_bad_shapes() {
        let g = biclique_graph(4, 4);
        let w = BicliqueWitness::new(vec![0, 1, 2, 3], vec![4, 5, 6, 7], &g).unwrap();
        assert!(biclique_quartet(5, &w).is_err());
        assert!(biclique_quartet(3, &w).is_err());
    }

    #[test]
    fn biclique_search_finds_planted_and_respects_budget() {
        let g = biclique_graph(5, 3);
        let mut budget = 1_000_000;
        let w = find_biclique(&g, 5, 3, &mut budget).unwrap();
        assert_eq!(w.left_part.len(), 5);
        assert_eq!(w.right_part.len(), 3);

        let mut tiny = 0usize;
        assert!(find_biclique(&g, 5, 3, &mut tiny).is_none());

        // Sparse graph: no K_{3,3}.
        let sparse = LeftGraph::from_edges(8, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        let mut b = 1_000_000;
        assert!(find_biclique(&sparse, 3, 3, &mut b).is_none());
    }
}
