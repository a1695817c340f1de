//! Greedy edge-disjoint clique packing.
//!
//! Repeatedly extracts a `K_k` from the residual graph and removes its
//! edges; the scan order is a seeded shuffle of the vertices, so runs are
//! reproducible and different seeds explore different packings. The result
//! is maximal by construction: the loop only stops when no `K_k` is left.

use crate::rng::SplitMix64;
use crate::tournament::LeftGraph;

/// Pairwise edge-disjoint `k`-cliques of `g`, maximal in the residual sense.
/// Each clique is returned with its vertices sorted ascending.
pub fn greedy_clique_packing(g: &LeftGraph, k: usize, seed: u64) -> Vec<Vec<usize>> {
    assert!(k >= 3, "clique packing needs k >= 3");
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    SplitMix64::new(seed).shuffle(&mut order);

    let mut residual = g.clone();
    let mut packed = Vec::new();
    while let Some(mut clique) = find_clique(&residual, &order, k) {
        for a in 0..clique.len() {
            for b in a + 1..clique.len() {
                residual.remove_edge(clique[a], clique[b]);
            }
        }
        clique.sort_unstable();
        packed.push(clique);
    }
    packed
}

/// First `k`-clique in scan order, or `None` if the graph has none.
fn find_clique(g: &LeftGraph, order: &[usize], k: usize) -> Option<Vec<usize>> {
    fn extend(
        g: &LeftGraph,
        order: &[usize],
        k: usize,
        start: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == k {
            return true;
        }
        // Not enough vertices left to finish the clique.
        if order.len() - start < k - chosen.len() {
            return false;
        }
        for idx in start..order.len() {
            let v = order[idx];
            if chosen.iter().all(|&u| g.has_edge(u, v)) {
                chosen.push(v);
                if extend(g, order, k, idx + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    let mut chosen = Vec::with_capacity(k);
    extend(g, order, k, 0, &mut chosen).then_some(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::exact_nu3;
    use crate::tournament::pair_count;

    #[test]
    fn single_triangle_is_packed() {
        let g = LeftGraph::complete(3);
        let p = greedy_clique_packing(&g, 3, 0);
        assert_eq!(p, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn triangle_free_packs_nothing() {
        let c5 = LeftGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(greedy_clique_packing(&c5, 3, 0).is_empty());
    }

    #[test]
    fn deterministic_given_seed() {
        let g = LeftGraph::complete(7);
        assert_eq!(
            greedy_clique_packing(&g, 3, 9),
            greedy_clique_packing(&g, 3, 9)
        );
    }

    /// On every graph with up to 6 vertices: packed cliques are complete and
    /// edge-disjoint, the residual has no further clique (maximality), and
    /// the exact integral packing number dominates the greedy size.
    #[test]
    fn exhaustive_soundness_up_to_six_vertices() {
        for n in 3..=6usize {
            for key in 0u64..1 << pair_count(n) {
                let mut edges = Vec::new();
                let mut p = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if key >> (pair_count(n) - 1 - p) & 1 == 1 {
                            edges.push((i, j));
                        }
                        p += 1;
                    }
                }
                let g = LeftGraph::from_edges(n, &edges).unwrap();
                let packed = greedy_clique_packing(&g, 3, key);

                let mut residual = g.clone();
                let mut seen = std::collections::HashSet::new();
                for tri in &packed {
                    assert_eq!(tri.len(), 3);
                    for a in 0..3 {
                        for b in a + 1..3 {
                            assert!(g.has_edge(tri[a], tri[b]), "not a clique");
                            assert!(seen.insert((tri[a], tri[b])), "edge reused");
                            residual.remove_edge(tri[a], tri[b]);
                        }
                    }
                }
                let order: Vec<usize> = (0..n).collect();
                assert!(find_clique(&residual, &order, 3).is_none(), "not maximal");
                assert!(exact_nu3(&g).unwrap() >= packed.len());
            }
        }
    }

    #[test]
    fn k4_packing_in_complete_graph() {
        let g = LeftGraph::complete(8);
        let packed = greedy_clique_packing(&g, 4, 1);
        assert!(!packed.is_empty());
        let mut seen = std::collections::HashSet::new();
        for c in &packed {
            assert_eq!(c.len(), 4);
            for a in 0..4 {
                for b in a + 1..4 {
                    assert!(seen.insert((c[a], c[b])));
                }
            }
        }
    }
}
