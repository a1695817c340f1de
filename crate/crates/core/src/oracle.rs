//! Brute-force ground truth at desk scale.
//!
//! These are deliberately simple exhaustive methods, independent of the
//! constructive pipelines they validate: breadth-first search over the whole
//! tournament space for `inv_k`, branch and bound over triangle lists for
//! integral packings, and full ordering enumeration for `inv_2`.

use crate::error::{Error, Result};
use crate::tournament::{pair_count, pair_index, LeftGraph, Tournament};

/// Caps for the BFS oracle.
#[derive(Debug, Clone)]
pub struct SearchBudget {
    pub max_vertices: usize,
    pub max_states: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_vertices: 6,
            max_states: 1 << 22,
        }
    }
}

/// Exact `inv_k`: minimum number of inversions of sets of size at most `k`
/// that make `t` acyclic.
///
/// BFS over the `2^(n(n-1)/2)` tournament states reachable by inversions;
/// the state key is the bit table itself, the visited set is a dense bitmap.
pub fn exact_inv_k(t: &Tournament, k: usize, budget: &SearchBudget) -> Result<usize> {
    let n = t.n();
    if k < 2 {
        return Err(Error::input("inversion sets have size at least 2"));
    }
    if n > budget.max_vertices {
        return Err(Error::capacity(format!(
            "BFS oracle budget allows n <= {}, got n={n}",
            budget.max_vertices
        )));
    }
    if n > 8 {
        return Err(Error::capacity(
            "BFS oracle state space is unmanageable beyond n = 8",
        ));
    }
    let pairs = pair_count(n);

    // One XOR mask per vertex subset of size 2..=min(k,n).
    let mut moves: Vec<u64> = Vec::new();
    let kmax = k.min(n);
    for subset in 1u32..1 << n {
        let size = subset.count_ones() as usize;
        if !(2..=kmax).contains(&size) {
            continue;
        }
        let mut mask = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                if subset >> i & 1 == 1 && subset >> j & 1 == 1 {
                    mask |= 1 << (pairs - 1 - pair_index(n, i, j));
                }
            }
        }
        moves.push(mask);
    }

    let start = t.bit_key()?;
    let acyclic = |state: u64| -> bool {
        let mut deg = [0usize; 8];
        for i in 0..n {
            for j in i + 1..n {
                let bit = state >> (pairs - 1 - pair_index(n, i, j)) & 1;
                if bit == 1 {
                    deg[i] += 1;
                } else {
                    deg[j] += 1;
                }
            }
        }
        let mut seen = [false; 8];
        for &d in &deg[..n] {
            if seen[d] {
                return false;
            }
            seen[d] = true;
        }
        true
    };

    if acyclic(start) {
        return Ok(0);
    }

    let mut visited = vec![0u64; ((1usize << pairs) + 63) / 64];
    let mark = |visited: &mut [u64], s: u64| {
        visited[(s / 64) as usize] |= 1 << (s % 64);
    };
    let seen = |visited: &[u64], s: u64| visited[(s / 64) as usize] >> (s % 64) & 1 == 1;

    mark(&mut visited, start);
    let mut frontier = vec![start];
    let mut visited_count = 1usize;
    let mut depth = 0usize;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for &s in &frontier {
            for &m in &moves {
                let ns = s ^ m;
                if seen(&visited, ns) {
                    continue;
                }
                if acyclic(ns) {
                    return Ok(depth);
                }
                mark(&mut visited, ns);
                visited_count += 1;
                if visited_count > budget.max_states {
                    return Err(Error::capacity(format!(
                        "BFS oracle exceeded {} states",
                        budget.max_states
                    )));
                }
                next.push(ns);
            }
        }
        frontier = next;
    }
    unreachable!("inverting single pairs always reaches a transitive tournament");
}

/// Exact maximum number of pairwise edge-disjoint triangles, by branch and
/// bound over the triangle list.
pub fn exact_nu3(g: &LeftGraph) -> Result<usize> {
    let n = g.n();
    if n > 9 {
        return Err(Error::capacity(format!(
            "integral packing oracle supports n <= 9, got n={n}"
        )));
    }
    let mut triangles: Vec<[usize; 3]> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    triangles.push([a, b, c]);
                }
            }
        }
    }
    let edge_bit = |u: usize, v: usize| pair_index(n, u.min(v), u.max(v));
    let masks: Vec<u64> = triangles
        .iter()
        .map(|t| {
            1u64 << edge_bit(t[0], t[1]) | 1 << edge_bit(t[0], t[2]) | 1 << edge_bit(t[1], t[2])
        })
        .collect();

    fn rec(idx: usize, used: u64, count: usize, masks: &[u64], best: &mut usize) {
        if count + (masks.len() - idx) <= *best {
            return; // even taking every remaining triangle cannot beat best
        }
        if idx == masks.len() {
            *best = (*best).max(count);
            return;
        }
        if masks[idx] & used == 0 {
            rec(idx + 1, used | masks[idx], count + 1, masks, best);
        }
        rec(idx + 1, used, count, masks, best);
    }

    let mut best = 0;
    rec(0, 0, 0, &masks, &mut best);
    Ok(best)
}

/// Exact `inv_2` by enumerating all `n!` orderings.
pub fn brute_inv2(t: &Tournament) -> Result<usize> {
    let n = t.n();
    if n > 9 {
        return Err(Error::capacity(format!(
            "ordering enumeration supports n <= 9, got n={n}"
        )));
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    permute(&mut order, 0, &mut |ord| {
        let mut backward = 0;
        for a in 0..n {
            for b in a + 1..n {
                // ord[a] sits before ord[b]; the edge is backward if it
                // points from the later to the earlier vertex.
                if t.has_edge(ord[b], ord[a]) {
                    backward += 1;
                }
            }
        }
        best = best.min(backward);
    });
    Ok(best)
}

fn permute(xs: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == xs.len() {
        f(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permute(xs, k + 1, f);
        xs.swap(k, i);
    }
}
