//! Canonical forms for isomorphism handling.
//!
//! Tournaments are canonicalized to the lexicographically minimal row-major
//! bit string over all vertex relabelings — the same order the on-disk
//! format uses, so the canonical key doubles as the file representation.
//! Undirected graphs (LP memo keys) use a column-major minimal string found
//! by a prefix-pruned labeling search, which is much faster and free to use
//! its own bit order since it never leaves memory.

use crate::error::{Error, Result};
use crate::tournament::{pair_count, LeftGraph, Tournament};

/// Minimal row-major bit key of `t` over all relabelings. Exact but brute
/// force (all `n!` orders with early abort); intended for n <= 8.
pub fn canonical_tournament_key(t: &Tournament) -> Result<u64> {
    let n = t.n();
    if n > 8 {
        return Err(Error::capacity(format!(
            "tournament canonicalization scans n! relabelings; n={n} > 8"
        )));
    }
    let pairs = pair_count(n);
    let mut best = u64::MAX >> (64 - pairs.max(1));

    // ord[p] = original vertex placed at new label p.
    let mut ord: Vec<usize> = (0..n).collect();
    permute(&mut ord, 0, &mut |ord| {
        let mut key = 0u64;
        let mut undecided = false; // strictly below best already?
        for i in 0..n {
            for j in i + 1..n {
                let bit = t.has_edge(ord[i], ord[j]) as u64;
                key = key << 1 | bit;
                if !undecided {
                    let p = pair_count(n) - (pair_index_rm(n, i, j) + 1);
                    let best_bit = best >> p & 1;
                    if bit > best_bit {
                        return; // prefix exceeds best: abandon this order
                    }
                    if bit < best_bit {
                        undecided = true;
                    }
                }
            }
        }
        best = best.min(key);
    });
    Ok(best)
}

#[inline]
fn pair_index_rm(n: usize, i: usize, j: usize) -> usize {
    i * n - i * (i + 1) / 2 + (j - i - 1)
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

/// The canonical representative as a tournament.
pub fn canonical_tournament(t: &Tournament) -> Result<Tournament> {
    Tournament::from_bit_key(t.n(), canonical_tournament_key(t)?)
}

/// Isomorphism-invariant key for an undirected graph on up to 11 vertices.
///
/// Minimizes the column-major bit string: labels are assigned one at a time
/// and the chunk appended at level `m` is the adjacency of the new vertex to
/// labels `0..m`, so the known prefix is contiguous and branches that exceed
/// the best prefix are cut immediately.
pub fn canonical_graph_key(g: &LeftGraph) -> Result<u64> {
    let n = g.n();
    let pairs = pair_count(n);
    if pairs > 64 {
        return Err(Error::capacity(format!("graph key needs n <= 11, got n={n}")));
    }
    if n <= 1 {
        return Ok(0);
    }
    let total = pairs as u32;
    let mut best = u64::MAX >> (64 - pairs);
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];

    fn dfs(
        g: &LeftGraph,
        n: usize,
        total: u32,
        prefix: u64,
        prefix_len: u32,
        chosen: &mut Vec<usize>,
        used: &mut [bool],
        best: &mut u64,
    ) {
        let m = chosen.len();
        if m == n {
            if prefix < *best {
                *best = prefix;
            }
            return;
        }
        for w in 0..n {
            if used[w] {
                continue;
            }
            let mut chunk = 0u64;
            for &c in chosen.iter() {
                chunk = chunk << 1 | g.has_edge(w, c) as u64;
            }
            let new_len = prefix_len + m as u32;
            let new_prefix = prefix << m | chunk;
            if new_prefix > *best >> (total - new_len) {
                continue;
            }
            used[w] = true;
            chosen.push(w);
            dfs(g, n, total, new_prefix, new_len, chosen, used, best);
            chosen.pop();
            used[w] = false;
        }
    }

    dfs(g, n, total, 0, 0, &mut chosen, &mut used, &mut best);
    Ok(best)
}
