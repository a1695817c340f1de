//! Exact minimum feedback edge set by subset dynamic programming.
//!
//! For a tournament this equals `inv_2`: the minimum, over all orderings,
//! of the number of edges pointing from a later position to an earlier one.

use crate::error::{Error, Result};
use crate::tournament::{Permutation, Tournament};

/// Hard cap: the DP table has `2^n` states.
pub const MAX_FEEDBACK_VERTICES: usize = 20;

/// Minimum number of backward edges over all orderings, with a witness
/// ordering that attains it.
///
/// DP over subsets: `dp[S]` is the optimal backward-edge count when the
/// vertices of `S` occupy the first `|S|` positions. Extending `S` by `v`
/// placed last inside the prefix costs the edges from `v` into `S`.
pub fn min_feedback_edges(t: &Tournament) -> Result<(usize, Permutation)> {
    let n = t.n();
    if n > MAX_FEEDBACK_VERTICES {
        return Err(Error::capacity(format!(
            "subset DP supports n <= {MAX_FEEDBACK_VERTICES}, got n={n}"
        )));
    }

    // out_mask[v] = bitmask of out-neighbors of v.
    let mut out_mask = vec![0u32; n];
    for u in 0..n {
        for v in 0..n {
            if u != v && t.has_edge(u, v) {
                out_mask[u] |= 1 << v;
            }
        }
    }

    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut dp = vec![u32::MAX; full as usize + 1];
    let mut last = vec![u8::MAX; full as usize + 1];
    dp[0] = 0;
    for s in 1..=full {
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = s & !(1 << v);
            // Edges v -> (prev) become backward when v is placed after prev.
            let cost = dp[prev as usize] + (out_mask[v] & prev).count_ones();
            if cost < dp[s as usize] {
                dp[s as usize] = cost;
                last[s as usize] = v as u8;
            }
        }
    }

    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = last[s as usize] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();

    let mut pos = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    let witness = Permutation::from_pos(pos).expect("order is a bijection");

    Ok((dp[full as usize] as usize, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tournament::pair_count;

    #[test]
    fn transitive_has_no_feedback() {
        for n in [1, 2, 5, 9] {
            let (v, w) = min_feedback_edges(&Tournament::transitive(n)).unwrap();
            assert_eq!(v, 0);
            // Witness must realize the value.
            assert_eq!(
                Tournament::transitive(n)
                    .left_graph(&w.reversed())
                    .edge_count(),
                0
            );
        }
    }

    #[test]
    fn three_cycle_needs_one() {
        let bits = [true, false, true]; // 0->1->2->0
        let t = Tournament::from_bits(3, &bits).unwrap();
        let (v, w) = min_feedback_edges(&t).unwrap();
        assert_eq!(v, 1);
        assert_eq!(t.left_graph(&w.reversed()).edge_count(), 1);
    }

    #[test]
    fn witness_always_attains_value() {
        for seed in 0..30 {
            let t = Tournament::random(8, seed);
            let (v, w) = min_feedback_edges(&t).unwrap();
            assert_eq!(t.left_graph(&w.reversed()).edge_count(), v);
        }
    }

    #[test]
    fn zero_feedback_iff_acyclic() {
        for key in 0u64..1 << pair_count(5) {
            let t = Tournament::from_bit_key(5, key).unwrap();
            let (v, _) = min_feedback_edges(&t).unwrap();
            assert_eq!(v == 0, t.is_acyclic());
        }
    }

    #[test]
    fn too_large_is_a_capacity_error() {
        let t = Tournament::transitive(21);
        assert!(matches!(min_feedback_edges(&t), Err(Error::Capacity(_))));
    }
}
