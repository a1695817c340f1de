//! Enumeration of tournaments up to isomorphism.
//!
//! Representatives are grown one vertex at a time: every canonical
//! `(n-1)`-vertex tournament is extended by all `2^(n-1)` orientation
//! patterns for a new vertex and the results are deduplicated by canonical
//! key. Deleting the last vertex of any `n`-vertex tournament lands in some
//! `(n-1)`-vertex class, so each level covers every class of the next.

use crate::error::{Error, Result};
use crate::tournament::{pair_count, Tournament};
use crate::zeta::canon::canonical_tournament_key;
use std::collections::BTreeSet;

/// Native enumeration cap; larger databases are produced offline and loaded
/// from `.tour` files.
pub const MAX_ENUMERATE: usize = 7;

/// Number of isomorphism classes of tournaments on 1..=9 vertices
/// (OEIS A000568).
pub const CLASS_COUNTS: [usize; 9] = [1, 1, 2, 4, 12, 56, 456, 6880, 191_536];

/// All tournaments on `q` vertices, one canonical representative per
/// isomorphism class (lexicographically minimal bit string), sorted.
pub fn enumerate_tournaments(q: usize) -> Result<Vec<Tournament>> {
    if q == 0 {
        return Err(Error::input("q must be positive"));
    }
    if q > MAX_ENUMERATE {
        return Err(Error::capacity(format!(
            "native enumeration supports q <= {MAX_ENUMERATE}; load a .tour database for q={q}"
        )));
    }

    let mut level: Vec<u64> = vec![0]; // the 1-vertex tournament
    for n in 2..=q {
        let mut keys: BTreeSet<u64> = BTreeSet::new();
        let prev_pairs = pair_count(n - 1);
        for &pk in &level {
            let parent = Tournament::from_bit_key(n - 1, pk)?;
            for pattern in 0u32..1 << (n - 1) {
                // Append vertex n-1; bit t of the pattern orients t -> n-1.
                let mut bits = Vec::with_capacity(pair_count(n));
                for i in 0..n - 1 {
                    for j in i + 1..n - 1 {
                        bits.push(parent.has_edge(i, j));
                    }
                    bits.push(pattern >> i & 1 == 1);
                }
                debug_assert_eq!(bits.len(), prev_pairs + n - 1);
                let t = Tournament::from_bits(n, &bits)?;
                keys.insert(canonical_tournament_key(&t)?);
            }
        }
        level = keys.into_iter().collect();
    }

    level
        .into_iter()
        .map(|k| Tournament::from_bit_key(q, k))
        .collect()
}

/// Checks a loaded database against the known class count for its size.
pub fn expected_class_count(q: usize) -> Option<usize> {
    CLASS_COUNTS.get(q - 1).copied()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_reference() {
        for (q, want) in [(1, 1), (2, 1), (3, 2), (4, 4), (5, 12), (6, 56)] {
            let ts = enumerate_tournaments(q).unwrap();
            assert_eq!(ts.len(), want, "q={q}");
        }
    }

    #[test]
    fn seven_vertices_has_456_classes() {
        assert_eq!(enumerate_tournaments(7).unwrap().len(), 456);
    }

    #[test]
    fn representatives_are_canonical_and_sorted() {
        let ts = enumerate_tournaments(5).unwrap();
        let keys: Vec<u64> = ts.iter().map(|t| t.bit_key().unwrap()).collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
        for t in &ts {
            assert_eq!(t.bit_key().unwrap(), canonical_tournament_key(t).unwrap());
        }
    }

    #[test]
    fn beyond_cap_is_capacity_error() {
        assert!(matches!(
            enumerate_tournaments(8),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn three_vertex_classes_are_transitive_and_cycle() {
        let ts = enumerate_tournaments(3).unwrap();
        assert_eq!(ts.len(), 2);
        assert!(ts.iter().any(|t| t.is_acyclic()));
        assert!(ts.iter().any(|t| !t.is_acyclic()));
    }
}
