//! Balanced blowups: replace each seed vertex by a part of equal size.
//!
//! Cross-part ("outer") edges follow the seed tournament; within-part
//! ("inner") edges are oriented by a seeded stream, one derived sub-stream
//! per part so each part is reproducible on its own.

use crate::error::Result;
use crate::rng::{derive_seed, SplitMix64};
use crate::tournament::Tournament;

/// Recipe for an `r * part_size`-vertex balanced blowup.
#[derive(Debug, Clone)]
pub struct BlowupSpec {
    pub seed_tournament: Tournament,
    pub part_size: usize,
    pub inner_seed: u64,
}

/// A blowup together with its outer/inner pair classification.
#[derive(Debug, Clone)]
pub struct Blowup {
    pub tournament: Tournament,
    pub parts: usize,
    pub part_size: usize,
}

impl Blowup {
    /// Part containing vertex `v`; parts are contiguous blocks.
    pub fn part_of(&self, v: usize) -> usize {
        v / self.part_size
    }

    /// True iff the pair crosses two parts (its direction came from the seed).
    pub fn is_outer(&self, u: usize, v: usize) -> bool {
        self.part_of(u) != self.part_of(v)
    }

    pub fn outer_pair_count(&self) -> usize {
        let r = self.parts;
        let m = self.part_size;
        r * (r - 1) / 2 * m * m
    }

    pub fn inner_pair_count(&self) -> usize {
        self.parts * (self.part_size * (self.part_size - 1) / 2)
    }
}

/// Builds the balanced blowup of `spec.seed_tournament`.
pub fn balanced_blowup(spec: &BlowupSpec) -> Result<Blowup> {
    let r = spec.seed_tournament.n();
    let m = spec.part_size;
    if m == 0 {
        return Err(crate::error::Error::input("part_size must be positive"));
    }
    let n = r * m;

    let mut bits = Vec::with_capacity(n * (n - 1) / 2);
    let mut inner: Vec<SplitMix64> = (0..r)
        .map(|p| SplitMix64::new(derive_seed(spec.inner_seed, p as u64)))
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            let (pi, pj) = (i / m, j / m);
            let forward = if pi == pj {
                inner[pi].next_bool()
            } else {
                spec.seed_tournament.has_edge(pi, pj)
            };
            bits.push(forward);
        }
    }
    let tournament = Tournament::from_bits(n, &bits)?;
    Ok(Blowup {
        tournament,
        parts: r,
        part_size: m,
    })
}
