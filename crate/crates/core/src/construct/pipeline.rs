//! End-to-end decycling pipelines and the verifier.
//!
//! `decycle_k` picks a seeded ordering, chooses the side of the pair
//! partition with the larger greedy `K_k` packing, inverts the packed
//! cliques, drains bicliques with the quartet gadget (k >= 4), then
//! 4-cycles with the two-triple gadget, and finally flips every remaining
//! left edge. After the last stage no pair points right-to-left, so the
//! result is transitive; the verifier checks that independently.

use crate::construct::gadget::{biclique_quartet, find_biclique, find_four_cycle, four_cycle_pair};
use crate::construct::packing::greedy_clique_packing;
use crate::error::{Error, Result};
use crate::rng::{derive_seed, SplitMix64};
use crate::tournament::{DecyclingSequence, InversionStep, Permutation, Tournament};

/// Node budget for the whole biclique-drain stage of one run.
pub const BICLIQUE_BUDGET: usize = 1_000_000;

/// True iff every step fits the cap and applying the whole sequence to `t`
/// yields an acyclic tournament. Out-of-range steps are simply not a
/// decycling of `t`.
pub fn verify_decycling(t: &Tournament, s: &DecyclingSequence) -> bool {
    if s.steps.iter().any(|x| x.len() < 2 || x.len() > s.k_cap) {
        return false;
    }
    match t.invert_all(&s.steps) {
        Ok(result) => result.is_acyclic(),
        Err(_) => false,
    }
}

/// Triangle-cap decycling: greedy triangle packing, then 4-cycle gadgets,
/// then single-edge flips. Every step has size at most 3.
pub fn decycle3(t: &Tournament, seed: u64) -> DecyclingSequence {
    run_pipeline(t, 3, seed).expect("k=3 pipeline cannot fail")
}

/// General pipeline for step sizes capped at `k >= 3`; `k = 3` delegates to
/// the triangle pipeline. `k = 2` is plain feedback edge removal — use
/// `min_feedback_edges` for that.
pub fn decycle_k(t: &Tournament, k: usize, seed: u64) -> Result<DecyclingSequence> {
    if k < 3 {
        return Err(Error::input(
            "decycling pipelines need k >= 3; for k = 2 compute a minimum feedback edge set",
        ));
    }
    run_pipeline(t, k, seed)
}

/// Best of `restarts` independent runs (fewest steps wins, first such run on
/// ties). Rep `i` uses the sub-seed derived from `(seed, i)`.
pub fn decycle_best_of(
    t: &Tournament,
    k: usize,
    seed: u64,
    restarts: usize,
) -> Result<DecyclingSequence> {
    if restarts == 0 {
        return Err(Error::input("need at least one restart"));
    }
    let mut best: Option<DecyclingSequence> = None;
    for rep in 0..restarts {
        let s = decycle_k(t, k, derive_seed(seed, rep as u64))?;
        if best.as_ref().is_none_or(|b| s.len() < b.len()) {
            best = Some(s);
        }
    }
    Ok(best.expect("restarts >= 1"))
}

fn run_pipeline(t: &Tournament, k: usize, seed: u64) -> Result<DecyclingSequence> {
    let n = t.n();
    let mut rng = SplitMix64::new(derive_seed(seed, 0));
    let pi = Permutation::random(n, &mut rng);

    // Side selection: the side whose left graph packs more K_k's greedily;
    // ties keep pi.
    let fwd = greedy_clique_packing(&t.left_graph(&pi), k, derive_seed(seed, 1));
    let rev = greedy_clique_packing(&t.left_graph(&pi.reversed()), k, derive_seed(seed, 2));
    let (pi, packing) = if rev.len() > fwd.len() {
        (pi.reversed(), rev)
    } else {
        (pi, fwd)
    };

    let mut current = t.clone();
    let mut steps: Vec<InversionStep> = Vec::new();

    // Stage 1: invert the packed cliques (each one flips left -> right).
    for clique in packing {
        let step = InversionStep::new(clique)?;
        current = current.invert(&step)?;
        steps.push(step);
    }

    // Stage 2 (k >= 4): drain bicliques with the quartet gadget.
    if k >= 4 {
        let (big, small) = if k % 2 == 0 { (k, k) } else { (k + 1, k - 1) };
        let mut budget = BICLIQUE_BUDGET;
        loop {
            let left = current.left_graph(&pi);
            let Some(witness) = find_biclique(&left, big, small, &mut budget) else {
                break;
            };
            for step in biclique_quartet(k, &witness)? {
                current = current.invert(&step)?;
                steps.push(step);
            }
        }
    }

    // Stage 3: drain 4-cycles two triples at a time.
    loop {
        let left = current.left_graph(&pi);
        let Some(witness) = find_four_cycle(&left, &pi) else {
            break;
        };
        let (x, y) = four_cycle_pair(&current, &pi, &witness)?;
        current = current.invert(&x)?;
        current = current.invert(&y)?;
        steps.push(x);
        steps.push(y);
    }

    // Stage 4: flip each remaining left edge.
    for (u, v) in current.left_graph(&pi).edges() {
        let step = InversionStep::new(vec![u, v])?;
        current = current.invert(&step)?;
        steps.push(step);
    }

    debug_assert!(current.is_acyclic());
    DecyclingSequence::new(k, steps)
}
