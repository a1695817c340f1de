//! Constructive decycling.
//!
//! The pipelines turn a tournament transitive with inversion steps of size
//! at most `k`: greedily packed cliques of the left graph first, then local
//! gadgets (two 3-sets reverse a 4-cycle; four k-sets reverse a biclique),
//! and plain edge flips for whatever remains. Every stage strictly shrinks
//! the left graph, so the sequences are finite and verifiable.

pub mod gadget;
pub mod packing;
pub mod pipeline;

pub use gadget::{
    biclique_quartet, find_biclique, find_four_cycle, four_cycle_pair, BicliqueWitness,
    FourCycleCase, FourCycleWitness,
};
pub use packing::greedy_clique_packing;
pub use pipeline::{decycle3, decycle_best_of, decycle_k, verify_decycling};
