//! Family averages and the randomized-restart zeta lower bound.
//!
//! For a tournament `Q` and an orthogonal family `P`, `avg_P(Q)` is the
//! exact mean of `nu3*(Q_L(sigma))` over the members of `P`. The zeta run
//! takes the minimum over a tournament database of the best composed-family
//! average found within a trial budget, optionally pruning a tournament as
//! soon as its best average reaches the running minimum (which cannot
//! change the result, only the work).

use crate::error::{Error, Result};
use crate::rng::{derive_seed, SplitMix64};
use crate::tournament::{Permutation, Tournament};
use crate::zeta::canon::canonical_graph_key;
use crate::zeta::family::OrthogonalFamily;
use crate::zeta::packing::fractional_triangle_packing;
use crate::Rational;
use num_traits::Zero;
use std::collections::HashMap;

/// Memo for `nu3*` over left graphs of a fixed vertex count: first by the
/// literal bit table, then by canonical form (isomorphic graphs recur
/// heavily across trials, and the LP is the dominant cost).
#[derive(Debug, Default)]
pub struct NuCache {
    raw: HashMap<u64, Rational>,
    canon: HashMap<u64, Rational>,
    pub lp_solves: usize,
    pub raw_hits: usize,
    pub canon_hits: usize,
}

impl NuCache {
    pub fn new() -> NuCache {
        NuCache::default()
    }

    fn nu3_star(&mut self, g: &crate::tournament::LeftGraph) -> Result<Rational> {
        let raw_key = g.bit_key()?;
        if let Some(v) = self.raw.get(&raw_key) {
            self.raw_hits += 1;
            return Ok(v.clone());
        }
        let canon_key = canonical_graph_key(g)?;
        if let Some(v) = self.canon.get(&canon_key) {
            self.canon_hits += 1;
            self.raw.insert(raw_key, v.clone());
            return Ok(v.clone());
        }
        let value = fractional_triangle_packing(g)?.value;
        self.lp_solves += 1;
        self.canon.insert(canon_key, value.clone());
        self.raw.insert(raw_key, value.clone());
        Ok(value)
    }
}

/// Exact mean of `nu3*(Q_L(sigma))` over the family members.
pub fn family_average(q_tournament: &Tournament, family: &OrthogonalFamily) -> Result<Rational> {
    let mut cache = NuCache::new();
    family_average_cached(q_tournament, family.perms(), &mut cache)
}

fn family_average_cached(
    q_tournament: &Tournament,
    perms: &[Permutation],
    cache: &mut NuCache,
) -> Result<Rational> {
    if perms.is_empty() {
        return Err(Error::input("empty permutation family"));
    }
    if perms[0].n() != q_tournament.n() {
        return Err(Error::input(format!(
            "family acts on {} elements but the tournament has {} vertices",
            perms[0].n(),
            q_tournament.n()
        )));
    }
    let mut sum = Rational::zero();
    for sigma in perms {
        sum += cache.nu3_star(&q_tournament.left_graph(sigma))?;
    }
    Ok(sum / Rational::new((perms.len() as i64).into(), 1.into()))
}

/// Knobs for a zeta run.
#[derive(Debug, Clone)]
pub struct ZetaOptions {
    /// Trial budget per tournament (the reference setting is 1000).
    pub trials: usize,
    pub seed: u64,
    /// Stop a tournament's trials once its best average reaches the running
    /// minimum. Never changes the result.
    pub prune: bool,
}

impl Default for ZetaOptions {
    fn default() -> Self {
        ZetaOptions {
            trials: 1000,
            seed: 1,
            prune: true,
        }
    }
}

/// Outcome of a zeta run.
#[derive(Debug, Clone)]
pub struct ZetaReport {
    pub q: usize,
    /// The certified lower bound: min over the database of the best
    /// composed-family average.
    pub zeta: Rational,
    /// `1/8 - zeta / (2q(q-1))`.
    pub bound: Rational,
    /// Database index attaining the minimum.
    pub worst_index: usize,
    pub worst_bits: String,
    pub total_trials: usize,
    pub lp_solves: usize,
    pub cache_hits: usize,
}

/// Computes a lower bound for `zeta_q` over a complete database of
/// `q`-vertex tournaments.
///
/// For each tournament the trial loop draws a fresh seeded random
/// permutation `pi`, evaluates the composed family `{sigma ∘ pi}` — `pi`
/// relabels the tournament's vertices before each member assigns positions,
/// which is the composition that reproduces the reference table — and keeps
/// the best exact average; the final value is the minimum of those bests.
/// Each tournament draws from its own sub-stream, derived from the run seed
/// and the tournament's bit table, so database order affects nothing but
/// the pruning work.
pub fn zeta_lower_bound(
    db: &[Tournament],
    family: &OrthogonalFamily,
    opts: &ZetaOptions,
) -> Result<ZetaReport> {
    if db.is_empty() {
        return Err(Error::input("empty tournament database"));
    }
    if opts.trials == 0 {
        return Err(Error::input("trial budget must be positive"));
    }
    let q = family.q();
    if let Some(bad) = db.iter().find(|t| t.n() != q) {
        return Err(Error::input(format!(
            "database tournament has {} vertices, family needs {q}",
            bad.n()
        )));
    }

    let mut cache = NuCache::new();
    let mut zeta: Option<Rational> = None;
    let mut worst_index = 0usize;
    let mut total_trials = 0usize;

    for (idx, tournament) in db.iter().enumerate() {
        let sub_seed = derive_seed(opts.seed, tournament.bit_key()?);
        let mut rng = SplitMix64::new(sub_seed);
        let mut best: Option<Rational> = None;
        let mut trial = 0usize;
        loop {
            if trial >= opts.trials {
                break;
            }
            if opts.prune {
                if let (Some(b), Some(z)) = (&best, &zeta) {
                    if b >= z {
                        break;
                    }
                }
            }
            trial += 1;
            let pi = Permutation::random(q, &mut rng);
            let composed: Vec<Permutation> =
                family.perms().iter().map(|s| s.compose(&pi)).collect();
            let avg = family_average_cached(tournament, &composed, &mut cache)?;
            if best.as_ref().is_none_or(|b| avg > *b) {
                best = Some(avg);
            }
        }
        total_trials += trial;
        let best = best.expect("at least one trial ran");
        if zeta.as_ref().is_none_or(|z| best < *z) {
            zeta = Some(best);
            worst_index = idx;
        }
    }

    let zeta = zeta.expect("nonempty database");
    let bound = bound_from_zeta(q, &zeta)?;
    Ok(ZetaReport {
        q,
        bound,
        worst_bits: db[worst_index].bit_string(),
        worst_index,
        total_trials,
        lp_solves: cache.lp_solves,
        cache_hits: cache.raw_hits + cache.canon_hits,
        zeta,
    })
}

/// The decycling constant implied by a zeta lower bound:
/// `1/8 - zeta / (2 q (q-1))`, exactly.
pub fn bound_from_zeta(q: usize, zeta: &Rational) -> Result<Rational> {
    if q < 4 {
        return Err(Error::input("the bound needs q >= 4"));
    }
    if zeta < &Rational::zero() {
        return Err(Error::input("zeta must be nonnegative"));
    }
    let eighth = Rational::new(1.into(), 8.into());
    let denom = Rational::new(((2 * q * (q - 1)) as i64).into(), 1.into());
    Ok(eighth - zeta / denom)
}
