//! Tournament inversion toolkit.
//!
//! A tournament is an orientation of the complete graph. Inverting a vertex
//! set `X` reverses every edge with both endpoints in `X`; a decycling
//! sequence is a list of such inversions that leaves the tournament acyclic
//! (equivalently, transitive). This crate provides:
//!
//! - the core data model: bit-packed tournaments, permutations, left graphs,
//!   balanced blowups, exact minimum feedback edge sets, and a line-based
//!   on-disk format ([`tournament`], [`feedback`], [`blowup`], [`io`]);
//! - constructive decycling pipelines for step sizes capped at `k`, built
//!   from triangle packings, a 4-cycle two-triple gadget, and a biclique
//!   quartet gadget ([`construct`]);
//! - an exact certification pipeline for the packing constant `zeta_q`:
//!   finite fields, orthogonal permutation families, tournament enumeration
//!   up to isomorphism, and fractional triangle packing solved by exact
//!   rational simplex ([`zeta`]);
//! - brute-force oracles that ground-truth everything at desk scale
//!   ([`oracle`]).
//!
//! All values are immutable after construction and every operation is a pure
//! function of its inputs.

pub mod bits;
pub mod blowup;
pub mod construct;
pub mod error;
pub mod feedback;
pub mod io;
pub mod oracle;
pub mod rng;
pub mod tournament;
pub mod zeta;

pub use error::{Error, Result};
pub use tournament::{DecyclingSequence, InversionStep, LeftGraph, Permutation, Tournament};

/// Exact arbitrary-precision rational; carries LP values, family averages,
/// and zeta bounds without rounding.
pub type Rational = num_rational::BigRational;

/// Shorthand for a rational from an integer pair.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
