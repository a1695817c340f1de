//! Exact fractional triangle packing.
//!
//! `nu3*(G)` is the optimum of the LP that maximizes the total weight over
//! triangles of `G` subject to a load of at most 1 on every edge. The LP is
//! solved exactly; the result carries both the optimal weights and the dual
//! edge prices, which certify optimality (every triangle is priced at least
//! 1, total price equals the packing value).

use crate::error::Result;
use crate::tournament::LeftGraph;
use crate::zeta::simplex::{self, PackingLp};
use crate::Rational;
use num_traits::{One, Zero};

/// Optimal fractional triangle packing with its dual certificate.
#[derive(Debug, Clone)]
pub struct FractionalPacking {
    /// Triangles with nonzero weight, each weight in `[0, 1]`.
    pub weights: Vec<([usize; 3], Rational)>,
    /// The LP optimum `nu3*(G)`.
    pub value: Rational,
    /// Dual price per edge of `G`, aligned with `edges`.
    pub edges: Vec<(usize, usize)>,
    pub dual_prices: Vec<Rational>,
}

/// All triangles of `g` as sorted vertex triples, ascending.
pub fn triangles(g: &LeftGraph) -> Vec<[usize; 3]> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Solves the fractional triangle packing LP exactly.
pub fn fractional_triangle_packing(g: &LeftGraph) -> Result<FractionalPacking> {
    let tris = triangles(g);
    let edges = g.edges();

    if tris.is_empty() {
        return Ok(FractionalPacking {
            weights: Vec::new(),
            value: Rational::zero(),
            dual_prices: vec![Rational::zero(); edges.len()],
            edges,
        });
    }

    let edge_index: std::collections::HashMap<(usize, usize), usize> = edges
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();

    // One row per edge: sum of weights of triangles through it <= 1.
    let mut rows: Vec<(Vec<(usize, Rational)>, Rational)> = edges
        .iter()
        .map(|_| (Vec::new(), Rational::one()))
        .collect();
    for (t_idx, t) in tris.iter().enumerate() {
        for (u, v) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            let e = edge_index[&(u, v)];
            rows[e].0.push((t_idx, Rational::one()));
        }
    }

    let lp = PackingLp {
        num_vars: tris.len(),
        rows,
        objective: vec![Rational::one(); tris.len()],
    };
    let sol = simplex::solve(&lp)?;

    let weights = tris
        .into_iter()
        .zip(sol.primal)
        .filter(|(_, w)| !w.is_zero())
        .map(|(t, w)| (t, w))
        .collect();

    Ok(FractionalPacking {
        weights,
        value: sol.value,
        dual_prices: sol.dual,
        edges,
    })
}

/// Verifies the primal/dual certificate pair against the graph from scratch:
/// primal feasibility, dual feasibility, matching objectives, and the
/// unconditional `0 <= value <= |E|/3` bounds.
pub fn verify_certificate(g: &LeftGraph, p: &FractionalPacking) -> bool {
    let edge_index: std::collections::HashMap<(usize, usize), usize> = p
        .edges
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();

    // Primal: weights in [0,1], per-edge load at most 1, value = total.
    let mut load = vec![Rational::zero(); p.edges.len()];
    let mut total = Rational::zero();
    for (t, w) in &p.weights {
        if *w < Rational::zero() || *w > Rational::one() {
            return false;
        }
        if !(g.has_edge(t[0], t[1]) && g.has_edge(t[0], t[2]) && g.has_edge(t[1], t[2])) {
            return false;
        }
        for (u, v) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            let Some(&e) = edge_index.get(&(u, v)) else {
                return false;
            };
            load[e] += w;
        }
        total += w;
    }
    if load.iter().any(|l| *l > Rational::one()) || total != p.value {
        return false;
    }

    // Dual: prices nonnegative, every triangle priced at least 1, total
    // price equal to the primal value (strong duality).
    if p.dual_prices.len() != p.edges.len() {
        return false;
    }
    if p.dual_prices.iter().any(|y| *y < Rational::zero()) {
        return false;
    }
    for t in triangles(g) {
        let priced: Rational = [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]
            .iter()
            .map(|e| p.dual_prices[edge_index[e]].clone())
            .sum();
        if priced < Rational::one() {
            return false;
        }
    }
    let dual_total: Rational = p.dual_prices.iter().cloned().sum();
    if dual_total != p.value {
        return false;
    }

    // 0 <= value <= |E|/3.
    let edge_bound = Rational::new((p.edges.len() as i64).into(), 3.into());
    p.value >= Rational::zero() && p.value <= edge_bound
}
