//! Dense exact-rational simplex for small packing LPs.
//!
//! Solves `max c·x` subject to `A x <= b`, `x >= 0` with `b >= 0`, so the
//! slack basis is feasible and no phase-1 is needed. Pivoting follows
//! Bland's rule (lowest eligible variable index in, lowest basic variable
//! index among ratio ties out), which cannot cycle, so termination is
//! unconditional. All arithmetic is arbitrary-precision rational; the
//! returned dual vector is read off the slack columns of the final tableau
//! and certifies optimality exactly.

use crate::error::{Error, Result};
use crate::Rational;
use num_traits::{One, Zero};

/// `max c·x  s.t.  A x <= b, x >= 0` with sparse constraint rows.
#[derive(Debug, Clone)]
pub struct PackingLp {
    pub num_vars: usize,
    /// Rows `(coefficients, rhs)`; every rhs must be nonnegative.
    pub rows: Vec<(Vec<(usize, Rational)>, Rational)>,
    pub objective: Vec<Rational>,
}

/// Exact optimum with primal and dual solutions.
#[derive(Debug, Clone)]
pub struct LpSolution {
    pub value: Rational,
    pub primal: Vec<Rational>,
    /// One multiplier per constraint row; feasible for the dual and with
    /// `b·dual` equal to `value`.
    pub dual: Vec<Rational>,
}

pub fn solve(lp: &PackingLp) -> Result<LpSolution> {
    let nv = lp.num_vars;
    let m = lp.rows.len();
    let total = nv + m;
    if lp.objective.len() != nv {
        return Err(Error::input("objective length mismatch"));
    }

    // Tableau rows: [structural | slack | rhs].
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for (r, (coeffs, rhs)) in lp.rows.iter().enumerate() {
        if rhs < &Rational::zero() {
            return Err(Error::input("packing LP requires nonnegative rhs"));
        }
        let mut row = vec![Rational::zero(); total + 1];
        for (j, c) in coeffs {
            if *j >= nv {
                return Err(Error::input("constraint column out of range"));
            }
            row[*j] = c.clone();
        }
        row[nv + r] = Rational::one();
        row[total] = rhs.clone();
        rows.push(row);
    }

    // Reduced-cost row; its rhs cell accumulates minus the objective value.
    let mut obj = vec![Rational::zero(); total + 1];
    obj[..nv].clone_from_slice(&lp.objective);

    let mut basis: Vec<usize> = (nv..total).collect();

    loop {
        // Bland: entering variable = lowest index with positive reduced cost.
        let Some(enter) = (0..total).find(|&j| obj[j] > Rational::zero()) else {
            break;
        };

        // Ratio test; ties resolved by lowest basic variable index.
        let mut leave: Option<usize> = None;
        let mut best_ratio: Option<Rational> = None;
        for r in 0..m {
            if rows[r][enter] <= Rational::zero() {
                continue;
            }
            let ratio = &rows[r][total] / &rows[r][enter];
            let better = match &best_ratio {
                None => true,
                Some(b) => {
                    ratio < *b || (ratio == *b && basis[r] < basis[leave.expect("set with ratio")])
                }
            };
            if better {
                best_ratio = Some(ratio);
                leave = Some(r);
            }
        }
        let Some(pivot_row) = leave else {
            return Err(Error::input("LP is unbounded"));
        };

        // Pivot.
        let pivot = rows[pivot_row][enter].clone();
        for cell in rows[pivot_row].iter_mut() {
            *cell /= &pivot;
        }
        for r in 0..m {
            if r == pivot_row || rows[r][enter].is_zero() {
                continue;
            }
            let factor = rows[r][enter].clone();
            for j in 0..=total {
                if !rows[pivot_row][j].is_zero() {
                    let delta = &factor * &rows[pivot_row][j];
                    rows[r][j] -= delta;
                }
            }
        }
        if !obj[enter].is_zero() {
            let factor = obj[enter].clone();
            for j in 0..=total {
                if !rows[pivot_row][j].is_zero() {
                    let delta = &factor * &rows[pivot_row][j];
                    obj[j] -= delta;
                }
            }
        }
        basis[pivot_row] = enter;
    }

    let mut primal = vec![Rational::zero(); nv];
    for r in 0..m {
        if basis[r] < nv {
            primal[basis[r]] = rows[r][total].clone();
        }
    }
    let dual: Vec<Rational> = (0..m).map(|r| -obj[nv + r].clone()).collect();
    let value = -obj[total].clone();
    Ok(LpSolution {
        value,
        primal,
        dual,
    })
}
