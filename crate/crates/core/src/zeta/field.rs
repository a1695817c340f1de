//! Finite fields GF(q) for small prime powers, as explicit operation tables.
//!
//! Prime fields use modular arithmetic; GF(4), GF(8) and GF(9) are built
//! from polynomials modulo an irreducible: x^2+x+1 over GF(2), x^3+x+1 over
//! GF(2), and x^2+1 over GF(3). Elements are labeled 0..q-1 by base-p digit
//! packing of the coefficient vector, so 0 and 1 are the identities. Every
//! table is exhaustively checked against the field axioms at construction.

use crate::error::{Error, Result};

/// GF(q) with dense add/mul tables.
#[derive(Debug, Clone)]
pub struct FiniteField {
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
}

/// Supported orders: prime powers up to 9.
pub const SUPPORTED_ORDERS: [usize; 7] = [2, 3, 4, 5, 7, 8, 9];

fn prime_power(q: usize) -> Option<(usize, u32)> {
    for p in [2usize, 3, 5, 7] {
        let mut pk = p;
        let mut k = 1;
        while pk <= q {
            if pk == q {
                return Some((p, k));
            }
            pk *= p;
            k += 1;
        }
    }
    None
}

impl FiniteField {
    /// Constructs GF(q); `q` must be a prime power in `2..=9`.
    pub fn new(q: usize) -> Result<FiniteField> {
        let (p, k) = prime_power(q).ok_or_else(|| {
            Error::unsupported(format!(
                "q={q} is not a prime power; no orthogonal family construction is known"
            ))
        })?;
        if !SUPPORTED_ORDERS.contains(&q) {
            return Err(Error::unsupported(format!(
                "GF({q}) is outside the supported desk-scale range {SUPPORTED_ORDERS:?}"
            )));
        }

        // Monic irreducible modulus, low-degree coefficients first
        // (constant, x, ...), leading 1 implicit.
        let modulus: &[usize] = match (p, k) {
            (_, 1) => &[],
            (2, 2) => &[1, 1],    // x^2 + x + 1
            (2, 3) => &[1, 1, 0], // x^3 + x + 1
            (3, 2) => &[1, 0],    // x^2 + 1
            _ => unreachable!("orders are filtered above"),
        };

        let digits = |mut e: usize| -> Vec<usize> {
            let mut d = vec![0; k as usize];
            for slot in d.iter_mut() {
                *slot = e % p;
                e /= p;
            }
            d
        };
        let pack = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &c| acc * p + c) };

        let add_elems = |a: usize, b: usize| -> usize {
            let (da, db) = (digits(a), digits(b));
            let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            pack(&sum)
        };

        let mul_elems = |a: usize, b: usize| -> usize {
            if k == 1 {
                return a * b % p;
            }
            let (da, db) = (digits(a), digits(b));
            // Polynomial product, then reduce by the modulus.
            let mut prod = vec![0usize; 2 * k as usize - 1];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            for deg in (k as usize..prod.len()).rev() {
                let coef = prod[deg];
                if coef == 0 {
                    continue;
                }
                prod[deg] = 0;
                // x^deg = -modulus_tail * x^(deg-k)
                for (off, &m) in modulus.iter().enumerate() {
                    let idx = deg - k as usize + off;
                    prod[idx] = (prod[idx] + coef * (p - m) % p) % p;
                }
            }
            pack(&prod[..k as usize])
        };

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = add_elems(a, b) as u8;
                mul[a * q + b] = mul_elems(a, b) as u8;
            }
        }

        let field = FiniteField { q, add, mul };
        field.check_axioms()?;
        Ok(field)
    }

    pub fn q(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    /// Exhaustive axiom check over the tables: commutativity, associativity,
    /// identities, additive inverses, multiplicative inverses for nonzero
    /// elements, and distributivity.
    fn check_axioms(&self) -> Result<()> {
        let q = self.q;
        let fail = |msg: &str| Err(Error::input(format!("field axiom violated: {msg}")));
        for a in 0..q {
            if self.add(a, 0) != a {
                return fail("additive identity");
            }
            if self.mul(a, 1) != a {
                return fail("multiplicative identity");
            }
            if !(0..q).any(|b| self.add(a, b) == 0) {
                return fail("additive inverse");
            }
            if a != 0 && !(0..q).any(|b| self.mul(a, b) == 1) {
                return fail("multiplicative inverse");
            }
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) {
                    return fail("additive commutativity");
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail("multiplicative commutativity");
                }
                for c in 0..q {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail("additive associativity");
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail("multiplicative associativity");
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("distributivity");
                    }
                }
            }
        }
        Ok(())
    }
}
