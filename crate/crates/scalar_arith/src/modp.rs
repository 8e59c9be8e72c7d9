//! Reduction of exact scalars to a prime field, used to certify ranks.
//!
//! A ring map from the coefficient ring into F_p never increases rank, so a
//! full-rank image proves full rank over the original field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::{Scalar, ScalarContext};

/// Default certificate prime; p - 1 is divisible by 2 * 45045, so it serves
/// every cyclotomic order dividing 45045.
pub const FAST_PRIME: u64 = 2_147_475_331;

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    (!a.is_multiple_of(p)).then(|| pow_mod(a, p - 2, p))
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// A ring map from the scalars of a context into F_p.
#[derive(Clone, Debug)]
pub struct ModpMap {
    pub p: u64,
    /// Image of v (generic), of z (cyclotomic) or of q (rational).
    pub v: u64,
}

impl ModpMap {
    /// Choose a prime and an image of the parameter from a seed.
    pub fn new(ctx: &ScalarContext, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let modulus: u64 = ctx.order().map_or(2, |l| 2 * l as u64);
        let mut p = FAST_PRIME;
        let rational_bad =
            matches!(ctx, ScalarContext::Rational(q) if bigint_mod(q.denom(), p) == 0 || bigint_mod(q.numer(), p) == 0);
        if !(FAST_PRIME - 1).is_multiple_of(modulus) || rational_bad {
            // primes p = 1 mod 2l below 2^31
            p = (1u64 << 31) - 1 - rng.gen_range(0..1u64 << 24);
            p -= (p - 1) % modulus;
            while !is_prime(p) {
                p -= modulus;
            }
        }
        let v = match ctx {
            ScalarContext::Generic => rng.gen_range(2..p - 1),
            ScalarContext::Cyclotomic(l) => {
                let l = *l as u64;
                let factors = prime_factors(l);
                loop {
                    let g = rng.gen_range(2..p - 1);
                    let z = pow_mod(g, (p - 1) / l, p);
                    if factors.iter().all(|q| pow_mod(z, l / q, p) != 1) {
                        break z;
                    }
                }
            }
            ScalarContext::Rational(q) => {
                let n = bigint_mod(q.numer(), p);
                let d = bigint_mod(q.denom(), p);
                mul_mod(n, inv_mod(d, p).expect("q denominator divisible by p"), p)
            }
        };
        Self { p, v }
    }

    fn eval_poly(&self, shift: i64, coeffs: &[BigInt]) -> u64 {
        let p = self.p;
        let mut acc = 0u64;
        for c in coeffs.iter().rev() {
            acc = (mul_mod(acc, self.v, p) + bigint_mod(c, p)) % p;
        }
        let vs = if shift >= 0 {
            pow_mod(self.v, shift as u64, p)
        } else {
            inv_mod(pow_mod(self.v, (-shift) as u64, p), p).unwrap()
        };
        mul_mod(acc, vs, p)
    }

    /// Image of a scalar, or None if a denominator vanishes mod p.
    pub fn reduce(&self, x: &Scalar) -> Option<u64> {
        let p = self.p;
        match x {
            Scalar::Gen(r) => {
                let n = self.eval_poly(r.shift() as i64, r.num());
                let d = self.eval_poly(0, r.den());
                Some(mul_mod(n, inv_mod(d, p)?, p))
            }
            Scalar::Cyc(c) => {
                let n = self.eval_poly(0, c.num());
                let d = bigint_mod(c.den(), p);
                Some(mul_mod(n, inv_mod(d, p)?, p))
            }
            Scalar::Rat(q) => {
                let n = bigint_mod(q.numer(), p);
                let d = bigint_mod(q.denom(), p);
                Some(mul_mod(n, inv_mod(d, p)?, p))
            }
        }
    }

    pub fn reduce_or_panic(&self, x: &Scalar) -> u64 {
        self.reduce(x)
            .expect("denominator vanishes modulo the certificate prime")
    }
}

pub fn bigint_mod(c: &BigInt, p: u64) -> u64 {
    let r = c.mod_floor(&BigInt::from(p));
    r.to_u64().unwrap()
}

/// Rank of a dense matrix over F_p (destroys the input). Entries must be
/// reduced and p must be below 2^32.
pub fn rank_mod_p(m: Vec<Vec<u64>>, p: u64) -> usize {
    assert!(p < 1 << 32, "certificate primes must be below 2^32");
    if p == FAST_PRIME {
        eliminate(m, p, |x| x % FAST_PRIME)
    } else {
        eliminate(m, p, |x| x % p)
    }
}

fn eliminate(mut m: Vec<Vec<u64>>, p: u64, red: impl Fn(u64) -> u64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = inv_mod(m[rank][c], p).unwrap();
        for x in m[rank][c..].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().take(rows).skip(rank + 1) {
            let f = row[c];
            if f == 0 {
                continue;
            }
            let g = p - f;
            for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x = red(*x + g * *y);
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
