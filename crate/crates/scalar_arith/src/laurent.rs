//! Laurent polynomials in v over the integers, the ring Z[v, v^-1].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::zpoly::{self, ZPoly};

/// Sparse Laurent polynomial. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// c * v^k
    pub fn monomial(c: impl Into<BigInt>, k: i32) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        Self { coeffs }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, BigInt)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i32) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    fn add_term(&mut self, k: i32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    /// Image under v -> v^-1.
    pub fn bar(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    /// Split into (shift, polynomial) with self = v^shift * poly(v).
    pub fn to_shifted_poly(&self) -> (i32, ZPoly) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut p = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (k, c) in &self.coeffs {
            p[(k - lo) as usize] = c.clone();
        }
        (lo, p)
    }

    pub fn from_shifted_poly(shift: i32, p: &[BigInt]) -> Self {
        Self {
            coeffs: p
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (shift + i as i32, c.clone()))
                .collect(),
        }
    }

    /// Exact quotient, or None if other does not divide self in Z[v, v^-1].
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        assert!(!other.is_zero(), "division by the zero Laurent polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (sa, pa) = self.to_shifted_poly();
        let (sb, pb) = other.to_shifted_poly();
        let (q, r) = zpoly::div_rem_z(&pa, &pb)?;
        if !r.is_empty() {
            return None;
        }
        Some(Self::from_shifted_poly(sa - sb, &q))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    pub fn is_bar_symmetric(&self) -> bool {
        *self == self.bar()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(*k, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, x) in &self.coeffs {
            for (b, y) in &rhs.coeffs {
                out.add_term(a + b, &(x * y));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().rev().map(|(k, c)| format!("{c}*v^{k}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The quantum integer [a] as a Laurent polynomial.
pub fn qint_laurent(a: i64) -> LaurentPoly {
    if a < 0 {
        return -&qint_laurent(-a);
    }
    LaurentPoly::from_terms((0..a).map(|i| ((a - 1 - 2 * i) as i32, BigInt::one())))
}

/// The quantum factorial [b]! as a Laurent polynomial.
pub fn qfact_laurent(b: u32) -> LaurentPoly {
    (1..=b as i64).fold(LaurentPoly::one(), |acc, k| &acc * &qint_laurent(k))
}

/// The quantum binomial [a choose b]; always a Laurent polynomial.
pub fn qbinom_laurent(a: i64, b: u32) -> LaurentPoly {
    let num = (0..b as i64).fold(LaurentPoly::one(), |acc, k| &acc * &qint_laurent(a - k));
    num.checked_div(&qfact_laurent(b))
        .expect("quantum binomial must be integral")
}
