//! Weight and alcove combinatorics for quantum sl2 (computational) and sl3
//! (fixture checks at l = 3).
//!
//! Weights are shifted by rho before reflecting: an sl2 weight k sits at
//! k + 1, and the affine walls are the multiples of l in shifted coordinates.

use serde::{Deserialize, Serialize};

pub mod a2;

/// A dominant-or-not integral sl2 weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WeightA1(pub i64);

impl WeightA1 {
    pub fn is_dominant(self) -> bool {
        self.0 >= 0
    }
}

/// The affine reflection across the wall at shifted position l * r.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AffineReflectionA1 {
    pub r: i64,
}

impl AffineReflectionA1 {
    /// Dot action: lambda -> -(lambda + 1) - 1 + 2 l r.
    pub fn apply(self, lambda: i64, l: u32) -> i64 {
        2 * l as i64 * self.r - lambda - 2
    }

    /// Position of the wall in unshifted coordinates.
    pub fn wall(self, l: u32) -> i64 {
        l as i64 * self.r - 1
    }
}

/// 0 < lambda + 1 < l
pub fn in_fundamental_alcove(lambda: i64, l: u32) -> bool {
    0 < lambda + 1 && lambda + 1 < l as i64
}

/// lambda + 1 is divisible by l.
pub fn is_singular(lambda: i64, l: u32) -> bool {
    (lambda + 1).rem_euclid(l as i64) == 0
}

/// In the closure of the fundamental alcove: -1 <= lambda <= l - 1.
pub fn in_closed_fundamental_alcove(lambda: i64, l: u32) -> bool {
    0 <= lambda + 1 && lambda < l as i64
}

/// Index of the alcove containing a regular weight (0 for the fundamental one).
pub fn alcove_index(lambda: i64, l: u32) -> i64 {
    (lambda + 1).div_euclid(l as i64)
}

/// Number of walls strictly between two weights.
pub fn walls_between(a: i64, b: i64, l: u32) -> usize {
    let (lo, hi) = (a.min(b) + 1, a.max(b) + 1);
    let l = l as i64;
    // multiples of l strictly inside (lo, hi)
    let count = (hi - 1).div_euclid(l) - lo.div_euclid(l);
    count.max(0) as usize
}

/// Dominant members of the W_l dot-orbit of lambda up to `bound`, ascending.
///
/// Orbit generation repeatedly reflects across the walls adjacent to the
/// current weight, which reaches every orbit member in the window.
pub fn linkage_class(lambda: i64, l: u32, bound: i64) -> Vec<i64> {
    let mut seen = std::collections::BTreeSet::new();
    let mut stack = vec![lambda];
    let lo = -2 - 2 * l as i64;
    let hi = bound + 2 * l as i64;
    while let Some(x) = stack.pop() {
        if x < lo || x > hi || !seen.insert(x) {
            continue;
        }
        let r = alcove_index(x, l);
        for wall in [r - 1, r, r + 1] {
            stack.push(AffineReflectionA1 { r: wall }.apply(x, l));
        }
    }
    seen.into_iter().filter(|&x| x >= 0 && x <= bound).collect()
}

/// Do two weights lie in the same W_l dot-orbit? With a generic parameter
/// every weight is alone.
pub fn linked(a: i64, b: i64, l: Option<u32>) -> bool {
    match l {
        None => a == b,
        Some(l) => {
            let (x, y) = ((a + 1).rem_euclid(2 * l as i64), (b + 1).rem_euclid(2 * l as i64));
            x == y || x == (2 * l as i64 - y).rem_euclid(2 * l as i64)
        }
    }
}

/// Partial order on sl2 weights: mu <= lambda iff lambda - mu is in 2N.
pub fn dominance_le(mu: i64, lambda: i64) -> bool {
    lambda >= mu && (lambda - mu) % 2 == 0
}

/// Is the Weyl module of highest weight lambda simple (characteristic zero,
/// q a primitive root of odd order l)? True iff lambda < l or lambda = -1 mod l.
pub fn weyl_module_is_simple(lambda: i64, l: Option<u32>) -> bool {
    match l {
        None => true,
        Some(l) => lambda < l as i64 || is_singular(lambda, l),
    }
}
