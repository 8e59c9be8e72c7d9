//! Type A2 at l = 3: alcove membership, wall sets, linkage and the
//! Kazhdan-Lusztig values of two weights, checked against hard-coded data.
//!
//! Coordinates are in the basis of fundamental weights. Simple roots are
//! a1 = (2, -1), a2 = (-1, 2), rho = (1, 1), and the highest root is (1, 1).

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WeightA2 {
    pub a1: i64,
    pub a2: i64,
}

impl WeightA2 {
    pub const fn new(a1: i64, a2: i64) -> Self {
        Self { a1, a2 }
    }

    pub fn is_dominant(self) -> bool {
        self.a1 >= 0 && self.a2 >= 0
    }

    fn shifted(self) -> (i64, i64) {
        (self.a1 + 1, self.a2 + 1)
    }

    fn unshift(b: (i64, i64)) -> Self {
        Self::new(b.0 - 1, b.1 - 1)
    }

    /// Pairings of lambda + rho with the positive coroots a1, a2, a1 + a2.
    pub fn coroot_pairings(self) -> [i64; 3] {
        let (b1, b2) = self.shifted();
        [b1, b2, b1 + b2]
    }
}

impl std::fmt::Display for WeightA2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.a1, self.a2)
    }
}

/// Interior of the fundamental alcove.
pub fn in_fundamental_alcove(lambda: WeightA2, l: u32) -> bool {
    let [b1, b2, b12] = lambda.coroot_pairings();
    b1 > 0 && b2 > 0 && b12 < l as i64
}

/// Which part of the boundary of the closed fundamental alcove a weight is on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlcovePosition {
    Interior,
    /// On a wall through -rho (a finite reflection hyperplane).
    NonAffineWall,
    /// On the affine wall; points on both kinds of wall are counted here.
    AffineWall,
    Outside,
}

pub fn alcove_position(lambda: WeightA2, l: u32) -> AlcovePosition {
    let [b1, b2, b12] = lambda.coroot_pairings();
    let l = l as i64;
    if b1 < 0 || b2 < 0 || b12 > l {
        AlcovePosition::Outside
    } else if b12 == l {
        AlcovePosition::AffineWall
    } else if b1 == 0 || b2 == 0 {
        AlcovePosition::NonAffineWall
    } else {
        AlcovePosition::Interior
    }
}

/// All integral weights on the given kind of wall of the closed fundamental alcove.
pub fn wall_set(l: u32, kind: AlcovePosition) -> BTreeSet<WeightA2> {
    let l = l as i64;
    let mut out = BTreeSet::new();
    for b1 in 0..=l {
        for b2 in 0..=l - b1 {
            let w = WeightA2::unshift((b1, b2));
            if alcove_position(w, l as u32) == kind {
                out.insert(w);
            }
        }
    }
    out
}

fn dot_generators(b: (i64, i64), l: i64) -> [(i64, i64); 4] {
    let (b1, b2) = b;
    let s = b1 + b2;
    [
        (-b1, b1 + b2),
        (b1 + b2, -b2),
        (b1 - (s - l), b2 - (s - l)),
        (b1 - (s + l), b2 - (s + l)),
    ]
}

/// Dot orbit of lambda intersected with a box of the given radius in shifted coordinates.
pub fn dot_orbit(lambda: WeightA2, l: u32, radius: i64) -> BTreeSet<WeightA2> {
    let l = l as i64;
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([lambda.shifted()]);
    while let Some(b) = queue.pop_front() {
        if b.0.abs() > radius || b.1.abs() > radius || (b.0 + b.1).abs() > radius {
            continue;
        }
        if !seen.insert(b) {
            continue;
        }
        queue.extend(dot_generators(b, l));
    }
    seen.into_iter().map(WeightA2::unshift).collect()
}

/// mu <= lambda iff lambda - mu is a nonnegative integral combination of simple roots.
pub fn dominance_le(mu: WeightA2, lambda: WeightA2) -> bool {
    let (d1, d2) = (lambda.a1 - mu.a1, lambda.a2 - mu.a2);
    let (n1, n2) = (2 * d1 + d2, d1 + 2 * d2);
    n1 >= 0 && n2 >= 0 && n1 % 3 == 0 && n2 % 3 == 0
}

/// Dominant weights linked to lambda and below it in the dominance order.
pub fn linkage_set(lambda: WeightA2, l: u32) -> BTreeSet<WeightA2> {
    let radius = 4 * (lambda.a1 + lambda.a2 + 2) + 4 * l as i64;
    dot_orbit(lambda, l, radius)
        .into_iter()
        .filter(|mu| mu.is_dominant() && dominance_le(*mu, lambda))
        .collect()
}

/// Number of affine reflection hyperplanes strictly separating two regular weights.
pub fn separating_hyperplanes(mu: WeightA2, lambda: WeightA2, l: u32) -> usize {
    let l = l as i64;
    mu.coroot_pairings()
        .iter()
        .zip(lambda.coroot_pairings())
        .map(|(&x, y)| {
            let (lo, hi) = (x.min(y), x.max(y));
            (lo + 1..hi).filter(|t| t % l == 0).count()
        })
        .sum()
}

/// A tabulated value n_{mu lambda}(v) = coefficient * v^exponent (coefficient 0 means zero).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KlEntry {
    pub lambda: WeightA2,
    pub mu: WeightA2,
    pub coefficient: i64,
    pub exponent: u32,
}

pub const NU: WeightA2 = WeightA2::new(1, 1);
pub const XI: WeightA2 = WeightA2::new(3, 3);

/// Parabolic affine KL values at l = 3 for lambda = (1,1) and (3,3).
pub fn kl_fixtures() -> Vec<KlEntry> {
    let e = |lambda, mu: (i64, i64), coefficient, exponent| KlEntry {
        lambda,
        mu: WeightA2::new(mu.0, mu.1),
        coefficient,
        exponent,
    };
    vec![
        e(NU, (1, 1), 1, 0),
        e(NU, (0, 0), 1, 1),
        e(XI, (3, 3), 1, 0),
        e(XI, (4, 1), 1, 1),
        e(XI, (1, 4), 1, 1),
        e(XI, (3, 0), 1, 2),
        e(XI, (0, 3), 1, 2),
        e(XI, (1, 1), 1, 3),
        e(XI, (0, 0), 0, 0),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureReport {
    pub checks: Vec<FixtureCheck>,
}

impl FixtureReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn show(ws: &BTreeSet<WeightA2>) -> String {
    ws.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ")
}

fn set(ws: &[(i64, i64)]) -> BTreeSet<WeightA2> {
    ws.iter().map(|&(a, b)| WeightA2::new(a, b)).collect()
}

/// Verify the l = 3 facts for sl3 by direct dot-action computation.
pub fn a2_fixture_checks() -> FixtureReport {
    let l = 3;
    let mut checks = Vec::new();
    let mut push = |name: &str, pass: bool, detail: String| {
        checks.push(FixtureCheck {
            name: name.to_string(),
            pass,
            detail,
        })
    };

    let dominant_in_a0: BTreeSet<WeightA2> = (0..6)
        .flat_map(|a| (0..6).map(move |b| WeightA2::new(a, b)))
        .filter(|w| in_fundamental_alcove(*w, l))
        .collect();
    push(
        "fundamental alcove meets X+ only in (0,0)",
        dominant_in_a0 == set(&[(0, 0)]),
        show(&dominant_in_a0),
    );

    let nonaffine = wall_set(l, AlcovePosition::NonAffineWall);
    push(
        "non-affine walls",
        nonaffine == set(&[(-1, -1), (-1, 0), (0, -1), (1, -1), (-1, 1)]),
        show(&nonaffine),
    );
    let affine = wall_set(l, AlcovePosition::AffineWall);
    push(
        "affine walls",
        affine == set(&[(1, 0), (0, 1), (2, -1), (-1, 2)]),
        show(&affine),
    );

    let link_nu = linkage_set(NU, l);
    push("linkage of (1,1)", link_nu == set(&[(0, 0), (1, 1)]), show(&link_nu));
    let link_xi = linkage_set(XI, l);
    push(
        "linkage of (3,3)",
        link_xi == set(&[(0, 0), (1, 1), (3, 0), (0, 3), (4, 1), (1, 4), (3, 3)]),
        show(&link_xi),
    );

    for entry in kl_fixtures() {
        let linked = linkage_set(entry.lambda, l).contains(&entry.mu);
        let walls = separating_hyperplanes(entry.mu, entry.lambda, l);
        let pass = linked && (entry.coefficient == 0 || walls == entry.exponent as usize);
        push(
            &format!("n_{}{}", entry.mu, entry.lambda),
            pass,
            format!(
                "value {}*v^{}, separating hyperplanes {walls}, linked {linked}",
                entry.coefficient, entry.exponent
            ),
        );
    }
    FixtureReport { checks }
}
