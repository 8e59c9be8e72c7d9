//! Planar tangles without crossings: perfect matchings of bottom and top
//! boundary points.
//!
//! Bottom points are numbered 0..bottom from left to right and top points
//! bottom..bottom+top from left to right.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::TlError;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Tangle {
    bottom: usize,
    top: usize,
    /// Sorted pairs (a, b) with a < b.
    pairs: Vec<(usize, usize)>,
}

/// A square tangle, an element of the diagram basis of TL_d.
pub type TLDiagram = Tangle;

/// A tangle from d bottom points to k top points whose top points all lie on
/// through strands.
pub type HalfDiagram = Tangle;

impl Tangle {
    pub fn new(bottom: usize, top: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, TlError> {
        let n = bottom + top;
        let mut pairs: Vec<(usize, usize)> = pairs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        pairs.sort();
        let mut seen = vec![false; n];
        for &(a, b) in &pairs {
            if b >= n || a == b || seen[a] || seen[b] {
                return Err(TlError::InvalidMatching(format!("{pairs:?}")));
            }
            seen[a] = true;
            seen[b] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(TlError::InvalidMatching(format!("{pairs:?}")));
        }
        let t = Self { bottom, top, pairs };
        if !t.is_planar() {
            return Err(TlError::NonPlanar(t.to_string()));
        }
        Ok(t)
    }

    pub fn identity(d: usize) -> Self {
        Self {
            bottom: d,
            top: d,
            pairs: (0..d).map(|i| (i, d + i)).collect(),
        }
    }

    /// U_i for 1 <= i < d: caps strands i, i+1 at the bottom and at the top.
    pub fn u(d: usize, i: usize) -> Result<Self, TlError> {
        if i == 0 || i >= d {
            return Err(TlError::InvalidMatching(format!("U_{i} in TL_{d}")));
        }
        let mut pairs: Vec<_> = (0..d).filter(|&k| k + 1 != i && k != i).map(|k| (k, d + k)).collect();
        pairs.push((i - 1, i));
        pairs.push((d + i - 1, d + i));
        Self::new(d, d, pairs)
    }

    /// The cap from two bottom points to nothing.
    pub fn cap() -> Self {
        Self {
            bottom: 2,
            top: 0,
            pairs: vec![(0, 1)],
        }
    }

    /// The cup from nothing to two top points.
    pub fn cup() -> Self {
        Self::cap().flip()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn is_square(&self) -> bool {
        self.bottom == self.top
    }

    /// Position of a point when bottom points are read left to right and then
    /// top points right to left.
    fn circular(&self, p: usize) -> usize {
        if p < self.bottom {
            p
        } else {
            self.bottom + self.top - 1 - (p - self.bottom)
        }
    }

    /// Nested-parentheses test on the circular order.
    pub fn is_planar(&self) -> bool {
        let n = self.bottom + self.top;
        let mut partner = vec![0; n];
        for &(a, b) in &self.pairs {
            let (x, y) = (self.circular(a), self.circular(b));
            partner[x] = y;
            partner[y] = x;
        }
        let mut stack = Vec::new();
        for (x, &px) in partner.iter().enumerate().take(n) {
            if px > x {
                stack.push(x);
            } else if stack.pop() != Some(px) {
                return false;
            }
        }
        true
    }

    /// Number of strands joining a bottom point to a top point.
    pub fn through_strands(&self) -> usize {
        self.pairs
            .iter()
            .filter(|(a, b)| *a < self.bottom && *b >= self.bottom)
            .count()
    }

    /// Turn the picture upside down.
    pub fn flip(&self) -> Self {
        let map = |p: usize| if p < self.bottom { self.top + p } else { p - self.bottom };
        let mut pairs: Vec<_> = self
            .pairs
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (map(a), map(b));
                (x.min(y), x.max(y))
            })
            .collect();
        pairs.sort();
        Self {
            bottom: self.top,
            top: self.bottom,
            pairs,
        }
    }

    /// Place `other` to the right of `self`.
    pub fn juxtapose(&self, other: &Self) -> Self {
        let (b1, t1, b2) = (self.bottom, self.top, other.bottom);
        let left = |p: usize| if p < b1 { p } else { p + b2 };
        let right = |p: usize| if p < b2 { p + b1 } else { p + b1 + t1 };
        let mut pairs: Vec<_> = self
            .pairs
            .iter()
            .map(|&(a, b)| (left(a), left(b)))
            .chain(other.pairs.iter().map(|&(a, b)| (right(a), right(b))))
            .map(|(x, y)| (x.min(y), x.max(y)))
            .collect();
        pairs.sort();
        Self {
            bottom: b1 + b2,
            top: t1 + other.top,
            pairs,
        }
    }

    /// Stack `self` on top of `x`; returns the tangle and the number of
    /// closed loops removed.
    pub fn compose(&self, x: &Self) -> Result<(Self, usize), TlError> {
        if self.bottom != x.top {
            return Err(TlError::StrandMismatch {
                left: self.bottom,
                right: x.top,
            });
        }
        // nodes: x points 0..xb+xt, then y points offset by xb+xt
        let (xb, m) = (x.bottom, x.top);
        let off = xb + m;
        let n = off + self.bottom + self.top;
        let mut adj = vec![usize::MAX; n];
        for &(a, b) in &x.pairs {
            adj[a] = b;
            adj[b] = a;
        }
        for &(a, b) in &self.pairs {
            adj[off + a] = off + b;
            adj[off + b] = off + a;
        }
        // the middle point j is x's top xb+j and y's bottom off+j
        let glue = |p: usize| -> Option<usize> {
            if (xb..xb + m).contains(&p) {
                Some(off + (p - xb))
            } else if (off..off + m).contains(&p) {
                Some(xb + (p - off))
            } else {
                None
            }
        };
        let outer = |p: usize| -> Option<usize> {
            if p < xb {
                Some(p)
            } else if p >= off + m {
                Some(xb + (p - off - m))
            } else {
                None
            }
        };
        let mut visited = vec![false; n];
        let mut pairs = Vec::new();
        for start in (0..xb).chain(off + m..n) {
            if visited[start] {
                continue;
            }
            visited[start] = true;
            let mut p = adj[start];
            loop {
                visited[p] = true;
                if let Some(end) = outer(p) {
                    let s = outer(start).unwrap();
                    pairs.push((s.min(end), s.max(end)));
                    break;
                }
                let q = glue(p).unwrap();
                visited[q] = true;
                p = adj[q];
            }
        }
        let mut loops = 0;
        for start in xb..xb + m {
            if visited[start] {
                continue;
            }
            loops += 1;
            let mut p = start;
            loop {
                visited[p] = true;
                let q = adj[p];
                visited[q] = true;
                p = glue(q).unwrap();
                if visited[p] {
                    break;
                }
            }
        }
        pairs.sort();
        Ok((
            Self {
                bottom: xb,
                top: self.top,
                pairs,
            },
            loops,
        ))
    }

    /// Text form `d; (a,b) ...` with 1-based points (square tangles) or
    /// `b/t; (a,b) ...` in general.
    pub fn to_text(&self) -> String {
        let head = if self.is_square() {
            self.bottom.to_string()
        } else {
            format!("{}/{}", self.bottom, self.top)
        };
        let body: Vec<String> = self
            .pairs
            .iter()
            .map(|(a, b)| format!("({},{})", a + 1, b + 1))
            .collect();
        format!("{head}; {}", body.join(" ")).trim_end().to_string()
    }

    pub fn from_text(s: &str) -> Result<Self, TlError> {
        let err = || TlError::Parse(s.to_string());
        let (head, body) = s.split_once(';').ok_or_else(err)?;
        let (bottom, top) = match head.trim().split_once('/') {
            Some((b, t)) => (
                b.trim().parse().map_err(|_| err())?,
                t.trim().parse().map_err(|_| err())?,
            ),
            None => {
                let d: usize = head.trim().parse().map_err(|_| err())?;
                (d, d)
            }
        };
        let mut pairs = Vec::new();
        for chunk in body.split(')').map(str::trim).filter(|c| !c.is_empty()) {
            let inner = chunk.strip_prefix('(').ok_or_else(err)?;
            let (a, b) = inner.split_once(',').ok_or_else(err)?;
            let a: usize = a.trim().parse().map_err(|_| err())?;
            let b: usize = b.trim().parse().map_err(|_| err())?;
            if a == 0 || b == 0 {
                return Err(err());
            }
            pairs.push((a - 1, b - 1));
        }
        Self::new(bottom, top, pairs)
    }
}

impl fmt::Display for Tangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Non-crossing perfect matchings of the points 0..n on a circle.
fn circle_matchings(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if points.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in (1..points.len()).step_by(2) {
        let inside = circle_matchings(&points[1..k]);
        let outside = circle_matchings(&points[k + 1..]);
        for a in &inside {
            for b in &outside {
                let mut m = vec![(points[0], points[k])];
                m.extend(a);
                m.extend(b);
                out.push(m);
            }
        }
    }
    out
}

/// All planar tangles with the given boundary, in sorted order.
pub fn tangles(bottom: usize, top: usize) -> Vec<Tangle> {
    let n = bottom + top;
    if n % 2 == 1 {
        return Vec::new();
    }
    let from_circular = |c: usize| if c < bottom { c } else { bottom + (n - 1 - c) };
    let points: Vec<usize> = (0..n).collect();
    let mut out: Vec<Tangle> = circle_matchings(&points)
        .into_iter()
        .map(|m| {
            let mut pairs: Vec<_> = m
                .into_iter()
                .map(|(a, b)| {
                    let (x, y) = (from_circular(a), from_circular(b));
                    (x.min(y), x.max(y))
                })
                .collect();
            pairs.sort();
            Tangle { bottom, top, pairs }
        })
        .collect();
    out.sort();
    out
}

/// The diagram basis of TL_d, memoized per d.
pub fn tl_basis(d: usize) -> Arc<Vec<TLDiagram>> {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, Arc<Vec<TLDiagram>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut guard = cache.lock().expect("diagram cache poisoned");
    guard.entry(d).or_insert_with(|| Arc::new(tangles(d, d))).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_are_catalan() {
        let counts: Vec<usize> = (1..=6).map(|d| tl_basis(d).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn crossing_is_rejected() {
        assert!(matches!(
            Tangle::new(2, 2, [(0, 3), (1, 2)]),
            Err(TlError::NonPlanar(_))
        ));
        assert!(Tangle::new(2, 2, [(0, 2), (1, 3)]).is_ok());
    }

    #[test]
    fn u_squared_forms_one_loop() {
        let u = Tangle::u(3, 1).unwrap();
        let (p, loops) = u.compose(&u).unwrap();
        assert_eq!((p, loops), (u, 1));
    }

    #[test]
    fn text_round_trip() {
        for t in tl_basis(4).iter() {
            assert_eq!(&Tangle::from_text(&t.to_text()).unwrap(), t);
        }
        assert_eq!(Tangle::identity(2).to_text(), "2; (1,3) (2,4)");
    }
}
