//! The Graham-Lehrer cellular basis of TL_d indexed by pairs of standard
//! two-row tableaux.

use std::collections::BTreeMap;
use std::fmt;

use crate::diagram::{tl_basis, HalfDiagram, TLDiagram, Tangle};
use crate::jw::sign_vectors;
use crate::TlError;

/// A standard tableau of shape (a, b) with a >= b and entries 1..a+b.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

impl Tableau {
    pub fn new(first: Vec<usize>, second: Vec<usize>) -> Result<Self, TlError> {
        let t = Self { first, second };
        let d = t.size();
        let mut all: Vec<usize> = t.first.iter().chain(&t.second).copied().collect();
        all.sort();
        let increasing = |r: &[usize]| r.windows(2).all(|w| w[0] < w[1]);
        let columns = t
            .second
            .iter()
            .enumerate()
            .all(|(c, &x)| t.first.get(c).is_some_and(|&y| y < x));
        if all != (1..=d).collect::<Vec<_>>() || !increasing(&t.first) || !increasing(&t.second) || !columns {
            return Err(TlError::InvalidTableau(t.to_string()));
        }
        Ok(t)
    }

    /// The tableau whose entry j sits in the first row iff eps_j = +1.
    pub fn from_signs(eps: &[i8]) -> Result<Self, TlError> {
        let (mut first, mut second) = (Vec::new(), Vec::new());
        for (j, &e) in eps.iter().enumerate() {
            if e == 1 {
                first.push(j + 1);
            } else {
                second.push(j + 1);
            }
        }
        Self::new(first, second)
    }

    pub fn size(&self) -> usize {
        self.first.len() + self.second.len()
    }

    /// a - b, the sl2 weight of the shape.
    pub fn weight(&self) -> usize {
        self.first.len() - self.second.len()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[usize]| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        write!(f, "[{} / {}]", row(&self.first), row(&self.second))
    }
}

/// Standard tableaux of shape with weight k and d boxes, in sign-vector
/// order.
pub fn standard_tableaux(d: usize, k: usize) -> Vec<Tableau> {
    sign_vectors(d)
        .into_iter()
        .filter(|e| e.iter().map(|&x| x as i64).sum::<i64>() == k as i64)
        .map(|e| Tableau::from_signs(&e).expect("admissible signs give standard tableaux"))
        .collect()
}

/// Cap each second-row entry, scanning left to right, with the largest
/// still unused first-row entry below it. Remaining points become through
/// strands.
pub fn tableau_to_half_diagram(t: &Tableau) -> HalfDiagram {
    let d = t.size();
    let mut used = vec![false; d + 1];
    let mut pairs = Vec::new();
    for &b in &t.second {
        let a = *t
            .first
            .iter()
            .rev()
            .find(|&&a| a < b && !used[a])
            .expect("standard tableaux always leave a partner");
        used[a] = true;
        used[b] = true;
        pairs.push((a - 1, b - 1));
    }
    let through: Vec<usize> = (1..=d).filter(|&p| !used[p]).collect();
    pairs.extend(through.iter().enumerate().map(|(k, &p)| (p - 1, d + k)));
    Tangle::new(d, through.len(), pairs).expect("the capping rule is planar")
}

/// A label (k, s, t) of the Graham-Lehrer basis.
pub type GlLabel = (usize, usize, usize);

/// The cell datum of TL_d with c_st = flip(x_s) o x_t.
#[derive(Clone, Debug)]
pub struct GlDatum {
    pub d: usize,
    /// Weights k = d, d-2, ... with their tableaux and half diagrams.
    pub cells: Vec<(usize, Vec<Tableau>, Vec<HalfDiagram>)>,
}

impl GlDatum {
    pub fn labels(&self) -> Vec<GlLabel> {
        self.cells
            .iter()
            .flat_map(|(k, ts, _)| {
                let n = ts.len();
                (0..n).flat_map(move |s| (0..n).map(move |t| (*k, s, t)))
            })
            .collect()
    }

    pub fn element(&self, label: GlLabel) -> TLDiagram {
        let (_, _, halves) = self.cells.iter().find(|c| c.0 == label.0).expect("weight in poset");
        let (c, loops) = halves[label.1]
            .flip()
            .compose(&halves[label.2])
            .expect("matching boundaries");
        debug_assert_eq!(loops, 0);
        c
    }

    pub fn elements(&self) -> Vec<TLDiagram> {
        self.labels().into_iter().map(|l| self.element(l)).collect()
    }

    /// Checks that the basis is the diagram basis, that flip exchanges s and
    /// t, and the cell multiplication rule for the generators U_i.
    pub fn verify(&self) -> GlReport {
        let mut report = GlReport::default();
        let labels = self.labels();
        let by_diagram: BTreeMap<TLDiagram, GlLabel> = labels.iter().map(|&l| (self.element(l), l)).collect();
        let basis = tl_basis(self.d);
        report.basis_ok = by_diagram.len() == labels.len() && basis.iter().all(|t| by_diagram.contains_key(t));
        if !report.basis_ok {
            report.witnesses.push("basis differs from the diagram basis".into());
        }
        report.involution_ok = labels
            .iter()
            .all(|&(k, s, t)| self.element((k, s, t)).flip() == self.element((k, t, s)));
        let mut generators = vec![Tangle::identity(self.d)];
        generators.extend((1..self.d).map(|i| Tangle::u(self.d, i).expect("valid generator")));
        report.expansion_ok = report.basis_ok;
        for (g, u) in generators.iter().enumerate() {
            for (k, ts, _) in &self.cells {
                let n = ts.len();
                for s in 0..n {
                    // the part of u o c_st in cell k: (s', loops), or None
                    let mut first: Option<Option<(usize, usize)>> = None;
                    for t in 0..n {
                        let (prod, loops) = u.compose(&self.element((*k, s, t))).expect("square");
                        let Some(&(k2, s2, t2)) = by_diagram.get(&prod) else {
                            continue;
                        };
                        if k2 > *k || (k2 == *k && t2 != t) {
                            report.expansion_ok = false;
                            report
                                .witnesses
                                .push(format!("generator {g} on c^{k}_{s},{t} leaves the cell"));
                        }
                        let top = (k2 == *k).then_some((s2, loops));
                        match first {
                            None => first = Some(top),
                            Some(f) if f != top => {
                                report.expansion_ok = false;
                                report
                                    .witnesses
                                    .push(format!("generator {g} on c^{k}_{s},{t} depends on t"));
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
        report
    }
}

#[derive(Clone, Debug, Default)]
pub struct GlReport {
    pub basis_ok: bool,
    pub involution_ok: bool,
    pub expansion_ok: bool,
    pub witnesses: Vec<String>,
}

impl GlReport {
    pub fn pass(&self) -> bool {
        self.basis_ok && self.involution_ok && self.expansion_ok
    }
}

pub fn graham_lehrer_basis(d: usize) -> GlDatum {
    let cells = (0..=d)
        .rev()
        .filter(|k| (d - k).is_multiple_of(2))
        .map(|k| {
            let ts = standard_tableaux(d, k);
            let halves = ts.iter().map(tableau_to_half_diagram).collect();
            (k, ts, halves)
        })
        .collect();
    GlDatum { d, cells }
}
