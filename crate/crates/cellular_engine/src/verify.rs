//! Checks of the cell datum axioms with witnesses for every failure.

use std::collections::BTreeMap;

use scalar_arith::linalg::inverse;
use scalar_arith::{Echelon, Mat, Scalar, SparseVec};
use serde::Serialize;
use tilting_combinatorics::end_dimension;

use crate::{CellDatum, Label};

/// Coordinates of endomorphisms of T in the cellular basis, read off from a
/// set of matrix positions on which the basis is independent.
pub struct Coordinates {
    pub labels: Vec<Label>,
    pub rank: usize,
    positions: Vec<(usize, usize)>,
    /// Inverse of the square matrix (c_e at position p).
    inv: Option<Mat>,
    index: BTreeMap<Label, usize>,
}

impl Coordinates {
    pub fn new(cd: &CellDatum) -> Self {
        let labels = cd.labels();
        let elements = cd.elements();
        let n = labels.len();
        let mut by_position: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
        for (e, m) in elements.iter().enumerate() {
            for (r, c, x) in m.triples() {
                by_position.entry((r, c)).or_default().push((e, x.clone()));
            }
        }
        let mut ech = Echelon::new(n);
        let mut positions = Vec::new();
        let mut rows = Vec::new();
        for (p, row) in by_position {
            if ech.insert(&row).is_some() {
                positions.push(p);
                rows.push(row);
                if positions.len() == n {
                    break;
                }
            }
        }
        let rank = positions.len();
        let inv = (rank == n)
            .then(|| inverse(&Mat::from_rows(n, rows), &cd.ctx().one()))
            .flatten();
        let index = labels.iter().enumerate().map(|(e, l)| (*l, e)).collect();
        Self {
            labels,
            rank,
            positions,
            inv,
            index,
        }
    }

    pub fn is_basis(&self) -> bool {
        self.inv.is_some()
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Coordinates of an element known to lie in the span of the basis.
    pub fn coords(&self, x: &Mat) -> Option<SparseVec> {
        let inv = self.inv.as_ref()?;
        let values: SparseVec = self
            .positions
            .iter()
            .enumerate()
            .filter_map(|(k, &(r, c))| x.get(r, c).map(|v| (k, v.clone())))
            .collect();
        // x[P] = M a with M rows indexed by positions
        Some(inv.mul_vec(&values))
    }

    /// Coordinates as a map from labels to nonzero scalars.
    pub fn expand(&self, x: &Mat) -> Option<BTreeMap<Label, Scalar>> {
        Some(self.coords(x)?.into_iter().map(|(e, v)| (self.labels[e], v)).collect())
    }
}

/// Outcome of `verify_cell_axioms`.
#[derive(Clone, Debug, Default, Serialize)]
pub struct AxiomReport {
    pub basis_size: usize,
    pub rank: usize,
    /// The sum over lambda of (T : Delta(lambda)) (T : nabla(lambda)).
    pub end_dimension: u64,
    pub rank_ok: bool,
    pub involution_ok: bool,
    pub expansion_ok: bool,
    pub products_checked: usize,
    /// Products whose expansion has a nonzero term in a strictly lower cell.
    pub lower_terms: usize,
    pub witnesses: Vec<String>,
}

impl AxiomReport {
    pub fn pass(&self) -> bool {
        self.rank_ok && self.involution_ok && self.expansion_ok
    }
}

fn show(l: &Label) -> String {
    format!("c^{}_{},{}", l.0, l.1 + 1, l.2 + 1)
}

/// Check basis rank, i(c_ij) = c_ji and the cell multiplication rule for
/// every basis element used as a generator.
pub fn verify_cell_axioms(cd: &CellDatum) -> AxiomReport {
    let generators = cd.elements();
    verify_cell_axioms_with(cd, &generators)
}

/// As `verify_cell_axioms` with an explicit generating set of End(T).
pub fn verify_cell_axioms_with(cd: &CellDatum, generators: &[Mat]) -> AxiomReport {
    let mut report = AxiomReport {
        basis_size: cd.len(),
        ..Default::default()
    };
    report.end_dimension = end_dimension(&cd.character()).unwrap_or(0);
    let coords = Coordinates::new(cd);
    report.rank = coords.rank;
    report.rank_ok = coords.is_basis() && report.rank as u64 == report.end_dimension;
    if !report.rank_ok {
        report.witnesses.push(format!(
            "basis of size {} has rank {} but dim End(T) = {}",
            report.basis_size, report.rank, report.end_dimension
        ));
    }

    report.involution_ok = true;
    for c in &cd.cells {
        for i in 0..c.size() {
            for j in 0..c.size() {
                if cd.involution(&c.element(i, j)) != c.element(j, i) {
                    report.involution_ok = false;
                    report
                        .witnesses
                        .push(format!("i({}) != {}", show(&(c.lambda, i, j)), show(&(c.lambda, j, i))));
                }
            }
        }
    }

    report.expansion_ok = coords.is_basis();
    if !coords.is_basis() {
        return report;
    }
    let zero = cd.ctx().zero();
    for (a, phi) in generators.iter().enumerate() {
        for c in &cd.cells {
            let lambda = c.lambda;
            let n = c.size();
            for i in 0..n {
                let left = phi.mul(&c.g_lift[i]);
                let mut r_first: Vec<Scalar> = Vec::new();
                for j in 0..n {
                    report.products_checked += 1;
                    let x = left.mul(&c.f_lift[j]);
                    let Some(exp) = coords.expand(&x) else {
                        report.expansion_ok = false;
                        continue;
                    };
                    let mut lower = false;
                    for &(mu, k, l) in exp.keys() {
                        if mu == lambda && l != j {
                            report.expansion_ok = false;
                            report.witnesses.push(format!(
                                "generator {a} o {} has a term on {}",
                                show(&(lambda, i, j)),
                                show(&(mu, k, l))
                            ));
                        } else if mu != lambda && !cd.le(mu, lambda) {
                            report.expansion_ok = false;
                            report.witnesses.push(format!(
                                "generator {a} o {} has a term on the higher cell {}",
                                show(&(lambda, i, j)),
                                show(&(mu, k, l))
                            ));
                        } else if mu != lambda {
                            lower = true;
                        }
                    }
                    report.lower_terms += lower as usize;
                    let r: Vec<Scalar> = (0..n)
                        .map(|k| exp.get(&(lambda, k, j)).cloned().unwrap_or_else(|| zero.clone()))
                        .collect();
                    if j == 0 {
                        r_first = r;
                    } else if r != r_first {
                        report.expansion_ok = false;
                        report.witnesses.push(format!(
                            "generator {a} o {}: coefficients depend on j",
                            show(&(lambda, i, j))
                        ));
                    }
                }
            }
        }
    }
    report
}

/// A copy of the datum with the lifts gbar_0 and gbar_1 of one cell swapped
/// while fbar is kept, so that i(c_ij) = c_ji breaks.
pub fn corrupt_by_swap(cd: &CellDatum) -> Option<CellDatum> {
    let mut bad = cd.clone();
    let cell = bad.cells.iter_mut().find(|c| c.size() >= 2)?;
    cell.g_lift.swap(0, 1);
    Some(bad)
}
